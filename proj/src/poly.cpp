#include "tuttex/poly.hpp"

#include "tuttex/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tuttex {

void BiPoly::add_term(int i, int j, const Int& c) {
    if (c == 0) return;
    auto key = Key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::constant(const Int& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const Int& c) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

Int BiPoly::coefficient(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? Int(0) : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

Int BiPoly::evaluate(const Int& x, const Int& y) const {
    Int total = 0;
    for (const auto& [k, c] : terms_) {
        Int term = c;
        for (int q = 0; q < k.first; ++q) term *= x;
        for (int q = 0; q < k.second; ++q) term *= y;
        total += term;
    }
    return total;
}

BiPoly pow(const BiPoly& base, int exp) {
    BiPoly out = BiPoly::constant(1);
    for (int q = 0; q < exp; ++q) out *= base;
    return out;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Int& c,
                 const std::vector<std::pair<std::string, int>>& vars) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    bool any_var = false;
    for (const auto& [name, e] : vars) {
        if (e == 0) continue;
        any_var = true;
        parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    }
    if (mag != 1 || !any_var) parts.insert(parts.begin(), mag.str());
    for (size_t q = 0; q < parts.size(); ++q) {
        if (q) os << "*";
        os << parts[q];
    }
}

} // namespace

std::string BiPoly::canonical_string() const {
    if (terms_.empty()) return "0";
    // Pure x powers first, then ascending y degree: "x + x^2 + y".
    std::vector<std::pair<Key, Int>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return std::pair{a.first.second, a.first.first} < std::pair{b.first.second, b.first.first};
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ordered) {
        append_term(os, first, c, {{"x", k.first}, {"y", k.second}});
        first = false;
    }
    return os.str();
}

void UniPoly::add_term(int e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

UniPoly UniPoly::constant(const Int& c, std::string var) { return monomial(0, c, std::move(var)); }

UniPoly UniPoly::monomial(int e, const Int& c, std::string var) {
    UniPoly p(std::move(var));
    p.add_term(e, c);
    return p;
}

Int UniPoly::coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int UniPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.var());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out += UniPoly::monomial(ea + eb, ca * cb, a.var());
    return out;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

Int UniPoly::evaluate(const Int& v) const {
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int term = c;
        for (int q = 0; q < e; ++q) term *= v;
        total += term;
    }
    return total;
}

UniPoly upow(const UniPoly& base, int exp) {
    UniPoly out = UniPoly::constant(1, base.var());
    for (int q = 0; q < exp; ++q) out *= base;
    return out;
}

std::string UniPoly::canonical_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(os, first, it->second, {{var_, it->first}});
        first = false;
    }
    return os.str();
}

UniPoly substitute_affine(const BiPoly& p, const Int& ax, const Int& bx, const Int& ay,
                          const Int& by, const std::string& var) {
    UniPoly xsub(var), ysub(var);
    xsub.add_term(1, ax);
    xsub.add_term(0, bx);
    ysub.add_term(1, ay);
    ysub.add_term(0, by);
    UniPoly out(var);
    for (const auto& [k, c] : p.terms()) {
        UniPoly term = UniPoly::constant(c, var);
        term *= upow(xsub, k.first);
        term *= upow(ysub, k.second);
        out += term;
    }
    return out;
}

UniPoly substitute_laurent_t(const BiPoly& p, int sign, int shift) {
    // x^i y^j -> (-t)^i (-1/t)^j = (-1)^{i+j} t^{i-j}
    std::map<int, Int> laurent;
    for (const auto& [k, c] : p.terms()) {
        Int v = c * sign;
        if ((k.first + k.second) % 2 != 0) v = -v;
        int e = shift + k.first - k.second;
        laurent[e] += v;
    }
    UniPoly out("t");
    for (const auto& [e, c] : laurent) {
        if (c == 0) continue;
        if (e < 0)
            throw precondition_error(
                "negative power of t survives the substitution; the input violates the "
                "connected bridgeless loopless hypotheses");
        out.add_term(e, c);
    }
    return out;
}

} // namespace tuttex

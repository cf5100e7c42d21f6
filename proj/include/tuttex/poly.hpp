#ifndef TUTTEX_POLY_HPP
#define TUTTEX_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace tuttex {

using Int = boost::multiprecision::cpp_int;

/// Sparse bivariate polynomial in x and y with exact integer coefficients.
/// Zero coefficients are never stored, so operator== is structural equality.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (x exponent, y exponent)

    BiPoly() = default;
    static BiPoly constant(const Int& c);
    static BiPoly monomial(int i, int j, const Int& c = Int(1));
    static BiPoly var_x() { return monomial(1, 0); }
    static BiPoly var_y() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }
    Int coefficient(int i, int j) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    bool operator==(const BiPoly&) const = default;

    Int evaluate(const Int& x, const Int& y) const;

    // Terms sorted by (i, j) ascending; "c*x^i*y^j" with unit parts omitted.
    std::string canonical_string() const;

private:
    std::map<Key, Int> terms_;
    void add_term(int i, int j, const Int& c);
};

BiPoly pow(const BiPoly& base, int exp);

/// Sparse univariate polynomial with exact integer coefficients.
class UniPoly {
public:
    explicit UniPoly(std::string var = "x") : var_(std::move(var)) {}
    static UniPoly constant(const Int& c, std::string var = "x");
    static UniPoly monomial(int e, const Int& c, std::string var = "x");

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    const std::string& var() const { return var_; }
    Int coefficient(int e) const;
    int degree() const; // -1 for the zero polynomial

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    bool operator==(const UniPoly& rhs) const { return terms_ == rhs.terms_; }

    Int evaluate(const Int& v) const;

    // Terms in descending exponent order.
    std::string canonical_string() const;

private:
    std::string var_;
    std::map<int, Int> terms_;
    void add_term(int e, const Int& c);
    friend UniPoly substitute_affine(const BiPoly&, const Int&, const Int&, const Int&,
                                     const Int&, const std::string&);
    friend UniPoly substitute_laurent_t(const BiPoly&, int, int);
};

UniPoly upow(const UniPoly& base, int exp);

/// Exact composition p(ax*v + bx, ay*v + by) in the variable `var`.
UniPoly substitute_affine(const BiPoly& p, const Int& ax, const Int& bx, const Int& ay,
                          const Int& by, const std::string& var = "x");

/// sign * t^shift * p(-t, -1/t). The result must be an honest polynomial:
/// a surviving negative power of t means the caller's input was out of range.
UniPoly substitute_laurent_t(const BiPoly& p, int sign, int shift);

} // namespace tuttex

#endif

#include "tuttex/specialize.hpp"

#include "tuttex/errors.hpp"
#include "tuttex/structure.hpp"
#include "tuttex/tutte.hpp"
#include "tuttex/unionfind.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tuttex {

UniPoly chromatic(const Multigraph& g) {
    auto st = stats(g);
    // (-1)^rank * lambda^c * T(1 - lambda, 0)
    UniPoly sub = substitute_affine(tutte_delcon(g), Int(-1), Int(1), Int(0), Int(0), "λ");
    int sign = st.rank % 2 == 0 ? 1 : -1;
    return UniPoly::monomial(st.c, Int(sign), "λ") * sub;
}

UniPoly flow(const Multigraph& g) {
    auto st = stats(g);
    // (-1)^nullity * T(0, 1 - lambda)
    UniPoly sub = substitute_affine(tutte_delcon(g), Int(0), Int(0), Int(-1), Int(1), "λ");
    int sign = st.nullity % 2 == 0 ? 1 : -1;
    return UniPoly::constant(Int(sign), "λ") * sub;
}

bool Lattice::mobius_recursion_holds() const {
    for (int x = 0; x < size; ++x) {
        long long sum = 0;
        for (int y = 0; y < size; ++y)
            if (leq[y][x]) sum += mobius[y];
        if (x == bottom ? sum != 1 : sum != 0) return false;
    }
    return true;
}

Lattice build_lattice(int size, const std::function<bool(int, int)>& leq,
                      const std::function<int(int)>& rank) {
    Lattice lat;
    lat.size = size;
    lat.leq.assign(size, std::vector<char>(size, 0));
    lat.rank.resize(size);
    for (int a = 0; a < size; ++a) {
        lat.rank[a] = rank(a);
        for (int b = 0; b < size; ++b) lat.leq[a][b] = leq(a, b);
    }
    for (int a = 0; a < size; ++a) {
        bool is_bottom = true, is_top = true;
        for (int b = 0; b < size; ++b) {
            is_bottom = is_bottom && lat.leq[a][b];
            is_top = is_top && lat.leq[b][a];
        }
        if (is_bottom) lat.bottom = a;
        if (is_top) lat.top = a;
    }
    if (lat.bottom == -1 || lat.top == -1)
        throw std::logic_error("lattice lacks a unique bottom or top");

    // mu(bottom, x) = -sum_{y < x} mu(bottom, y), filled in rank order.
    std::vector<int> order(size);
    for (int a = 0; a < size; ++a) order[a] = a;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lat.rank[a] < lat.rank[b]; });
    lat.mobius.assign(size, 0);
    for (int x : order) {
        if (x == lat.bottom) {
            lat.mobius[x] = 1;
            continue;
        }
        long long sum = 0;
        for (int y = 0; y < size; ++y)
            if (y != x && lat.leq[y][x]) sum += lat.mobius[y];
        lat.mobius[x] = -sum;
    }
    return lat;
}

namespace {

// All partitions of {0..n-1} as restricted-growth strings.
std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rg(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int max_used) {
        if (pos == n) {
            out.push_back(rg);
            return;
        }
        for (int b = 0; b <= max_used + 1; ++b) {
            rg[pos] = b;
            rec(pos + 1, std::max(max_used, b));
        }
    };
    if (n > 0) rec(0, -1);
    return out;
}

int block_count(const std::vector<int>& partition) {
    int mx = -1;
    for (int b : partition) mx = std::max(mx, b);
    return mx + 1;
}

bool blocks_connected(const Multigraph& g, const std::vector<int>& partition) {
    int blocks = block_count(partition);
    UnionFind uf(g.n);
    for (const auto& [u, v] : g.edges)
        if (partition[u] == partition[v]) uf.unite(u, v);
    // Each block must collapse to a single group.
    std::vector<int> seen(blocks, -1);
    for (int v = 0; v < g.n; ++v) {
        int b = partition[v];
        int r = uf.find(v);
        if (seen[b] == -1)
            seen[b] = r;
        else if (seen[b] != r)
            return false;
    }
    return true;
}

bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    // Every block of `fine` must lie inside one block of `coarse`.
    int fb = block_count(fine);
    std::vector<int> image(fb, -1);
    for (size_t v = 0; v < fine.size(); ++v) {
        int b = fine[v];
        if (image[b] == -1)
            image[b] = coarse[v];
        else if (image[b] != coarse[v])
            return false;
    }
    return true;
}

} // namespace

BondLattice bond_lattice(const Multigraph& gsimple) {
    BondLattice out;
    for (auto& part : set_partitions(gsimple.n))
        if (blocks_connected(gsimple, part)) out.partitions.push_back(std::move(part));

    const int n = gsimple.n;
    out.lattice = build_lattice(
        static_cast<int>(out.partitions.size()),
        [&](int a, int b) { return refines(out.partitions[a], out.partitions[b]); },
        [&](int a) { return n - block_count(out.partitions[a]); });
    return out;
}

FlowLattice bridgeless_subgraph_lattice(const Multigraph& g) {
    const int m = g.m();
    FlowLattice out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<int> keep;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) keep.push_back(e);
        if (is_bridgeless(restrict_to(g, keep).graph)) out.masks.push_back(mask);
    }

    auto nullity_of = [&](std::uint64_t mask) {
        UnionFind uf(g.n);
        int size = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                uf.unite(g.edges[e].first, g.edges[e].second);
                ++size;
            }
        return size - g.n + uf.groups;
    };
    const int full_nullity = nullity_of((std::uint64_t(1) << m) - 1);

    out.lattice = build_lattice(
        static_cast<int>(out.masks.size()),
        [&](int a, int b) { return (out.masks[a] & out.masks[b]) == out.masks[b]; },
        [&](int a) { return full_nullity - nullity_of(out.masks[a]); });
    return out;
}

UniPoly chromatic_via_lattice(const Multigraph& g, int cap) {
    if (has_loops(g)) throw precondition_error("bond lattice requires a loopless graph");
    if (g.n > cap)
        throw cap_error("bond lattice refused: n = " + std::to_string(g.n) + " exceeds cap " +
                        std::to_string(cap));
    auto simple = simplify(g).graph;
    auto bonds = bond_lattice(simple);
    UniPoly out("λ");
    for (int a = 0; a < bonds.lattice.size; ++a)
        out += UniPoly::monomial(block_count(bonds.partitions[a]),
                                 Int(bonds.lattice.mobius[a]), "λ");
    return out;
}

UniPoly flow_via_lattice(const Multigraph& g, int cap) {
    if (!is_bridgeless(g))
        throw precondition_error("the bridgeless-subgraph lattice requires bridgeless input");
    if (g.m() > cap)
        throw cap_error("bridgeless-subgraph lattice refused: m = " + std::to_string(g.m()) +
                        " exceeds cap " + std::to_string(cap));
    auto fl = bridgeless_subgraph_lattice(g);
    const int full_nullity = stats(g).nullity;
    UniPoly out("λ");
    for (int a = 0; a < fl.lattice.size; ++a) {
        int nullity = full_nullity - fl.lattice.rank[a];
        out += UniPoly::monomial(nullity, Int(fl.lattice.mobius[a]), "λ");
    }
    return out;
}

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

void require_hypotheses(const Multigraph& g, const char* what) {
    if (!is_connected(g) || has_loops(g) || !is_bridgeless(g))
        throw precondition_error(std::string(what) +
                                 " requires a connected bridgeless loopless graph");
}

} // namespace

LeadingCoeffs chromatic_leading3(const Multigraph& g) {
    require_hypotheses(g, "chromatic_leading3");
    auto par = parallel_classes(g);
    long long p = par.count();
    long long triangles = triangle_count(simplify(g).graph);
    LeadingCoeffs out{{1, -p, choose2(p) - triangles}, true};

    auto poly = chromatic(g);
    const int n = g.n;
    for (int k = 0; k < 3; ++k)
        out.match = out.match && poly.coefficient(n - k) == Int(out.formula[k]);
    return out;
}

LeadingCoeffs flow_leading3(const Multigraph& g) {
    require_hypotheses(g, "flow_leading3");
    auto ser = series_classes(g);
    long long s = ser.count();
    long long theta = special_classes(g).theta_count();
    LeadingCoeffs out{{1, -s, choose2(s) - theta}, true};

    auto poly = flow(g);
    const int top = stats(g).nullity;
    for (int k = 0; k < 3; ++k) {
        Int actual = top - k >= 0 ? poly.coefficient(top - k) : Int(0);
        out.match = out.match && actual == Int(out.formula[k]);
    }
    return out;
}

Int proper_coloring_count(const Multigraph& g, int colors, int cap) {
    if (g.n > cap) throw cap_error("coloring enumeration refused: n exceeds cap");
    if (colors < 0) throw precondition_error("color count must be nonnegative");
    if (colors == 0) return g.n == 0 ? Int(1) : Int(0);
    std::vector<int> color(g.n, 0);
    Int count = 0;
    for (;;) {
        bool proper = true;
        for (const auto& [u, v] : g.edges)
            if (color[u] == color[v]) {
                proper = false;
                break;
            }
        if (proper) ++count;
        int pos = 0;
        while (pos < g.n && ++color[pos] == colors) color[pos++] = 0;
        if (pos == g.n) break;
    }
    return count;
}

Int nowhere_zero_flow_count(const Multigraph& g, int modulus, int cap) {
    if (modulus < 1) throw precondition_error("flow modulus must be positive");
    std::vector<int> plain; // non-loop edges, oriented low -> high
    int loops = 0;
    for (int e = 0; e < g.m(); ++e)
        if (g.is_loop(e))
            ++loops;
        else
            plain.push_back(e);
    if (static_cast<int>(plain.size()) > cap)
        throw cap_error("flow enumeration refused: m exceeds cap");

    Int count = 0;
    std::vector<int> value(plain.size(), 1); // values in 1..modulus-1
    if (modulus == 1) {
        count = plain.empty() ? 1 : 0;
    } else {
        for (;;) {
            std::vector<int> net(g.n, 0);
            for (size_t q = 0; q < plain.size(); ++q) {
                auto [u, v] = g.edges[plain[q]];
                int lo = std::min(u, v), hi = std::max(u, v);
                net[lo] = (net[lo] + value[q]) % modulus;
                net[hi] = (net[hi] + modulus - value[q]) % modulus;
            }
            bool conserved = true;
            for (int v = 0; v < g.n; ++v) conserved = conserved && net[v] == 0;
            if (conserved) ++count;

            size_t pos = 0;
            while (pos < value.size() && ++value[pos] == modulus) value[pos++] = 1;
            if (pos == value.size()) break;
        }
    }

    Int loop_factor = 1;
    for (int q = 0; q < loops; ++q) loop_factor *= modulus - 1;
    return count * loop_factor;
}

JonesReport jones(const Multigraph& g) {
    require_hypotheses(g, "jones");
    const long long n = g.n, m = g.m();
    auto t = tutte_delcon(g);
    int sign = (n - 1) % 2 == 0 ? 1 : -1;
    JonesReport report{substitute_laurent_t(t, sign, static_cast<int>(m - n + 1)),
                       {},
                       {},
                       true,
                       true};

    report.b.resize(m + 1);
    for (long long i = 0; i <= m; ++i) report.b[i] = report.poly.coefficient(int(i));
    if (report.poly.degree() > m)
        throw std::logic_error("jones polynomial degree exceeds m");

    auto ser = series_classes(g);
    auto par = parallel_classes(g);
    long long s = ser.count(), s_star = ser.nontrivial_count();
    long long p = par.count(), p_star = par.nontrivial_count();
    auto special = special_classes(g);
    long long theta = special.theta_count();
    long long triangles = triangle_count(simplify(g).graph);
    long long msign = m % 2 == 0 ? 1 : -1;

    auto add = [&](const std::string& name, long long index, long long formula) {
        JonesCoeff c{name, static_cast<int>(index), index >= 0 && index <= m, formula, Int(0),
                     true};
        if (c.present) {
            c.actual = report.b[index];
            c.match = Int(formula) == c.actual;
        }
        report.all_match = report.all_match && c.match;
        report.formulas.push_back(std::move(c));
    };

    add("b0", 0, msign);
    add("b1", 1, msign * (m - n + 1 - s));
    add("b2", 2, msign * (choose2(s - m + n) + s_star - theta));
    add("b(m-2)", m - 2, choose2(p - n + 2) + p_star - triangles);
    add("b(m-1)", m - 1, n - 1 - p);
    add("b(m)", m, 1);

    for (long long i = 0; i <= m; ++i) {
        Int signed_b = (m - i) % 2 == 0 ? report.b[i] : -report.b[i];
        if (signed_b < 0) report.signs_alternate = false;
    }
    return report;
}

} // namespace tuttex

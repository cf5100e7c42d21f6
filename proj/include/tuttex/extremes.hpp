#ifndef TUTTEX_EXTREMES_HPP
#define TUTTEX_EXTREMES_HPP

#include "tuttex/multigraph.hpp"
#include "tuttex/poly.hpp"
#include "tuttex/structure.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tuttex {

/// Closed forms for the five coefficients t(0,m-n+1), t(0,m-n), t(0,m-n-1),
/// t(1,m-n), t(1,m-n-1) in terms of series classes and theta counts.
/// An entry is empty when the position does not exist (negative index).
struct FiveCoeffs {
    std::array<std::optional<long long>, 5> values;
    std::array<std::pair<int, int>, 5> positions;
};

/// Series-class side (low x exponents, y exponents near the nullity).
FiveCoeffs series_side_coeffs(const Multigraph& g);

/// Parallel-class side (low y exponents, x exponents near the rank).
/// Formulas use p, p*, triangle count of the simplified graph, and the sum of
/// p(G/A) over nontrivial parallel classes A.
FiveCoeffs parallel_side_coeffs(const Multigraph& g);

struct CoeffEntry {
    std::string name;
    int i;
    int j;
    bool present;
    std::optional<long long> formula;
    Int oracle;
    bool match; // true when absent on both sides or formula == oracle
};

struct CoeffReport {
    std::vector<CoeffEntry> entries; // 5 series-side then 5 parallel-side
    bool all_match;
};

/// Compares both five-coefficient formula sets against the
/// deletion-contraction polynomial. Requires connected bridgeless loopless.
CoeffReport verify_extremes(const Multigraph& g);

} // namespace tuttex

#endif

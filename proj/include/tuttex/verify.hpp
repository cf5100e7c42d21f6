#ifndef TUTTEX_VERIFY_HPP
#define TUTTEX_VERIFY_HPP

#include "tuttex/multigraph.hpp"
#include "tuttex/specialize.hpp"
#include "tuttex/structure.hpp"
#include "tuttex/tutte.hpp"

#include <string>
#include <vector>

namespace tuttex {

struct Caps {
    int subset = kDefaultSubsetCap;            // subset oracle, convolution, tree count
    int special_brute = kDefaultSpecialBruteCap;
    int bond_lattice = kDefaultBondLatticeCap; // vertices
    int flow_lattice = kDefaultFlowLatticeCap; // edges
    int coloring_count = kDefaultColoringCountCap;
    int flow_count = kDefaultFlowCountCap;
};

struct CheckResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status;
    std::string detail; // failure context or the cap that caused a skip
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckResult::Status::fail) return false;
        return true;
    }
};

/// Runs every identity the engine knows against a single graph: the three
/// Tutte evaluations, coefficient formulas on both sides, specialization
/// equivalences, lattice sums, enumeration counts, and structural identities.
/// Requires a connected bridgeless loopless graph; oversized inputs skip the
/// capped checks instead of failing.
VerifyReport verify_graph(const Multigraph& g, const Caps& caps = {});

} // namespace tuttex

#endif

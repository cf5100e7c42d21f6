#include "tuttex/corpus.hpp"

#include "tuttex/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace tuttex {

std::vector<std::pair<int, int>> canonical_edge_form(const Multigraph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool have_best = false;
    do {
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(g.edges.size());
        for (const auto& [u, v] : g.edges) {
            int a = perm[u], b = perm[v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        if (!have_best || mapped < best) {
            best = std::move(mapped);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

constexpr int kMaxMultiplicity = 3;

// Enumerates multiplicity vectors over the vertex pairs of K_n summing to m.
void enumerate_exact(int n, int m, std::vector<Multigraph>& out,
                     std::set<std::vector<std::pair<int, int>>>& seen) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::vector<int> mult(pairs.size(), 0);
    std::vector<std::pair<int, int>> edges;

    auto emit = [&]() {
        edges.clear();
        for (size_t q = 0; q < pairs.size(); ++q)
            for (int k = 0; k < mult[q]; ++k) edges.push_back(pairs[q]);
        Multigraph g(n, edges);
        if (!is_connected(g)) return;
        if (!bridges(g).empty()) return;
        if (!seen.insert(canonical_edge_form(g)).second) return;
        out.push_back(std::move(g));
    };

    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (left == 0) {
            for (size_t q = pos; q < mult.size(); ++q) mult[q] = 0;
            emit();
            return;
        }
        if (pos == mult.size()) return;
        int tail_capacity = static_cast<int>(mult.size() - pos) * kMaxMultiplicity;
        if (left > tail_capacity) return;
        for (int k = 0; k <= std::min(kMaxMultiplicity, left); ++k) {
            mult[pos] = k;
            rec(pos + 1, left - k);
        }
        mult[pos] = 0;
    };
    rec(0, m);
}

} // namespace

std::vector<Multigraph> exhaustive_corpus(int max_n, int max_m) {
    if (max_n < 1) throw precondition_error("exhaustive corpus needs max_n >= 1");
    std::vector<Multigraph> out;
    for (int n = 1; n <= max_n; ++n) {
        // Isomorphism classes never repeat across different (n, m), so the
        // dedup set can be per-bucket.
        for (int m = 0; m <= max_m; ++m) {
            if (n == 1) {
                if (m == 0) out.push_back(empty_graph(1));
                continue;
            }
            std::set<std::vector<std::pair<int, int>>> seen;
            enumerate_exact(n, m, out, seen);
        }
    }
    return out;
}

namespace {

// rng() reduced to [0, bound); avoids std::uniform_int_distribution so that
// streams are identical across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

} // namespace

std::vector<Multigraph> random_corpus(int max_n, int max_m, int count, std::uint64_t seed) {
    if (max_n < 2) throw precondition_error("random corpus needs max_n >= 2");
    if (max_m < 2) throw precondition_error("random corpus needs max_m >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Multigraph> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        int n = 2 + static_cast<int>(bounded(rng, max_n - 1));
        int base = n == 2 ? 2 : n;
        if (base > max_m) {
            n = 2;
            base = 2;
        }
        int m = base + static_cast<int>(bounded(rng, max_m - base + 1));

        std::vector<std::pair<int, int>> edges;
        if (n == 2) {
            edges = {{0, 1}, {0, 1}};
        } else {
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(n - 1, 0);
        }
        while (static_cast<int>(edges.size()) < m) {
            int u = static_cast<int>(bounded(rng, n));
            int v = static_cast<int>(bounded(rng, n));
            if (u == v) continue;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        Multigraph g(n, std::move(edges));

        // The cycle skeleton leaves no bridges, but repair keeps the contract
        // independent of the construction.
        for (;;) {
            auto br = bridges(g);
            if (br.empty()) break;
            for (int e : br) g.edges.push_back(g.edges[e]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace tuttex

#ifndef TUTTEX_CORPUS_HPP
#define TUTTEX_CORPUS_HPP

#include "tuttex/multigraph.hpp"

#include <cstdint>
#include <vector>

namespace tuttex {

/// Lexicographically smallest sorted edge list over all vertex relabelings;
/// the isomorphism key used to deduplicate the exhaustive corpus.
std::vector<std::pair<int, int>> canonical_edge_form(const Multigraph& g);

/// All connected bridgeless loopless multigraphs with n <= max_n, m <= max_m
/// and parallel multiplicity <= 3, one per isomorphism class, ordered by
/// (n, m) and then by first appearance in a fixed enumeration.
std::vector<Multigraph> exhaustive_corpus(int max_n, int max_m);

/// Seeded stream of connected bridgeless loopless multigraphs: a cycle
/// skeleton plus random chords and doublings, bridges repaired by doubling.
/// The same seed always yields the same stream.
std::vector<Multigraph> random_corpus(int max_n, int max_m, int count, std::uint64_t seed);

} // namespace tuttex

#endif

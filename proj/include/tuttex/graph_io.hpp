#ifndef TUTTEX_GRAPH_IO_HPP
#define TUTTEX_GRAPH_IO_HPP

#include "tuttex/multigraph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tuttex {

/// A half-edge reference as written in graph files: edge id plus end marker
/// (0 = "a" = first endpoint, 1 = "b" = second endpoint).
struct HalfEdge {
    int edge;
    int end;
    bool operator==(const HalfEdge&) const = default;
};

/// Parsed graph file. Format:
///   v N          vertex count, once, before any edge
///   e U V        one line per edge, in id order; U = V is a loop
///   r V: 3a 0b   optional rotation (counterclockwise half-edge order at V)
///   #            starts a comment; blank lines ignored
struct ParsedGraph {
    Multigraph graph;
    std::optional<std::vector<std::vector<HalfEdge>>> rotations;
};

ParsedGraph parse_graph_text(std::istream& in);
ParsedGraph parse_graph_text(const std::string& text);
ParsedGraph load_graph_file(const std::string& path);

std::string write_graph_text(const Multigraph& g,
                             const std::vector<std::vector<HalfEdge>>* rotations = nullptr);

} // namespace tuttex

#endif

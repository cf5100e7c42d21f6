#include "tuttex/graph_io.hpp"

#include "tuttex/errors.hpp"

#include <fstream>
#include <sstream>

namespace tuttex {

namespace {

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t pos = 0;
    try {
        out = std::stoi(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

} // namespace

ParsedGraph parse_graph_text(std::istream& in) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, std::string>> rotation_lines; // deferred until m is known

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string tag;
        if (!(line >> tag)) continue;

        if (tag == "v") {
            if (n != -1) throw parse_error(lineno, "duplicate \"v\" line");
            std::string tok;
            if (!(line >> tok)) throw parse_error(lineno, "\"v\" needs a vertex count");
            if (!parse_int(tok, n) || n < 0) throw parse_error(lineno, "bad vertex count");
            std::string extra;
            if (line >> extra) throw parse_error(lineno, "trailing tokens after vertex count");
        } else if (tag == "e") {
            if (n == -1) throw parse_error(lineno, "\"e\" before \"v\"");
            std::string a, b, extra;
            int u, v;
            if (!(line >> a >> b) || !parse_int(a, u) || !parse_int(b, v))
                throw parse_error(lineno, "\"e\" needs two vertex ids");
            if (line >> extra) throw parse_error(lineno, "trailing tokens after edge");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error(lineno, "edge endpoint out of range");
            edges.emplace_back(u, v);
        } else if (tag == "r") {
            if (n == -1) throw parse_error(lineno, "\"r\" before \"v\"");
            std::string rest;
            std::getline(line, rest);
            rotation_lines.emplace_back(lineno, rest);
        } else {
            throw parse_error(lineno, "unknown directive \"" + tag + "\"");
        }
    }
    if (n == -1) throw parse_error(lineno == 0 ? 1 : lineno, "missing \"v\" line");

    ParsedGraph out;
    out.graph = Multigraph(n, std::move(edges));

    if (!rotation_lines.empty()) {
        std::vector<std::vector<HalfEdge>> rot(n);
        std::vector<char> seen(n, 0);
        for (const auto& [lno, rest] : rotation_lines) {
            std::istringstream line(rest);
            std::string vtok;
            if (!(line >> vtok)) throw parse_error(lno, "\"r\" needs a vertex id");
            if (vtok.back() != ':') throw parse_error(lno, "expected \"V:\" after \"r\"");
            vtok.pop_back();
            int v;
            if (!parse_int(vtok, v) || v < 0 || v >= n)
                throw parse_error(lno, "rotation vertex out of range");
            if (seen[v]) throw parse_error(lno, "duplicate rotation for vertex " + vtok);
            seen[v] = 1;
            std::string htok;
            while (line >> htok) {
                char side = htok.back();
                if (side != 'a' && side != 'b')
                    throw parse_error(lno, "half-edge must end in 'a' or 'b': " + htok);
                htok.pop_back();
                int e;
                if (!parse_int(htok, e) || e < 0 || e >= out.graph.m())
                    throw parse_error(lno, "half-edge id out of range: " + htok);
                rot[v].push_back(HalfEdge{e, side == 'a' ? 0 : 1});
            }
        }
        out.rotations = std::move(rot);
    }
    return out;
}

ParsedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_text(in);
}

ParsedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph_text(in);
}

std::string write_graph_text(const Multigraph& g,
                             const std::vector<std::vector<HalfEdge>>* rotations) {
    std::ostringstream os;
    os << "v " << g.n << "\n";
    for (const auto& [u, v] : g.edges) os << "e " << u << " " << v << "\n";
    if (rotations) {
        for (int v = 0; v < g.n; ++v) {
            if ((*rotations)[v].empty()) continue;
            os << "r " << v << ":";
            for (const auto& h : (*rotations)[v]) os << " " << h.edge << (h.end == 0 ? 'a' : 'b');
            os << "\n";
        }
    }
    return os.str();
}

} // namespace tuttex

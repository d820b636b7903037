#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qclifford/bitvec.hpp"
#include "qclifford/quadspace.hpp"
#include "qclifford/rational.hpp"

namespace qcl {

// Colored labeled graph: each vertex is black or white and carries a nonzero
// rational label. Adjacency is symmetric with no loops; adj[i] is the packed
// neighborhood row of vertex i.
struct ColoredGraph {
    std::vector<std::string> names;
    std::vector<bool> black;
    std::vector<Rational> labels;
    std::vector<BitVec> adj;

    int n() const { return int(names.size()); }
    bool edge(int i, int j) const { return adj[i].get(j); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < n(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    int add_vertex(const std::string& name, bool is_black, const Rational& label);
    void add_edge(int i, int j);

    // Induced subgraph on the given vertex indices (kept in the given order).
    ColoredGraph induced(const std::vector<int>& verts) const;
};

// Text format, one directive per line ('#' starts a comment):
//   vertex NAME black|white [LABEL]
//   edge NAME NAME
ColoredGraph parse_graph(std::istream& in);
ColoredGraph parse_graph_file(const std::string& path);

// Built-in families ("A:n", "D:n", "E:n", "K:n", "Cl:p,q"), vertices named
// v1..vn, labels 1. A/D/E/K are all black; Cl:p,q is p white then q black.
ColoredGraph family_graph(const std::string& spec);

// Canonical JSON text for tooling (sorted keys, 2-space indent, newline).
std::string graph_json(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);

// Gram matrix of the quadratic space presented by the graph: diagonal bit set
// for black vertices, strictly-upper bits for edges.
QuadSpace build_space(const ColoredGraph& g);

// Twin reduction: vertices with identical open neighborhoods collapse to the
// lowest-index representative (equal rows are never adjacent, so classes are
// independent sets). One pass is idempotent.
struct ReductionReport {
    ColoredGraph reduced;
    std::vector<int> class_of;               // original index -> reduced index
    std::vector<std::vector<int>> classes;   // reduced index -> original members
};
ReductionReport reduce_graph(const ColoredGraph& g);

// The nine minimal graphs that are not line graphs while all their proper
// induced subgraphs are; every non-line graph contains one induced.
const std::vector<ColoredGraph>& line_graph_obstructions();

// Obstruction route: true iff no forbidden graph occurs induced.
bool is_line_graph_by_obstructions(const ColoredGraph& g);

// Constructive route: partition the edges into cliques with every vertex in
// at most two (backtracking, largest candidate clique first), then read the
// root off the partition. Graphs up to 64 vertices.
struct RootReport {
    bool is_line_graph = false;
    ColoredGraph root; // valid iff is_line_graph
};
RootReport line_graph_root(const ColoredGraph& g);

// L(g): one vertex per edge of g (lexicographic endpoint order), adjacency =
// sharing an endpoint.
ColoredGraph line_graph(const ColoredGraph& g);

// Structure-only isomorphism (colors and labels ignored): refinement plus
// backtracking.
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// True iff some induced copy of `pattern` occurs in `host` (structure only).
bool has_induced_subgraph(const ColoredGraph& host, const ColoredGraph& pattern);

// Lowest 6-vertex subset (lexicographic) whose induced space is nondegenerate
// of MINUS type, if any.
std::optional<std::vector<int>> find_minus6_subgraph(const ColoredGraph& g);

} // namespace qcl

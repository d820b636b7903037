#pragma once

#include <optional>
#include <vector>

#include "qclifford/classify.hpp"
#include "qclifford/graph.hpp"
#include "qclifford/rational.hpp"

namespace qcl {

// Small dense exact matrix (row major).
struct RatMat {
    int n = 0;
    std::vector<Rational> a;

    RatMat() = default;
    explicit RatMat(int size) : n(size), a(std::size_t(size) * size, 0) {}

    Rational& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    const Rational& at(int i, int j) const { return a[std::size_t(i) * n + j]; }

    friend bool operator==(const RatMat& x, const RatMat& y) { return x.n == y.n && x.a == y.a; }
};

// Bracket-generated set of anisotropic vectors reachable from the vertex
// generators: grow by p, q in the set with f(p,q) = 1 adding p xor q. The
// span of the corresponding monomials is the Lie algebra the vertices
// generate. Points come back in ascending bitmask order.
// Pre: connected, all vertices black, at most 24 vertices.
std::vector<BitVec> closure_points(const ColoredGraph& g);

// Identification of the Lie algebra generated by the vertex monomials.
//   quotient: identification of the twin-reduced graph's algebra — if the
//     reduction is a line graph its root gives so(root), with the triangle
//     resolved to the root K_3; otherwise the bracket-span lookup on the
//     reduced space. The original algebra surjects onto it.
//   compact: exact type of the full algebra — line-graph check on the
//     original graph first (closure spans the full antisymmetric model of the
//     root), otherwise each twin collapse splits off a doubled ideal,
//     otherwise the bracket-span lookup applies directly.
// Pre: connected, all black, at most 64 vertices. closure_dim is reported
// when the graph is within the closure cap.
struct KReport {
    std::optional<long long> closure_dim;
    bool reduced_is_line_graph = false;
    std::optional<long long> root_size;
    LieIsoType quotient;
    unsigned long long quotient_dim = 0;
    LieIsoType compact;
    unsigned long long compact_dim = 0;
};
KReport identify_K(const ColoredGraph& g, FieldType f);

// Antisymmetric model on k letters: the binom(k,2) matrices E_ij - E_ji
// (i < j lexicographic). Their plain commutators have unit structure
// constants: [eps_ab, eps_cd] = 0 for disjoint or equal pairs and +/-
// eps_{symdiff} when exactly one index is shared. 2 <= k <= 64.
std::vector<RatMat> antisymmetric_model(int k);

} // namespace qcl

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qclifford/bitvec.hpp"
#include "qclifford/graph.hpp"
#include "qclifford/quadspace.hpp"
#include "qclifford/rational.hpp"

namespace qcl {

// Multiplication context for the algebra presented by a graph: monomials are
// subsets of vertices (bitmasks), and
//   e_v e_w = (-1)^{g(v,w)} Lambda(v,w) e_{v xor w},
// where Lambda multiplies the labels of the common support. Generators square
// to (+/-) label (white/black) and anticommute exactly across edges.
struct AlgebraContext {
    QuadSpace space;
    std::vector<Rational> labels;
    std::vector<std::string> names;
};

AlgebraContext make_context(const ColoredGraph& g);

// Element: sparse rational combination of monomials, zero coefficients pruned.
// The map order is ascending bitmask order, which doubles as the canonical
// print order.
struct AlgebraElement {
    std::map<BitVec, Rational> terms;

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
};

AlgebraElement unit_element(const AlgebraContext& ctx);
AlgebraElement generator_element(const AlgebraContext& ctx, int vertex);
AlgebraElement monomial_element(const AlgebraContext& ctx, const BitVec& v, const Rational& coef);

// Product of the labels shared by both supports.
Rational lambda_factor(const AlgebraContext& ctx, const BitVec& v, const BitVec& w);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, const Rational& c);

// Exact product; throws input_error past 65536 term pairs.
AlgebraElement multiply(const AlgebraContext& ctx, const AlgebraElement& a,
                        const AlgebraElement& b);

// Normalized bracket (1/2)(ab - ba).
AlgebraElement bracket(const AlgebraContext& ctx, const AlgebraElement& a,
                       const AlgebraElement& b);

// Sign involutions. tau_h negates monomials off the hyperplane ker(phi . ) —
// an automorphism; phi must be nonzero. tau_q negates anisotropic monomials —
// an anti-automorphism.
AlgebraElement tau_h(const AlgebraContext& ctx, const BitVec& phi, const AlgebraElement& a);
AlgebraElement tau_q(const AlgebraContext& ctx, const AlgebraElement& a);

// The center is spanned by the monomials supported on Rad f; returns all 2^r
// of them in ascending order. Capped at dimension 20.
std::vector<BitVec> center_basis(const AlgebraContext& ctx);

// Split along a central involution e_{r0} (r0 in Rad f, Q(r0) = 0, all labels
// 1): two complementary ideals with bases e_u +/- (-1)^{g(u,r0)} e_{u xor r0},
// one u per {u, u xor r0} coset (lower representative). Capped at dim 20.
std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>> ideal_split(
    const AlgebraContext& ctx, const BitVec& r0);

// Monomial eigenspace split under the commuting pair (-tau_q, tau_h(phi)):
// index by (Q(v), phi . v). Capped at dimension 20.
struct TauGrading {
    std::vector<BitVec> part[2][2];
};
TauGrading tau_grading(const AlgebraContext& ctx, const BitVec& phi);

// Canonical literal: "(coef) {v1,v3}" terms joined by " + ", coefficient
// omitted when 1, unit monomial printed as "1", zero element as "0".
std::string format_element(const AlgebraContext& ctx, const AlgebraElement& a);

} // namespace qcl

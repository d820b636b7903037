#pragma once

#include <cstdint>
#include <vector>

#include "qclifford/classify.hpp"
#include "qclifford/graph.hpp"
#include "qclifford/rational.hpp"

namespace qcl {

// Operator on the 2^n monomial basis that shifts every index by a fixed xor
// and rescales: e_w -> coef[w] * e_{w xor shift}. Left multiplications by
// monomials have this form, and the family is closed under composition and
// (same-shift) linear combination, so brackets stay representable.
struct SignedXorOp {
    std::uint32_t shift = 0;
    std::vector<Rational> coef;

    friend bool operator==(const SignedXorOp& a, const SignedXorOp& b) {
        return a.shift == b.shift && a.coef == b.coef;
    }
};

SignedXorOp compose(const SignedXorOp& a, const SignedXorOp& b); // a after b
SignedXorOp negate(const SignedXorOp& a);
// (1/2)(ab - ba); defined whenever both orders share a shift, which they
// always do here since shifts commute.
SignedXorOp half_bracket(const SignedXorOp& a, const SignedXorOp& b);
bool is_zero(const SignedXorOp& a);

// One operator per vertex: left multiplication by that generator on the
// monomial basis of the algebra. Pre: connected is NOT required, but all
// vertices must be black with label 1 and there are at most 20 of them.
std::vector<SignedXorOp> left_regular_rep(const ColoredGraph& g);

// Checks that the operators represent the graph relations exactly:
//   squares_ok:            rho_i^2 = -1
//   edge_anticommute_ok:   rho_i rho_j = -rho_j rho_i across edges
//   nonedge_commute_ok:    rho_i rho_j = rho_j rho_i otherwise
//   berman_ok:             [rho_i, [rho_i, rho_j]] = -rho_j across edges
//                          (normalized bracket)
// lie_span_dim is the exact dimension of the Lie algebra the operators
// generate under the normalized bracket.
struct SpinReport {
    bool squares_ok = false;
    bool edge_anticommute_ok = false;
    bool nonedge_commute_ok = false;
    bool berman_ok = false;
    long long lie_span_dim = 0;
};
SpinReport verify_spin(const ColoredGraph& g, const std::vector<SignedXorOp>& ops);

// Dense matrix over the prime field F_p.
struct FpMat {
    int n = 0;
    std::uint32_t p = 0;
    std::vector<std::uint32_t> a;

    FpMat() = default;
    FpMat(int size, std::uint32_t prime) : n(size), p(prime), a(std::size_t(size) * size, 0) {}

    std::uint32_t& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    std::uint32_t at(int i, int j) const { return a[std::size_t(i) * n + j]; }

    friend bool operator==(const FpMat& x, const FpMat& y) {
        return x.n == y.n && x.p == y.p && x.a == y.a;
    }
};

FpMat fp_mul(const FpMat& x, const FpMat& y);
FpMat fp_transpose(const FpMat& x);
FpMat fp_neg(const FpMat& x);
FpMat fp_kron(const FpMat& x, const FpMat& y);
FpMat fp_identity(int n, std::uint32_t p);

// Dimension of the unital algebra the generators span (closure under left
// multiplication by generators, exact row reduction over F_p).
int fp_span_dim(const std::vector<FpMat>& gens, std::uint32_t p);

// Matrix model over F_p (odd prime, not dividing anything relevant) of the
// nondegenerate class c: one 2x2 block pair per hyperbolic plane, the MINUS
// type putting its definite plane first. p = 1 mod 4 uses a square root of
// -1; p = 3 mod 4 uses the least x, y with x^2 + y^2 = -1.
// Pre: c.r == 0, c.type != ZERO, c.n_bar <= 16.
std::vector<FpMat> plane_models(const QuadClass& c, std::uint32_t p);

// True iff the per-factor involution (transpose on PLUS factors, symplectic
// adjugate on the MINUS factor) reverses products with the sign pattern of
// the anisotropic-monomial involution on all generator words of length <= 3.
bool transpose_check(const QuadClass& c, std::uint32_t p);

// Self-test hook: same check with the sign of the first generator flipped on
// purpose; a healthy model must fail it.
bool transpose_check_negative_control(const QuadClass& c, std::uint32_t p);

} // namespace qcl

#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "qclifford/bitvec.hpp"

namespace qcl {

// Quadratic space over GF(2) presented by a Gram matrix G:
//   gram[i] bit j = g(e_i, e_j), stored with j > i for edges and j == i for the
//   diagonal (strictly lower bits are always 0).
// Derived forms on arbitrary vectors:
//   g(u, w) = u^T G w      (bilinear, NOT symmetric)
//   Q(v)    = g(v, v)      (the quadratic form)
//   f(u, w) = g(u, w) + g(w, u)   (symmetric bilinear; the polarization of Q)
struct QuadSpace {
    int dim = 0;
    std::vector<BitVec> gram;

    QuadSpace() = default;
    explicit QuadSpace(int n) : dim(n), gram(n, BitVec(n)) {}

    int g(const BitVec& u, const BitVec& w) const {
        int acc = 0;
        for (std::size_t k = 0; k < u.w.size(); ++k) {
            std::uint64_t x = u.w[k];
            while (x) {
                int i = int(k * 64) + std::countr_zero(x);
                x &= x - 1;
                acc ^= gram[i].dot(w);
            }
        }
        return acc;
    }

    int Q(const BitVec& v) const { return g(v, v); }
    int f(const BitVec& u, const BitVec& w) const { return g(u, w) ^ g(w, u); }

    // Rows of the symmetric matrix F = G + G^T (diagonal cancels).
    std::vector<BitVec> f_rows() const;
};

enum class QType { PLUS, MINUS, ZERO };

char qtype_char(QType t);

// Isomorphism class of a quadratic space: n_bar is the dimension of the
// nondegenerate kernel V-bar (hyperbolic pairs plus, for type ZERO, the one
// anisotropic radical direction), r is dim Rad f. dim V = n_bar + r, minus 1
// for type ZERO where the anisotropic direction is counted in both.
struct QuadClass {
    int n_bar = 0;
    int r = 0;
    QType type = QType::PLUS;

    friend bool operator==(const QuadClass& a, const QuadClass& b) {
        return a.n_bar == b.n_bar && a.r == b.r && a.type == b.type;
    }
    friend bool operator!=(const QuadClass& a, const QuadClass& b) { return !(a == b); }
};

// Result of the symplectic Gram-Schmidt pass: pairs (a_i, b_i) with
// f(a_i, b_i) = 1 and f = 0 across distinct pairs and into the radical.
// rad_f is a basis of Rad f adjusted so that at most one member is
// anisotropic; aniso_index locates it (-1 when every radical vector is
// isotropic).
struct SymplecticDecomposition {
    std::vector<std::pair<BitVec, BitVec>> pairs;
    std::vector<BitVec> rad_f;
    int aniso_index = -1;
};

std::vector<BitVec> radical_f_basis(const QuadSpace& space);
std::vector<BitVec> radical_q_basis(const QuadSpace& space);

SymplecticDecomposition symplectic_decompose(const QuadSpace& space);
QuadClass classify_quadratic(const QuadSpace& space);

// Exact counts from the class invariants (valid for dim < 63).
// anisotropic_count: |{v : Q(v) = 1}|. point_count additionally excludes
// vectors lying in Rad f.
unsigned long long anisotropic_count(const QuadClass& c);
unsigned long long point_count(const QuadClass& c);

// Congruent space M^T G M for a seeded random invertible M. The class of the
// result is an invariant; tests lean on this.
QuadSpace random_basis_change(const QuadSpace& space, std::uint64_t seed);

} // namespace qcl

// Quadratic / symplectic form machinery over GF(2): radicals, the symplectic
// Gram-Schmidt decomposition, the (n_bar, r, type) classification, exact
// counting formulas, and seeded congruence transforms.

#include "qclifford/quadspace.hpp"

#include <random>

#include "qclifford/errors.hpp"

namespace qcl {

char qtype_char(QType t) {
    switch (t) {
        case QType::PLUS: return '+';
        case QType::MINUS: return '-';
        default: return '0';
    }
}

std::vector<BitVec> QuadSpace::f_rows() const {
    std::vector<BitVec> rows(gram);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            if (gram[j].get(i)) rows[i].flip(j);
        rows[i].clear(i); // diagonal of G + G^T cancels
    }
    return rows;
}

namespace {

// Kernel basis of a list of row vectors, via RREF. One basis vector per free
// column, emitted in ascending column order (deterministic).
std::vector<BitVec> kernel_basis(std::vector<BitVec> rows, int dim) {
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < dim && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != rank && rows[k].get(c)) rows[k] ^= rows[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (int c = 0; c < dim; ++c) {
        if (is_pivot[c]) continue;
        BitVec v(dim);
        v.set(c);
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            if (rows[k].get(c)) v.set(pivot_col[k]);
        basis.push_back(v);
    }
    return basis;
}

} // namespace

std::vector<BitVec> radical_f_basis(const QuadSpace& space) {
    return kernel_basis(space.f_rows(), space.dim);
}

std::vector<BitVec> radical_q_basis(const QuadSpace& space) {
    // Q is linear on Rad f; its kernel there is Rad Q.
    std::vector<BitVec> rad = radical_f_basis(space);
    BitVec a0;
    bool have_aniso = false;
    std::vector<BitVec> out;
    for (BitVec& v : rad) {
        if (space.Q(v)) {
            if (!have_aniso) {
                a0 = v;
                have_aniso = true;
                continue;
            }
            v ^= a0;
        }
        out.push_back(v);
    }
    return out;
}

SymplecticDecomposition symplectic_decompose(const QuadSpace& space) {
    const int n = space.dim;
    const std::vector<BitVec> F = space.f_rows();
    auto f_times = [&](const BitVec& v) {
        BitVec out(n);
        for (std::size_t k = 0; k < v.w.size(); ++k) {
            std::uint64_t x = v.w[k];
            while (x) {
                out ^= F[int(k * 64) + std::countr_zero(x)];
                x &= x - 1;
            }
        }
        return out;
    };

    // Working basis starts as the standard one. Repeatedly take the lowest
    // pair (i, j), i < j, with f(w_i, w_j) = 1, extract it, and make the rest
    // orthogonal to it via w -> w + f(w,b) a + f(w,a) b. A vector whose scan
    // finds no partner is in Rad f for good: every later vector is a
    // combination of vectors it already pairs trivially with.
    std::vector<BitVec> work;
    work.reserve(n);
    for (int i = 0; i < n; ++i) work.push_back(BitVec::unit(n, i));
    std::vector<char> radical(n, 0);

    SymplecticDecomposition dec;
    std::size_t i = 0;
    while (i < work.size()) {
        if (radical[i]) {
            ++i;
            continue;
        }
        const BitVec fu = f_times(work[i]);
        std::size_t j = i + 1;
        while (j < work.size() && !(!radical[j] && fu.dot(work[j]))) ++j;
        if (j == work.size()) {
            radical[i] = 1;
            ++i;
            continue;
        }
        BitVec a = work[i], b = work[j];
        const BitVec fb = f_times(b);
        work.erase(work.begin() + j);
        radical.erase(radical.begin() + j);
        work.erase(work.begin() + i);
        radical.erase(radical.begin() + i);
        for (std::size_t k = i; k < work.size(); ++k) {
            if (radical[k]) continue;
            const int wa = fu.dot(work[k]);
            const int wb = fb.dot(work[k]);
            if (wb) work[k] ^= a;
            if (wa) work[k] ^= b;
        }
        dec.pairs.emplace_back(std::move(a), std::move(b));
        // Everything before position i is already marked radical; stay put.
    }

    // Residue = Rad f. Adjust so at most one basis vector is anisotropic.
    dec.rad_f = std::move(work);
    int first_aniso = -1;
    for (std::size_t k = 0; k < dec.rad_f.size(); ++k) {
        if (space.Q(dec.rad_f[k])) {
            if (first_aniso < 0)
                first_aniso = int(k);
            else
                dec.rad_f[k] ^= dec.rad_f[first_aniso];
        }
    }
    dec.aniso_index = first_aniso;
    return dec;
}

QuadClass classify_quadratic(const QuadSpace& space) {
    const SymplecticDecomposition dec = symplectic_decompose(space);
    QuadClass c;
    c.r = int(dec.rad_f.size());
    const bool aniso = dec.aniso_index >= 0;
    c.n_bar = 2 * int(dec.pairs.size()) + (aniso ? 1 : 0);
    if (aniso) {
        c.type = QType::ZERO;
    } else {
        int arf = 0;
        for (const auto& [a, b] : dec.pairs) arf ^= space.Q(a) & space.Q(b);
        c.type = arf ? QType::MINUS : QType::PLUS;
    }
    return c;
}

unsigned long long anisotropic_count(const QuadClass& c) {
    const int n = c.n_bar + c.r - (c.type == QType::ZERO ? 1 : 0);
    if (n >= 63) throw input_error("count overflows past dimension 62");
    if (c.type == QType::ZERO) return 1ull << (n - 1);
    if (c.n_bar == 0) return 0;
    const unsigned long long half = 1ull << (c.n_bar - 1);
    const unsigned long long quarter = 1ull << (c.n_bar / 2 - 1);
    const unsigned long long base = c.type == QType::PLUS ? half - quarter : half + quarter;
    return base << c.r;
}

unsigned long long point_count(const QuadClass& c) {
    // Radical anisotropic vectors are not points of the geometry; they exist
    // only in type ZERO, where Q kills half of Rad f.
    unsigned long long count = anisotropic_count(c);
    if (c.type == QType::ZERO) count -= 1ull << (c.r - 1);
    return count;
}

namespace {

int gf2_rank(std::vector<BitVec> rows, int dim) {
    int rank = 0;
    for (int c = 0; c < dim && rank < int(rows.size()); ++c) {
        int p = rank;
        while (p < int(rows.size()) && !rows[p].get(c)) ++p;
        if (p == int(rows.size())) continue;
        std::swap(rows[rank], rows[p]);
        for (int k = 0; k < int(rows.size()); ++k)
            if (k != rank && rows[k].get(c)) rows[k] ^= rows[rank];
        ++rank;
    }
    return rank;
}

} // namespace

QuadSpace random_basis_change(const QuadSpace& space, std::uint64_t seed) {
    const int n = space.dim;
    std::mt19937_64 rng(seed);
    std::vector<BitVec> m(n, BitVec(n));
    for (;;) {
        for (int i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m[i].w.size(); ++k) m[i].w[k] = rng();
        // mask tail bits past dim
        const int tail = n & 63;
        if (tail)
            for (int i = 0; i < n; ++i) m[i].w.back() &= (std::uint64_t(1) << tail) - 1;
        if (gf2_rank(m, n) == n) break;
    }

    // G' = M^T G M, computed with row operations; then renormalized to the
    // upper-triangular-plus-diagonal storage convention. Q and f (hence the
    // class) are preserved; the raw bilinear g on basis vectors is not, which
    // is fine for classification purposes.
    std::vector<BitVec> gm(n, BitVec(n));
    for (int i = 0; i < n; ++i)
        for (int k : space.gram[i].bits()) gm[i] ^= m[k];
    std::vector<BitVec> mt(n, BitVec(n));
    for (int i = 0; i < n; ++i)
        for (int j : m[i].bits()) mt[j].set(i);
    std::vector<BitVec> full(n, BitVec(n));
    for (int a = 0; a < n; ++a)
        for (int k : mt[a].bits()) full[a] ^= gm[k];

    QuadSpace out(n);
    for (int i = 0; i < n; ++i) {
        if (full[i].get(i)) out.gram[i].set(i);
        for (int j = i + 1; j < n; ++j)
            if (full[i].get(j) ^ full[j].get(i)) out.gram[i].set(j);
    }
    return out;
}

} // namespace qcl

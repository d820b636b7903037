// Generalized spin machinery: the signed-xor operator representation on the
// monomial basis, exact verification of the graph relations, Lie span
// dimension, and finite-prime-field plane models with their transposition
// involution.

#include "qclifford/spin.hpp"

#include <bit>
#include <map>

#include "qclifford/errors.hpp"

namespace qcl {

SignedXorOp compose(const SignedXorOp& a, const SignedXorOp& b) {
    if (a.coef.size() != b.coef.size()) throw input_error("operator size mismatch");
    SignedXorOp out;
    out.shift = a.shift ^ b.shift;
    out.coef.resize(a.coef.size());
    for (std::size_t w = 0; w < b.coef.size(); ++w)
        out.coef[w] = b.coef[w] * a.coef[w ^ b.shift];
    return out;
}

SignedXorOp negate(const SignedXorOp& a) {
    SignedXorOp out = a;
    for (Rational& c : out.coef) c = -c;
    return out;
}

SignedXorOp half_bracket(const SignedXorOp& a, const SignedXorOp& b) {
    const SignedXorOp ab = compose(a, b), ba = compose(b, a);
    SignedXorOp out;
    out.shift = ab.shift;
    out.coef.resize(ab.coef.size());
    for (std::size_t w = 0; w < ab.coef.size(); ++w) out.coef[w] = (ab.coef[w] - ba.coef[w]) / 2;
    return out;
}

bool is_zero(const SignedXorOp& a) {
    for (const Rational& c : a.coef)
        if (c != 0) return false;
    return true;
}

std::vector<SignedXorOp> left_regular_rep(const ColoredGraph& g) {
    const int n = g.n();
    if (n > 20) throw spin_precondition_error("left regular representation capped at 20 vertices");
    for (int i = 0; i < n; ++i) {
        if (!g.black[i])
            throw spin_precondition_error("left regular representation needs all-black vertices");
        if (g.labels[i] != 1)
            throw spin_precondition_error("left regular representation needs unit labels");
    }
    const QuadSpace space = build_space(g);
    std::vector<std::uint32_t> grow(n);
    for (int i = 0; i < n; ++i) grow[i] = std::uint32_t(space.gram[i].low_mask());

    std::vector<SignedXorOp> ops(n);
    const std::size_t total = std::size_t(1) << n;
    for (int i = 0; i < n; ++i) {
        ops[i].shift = std::uint32_t(1) << i;
        ops[i].coef.resize(total);
        for (std::size_t w = 0; w < total; ++w)
            ops[i].coef[w] = (std::popcount(grow[i] & std::uint32_t(w)) & 1) ? -1 : 1;
    }
    return ops;
}

namespace {

// Incremental exact row reduction, bucketed by shift (brackets of single
// shift operators keep a single shift, so a basis of such elements exists).
struct ShiftSpan {
    // shift -> rows in echelon form, keyed by pivot index
    std::map<std::uint32_t, std::map<std::size_t, std::vector<Rational>>> rows;
    long long dim = 0;

    // Returns the reduced nonzero remainder, or empty when dependent.
    std::vector<Rational> insert(std::uint32_t shift, std::vector<Rational> vec) {
        auto& bucket = rows[shift];
        std::size_t lead = 0;
        while (lead < vec.size()) {
            if (vec[lead] == 0) {
                ++lead;
                continue;
            }
            auto it = bucket.find(lead);
            if (it == bucket.end()) break;
            const Rational factor = vec[lead] / it->second[lead];
            for (std::size_t k = lead; k < vec.size(); ++k) vec[k] -= factor * it->second[k];
            ++lead;
        }
        if (lead == vec.size()) return {};
        bucket.emplace(lead, vec);
        ++dim;
        return vec;
    }
};

} // namespace

SpinReport verify_spin(const ColoredGraph& g, const std::vector<SignedXorOp>& ops) {
    const int n = g.n();
    if (int(ops.size()) != n) throw input_error("operator count does not match the graph");
    if (n > 20) throw spin_precondition_error("spin verification capped at 20 vertices");
    const std::size_t total = std::size_t(1) << n;
    for (const SignedXorOp& op : ops)
        if (op.coef.size() != total) throw input_error("operator basis size mismatch");

    SignedXorOp minus_one;
    minus_one.shift = 0;
    minus_one.coef.assign(total, -1);

    SpinReport rep;
    rep.squares_ok = true;
    rep.edge_anticommute_ok = true;
    rep.nonedge_commute_ok = true;
    rep.berman_ok = true;
    for (int i = 0; i < n; ++i)
        if (compose(ops[i], ops[i]) != minus_one) rep.squares_ok = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const SignedXorOp ij = compose(ops[i], ops[j]);
            const SignedXorOp ji = compose(ops[j], ops[i]);
            if (g.edge(i, j)) {
                if (ij != negate(ji)) rep.edge_anticommute_ok = false;
                if (half_bracket(ops[i], half_bracket(ops[i], ops[j])) != negate(ops[j]))
                    rep.berman_ok = false;
            } else if (ij != ji) {
                rep.nonedge_commute_ok = false;
            }
        }
    }

    // Lie span under the normalized bracket: bracket every independent
    // element against the generators until nothing new appears.
    ShiftSpan span;
    std::vector<SignedXorOp> work;
    for (const SignedXorOp& op : ops) {
        const std::vector<Rational> rem = span.insert(op.shift, op.coef);
        if (!rem.empty()) work.push_back(SignedXorOp{op.shift, rem});
    }
    while (!work.empty()) {
        const SignedXorOp cur = std::move(work.back());
        work.pop_back();
        for (const SignedXorOp& gen : ops) {
            SignedXorOp cand = half_bracket(cur, gen);
            if (is_zero(cand)) continue;
            const std::vector<Rational> rem = span.insert(cand.shift, std::move(cand.coef));
            if (!rem.empty()) work.push_back(SignedXorOp{cand.shift, rem});
        }
    }
    rep.lie_span_dim = span.dim;
    return rep;
}

FpMat fp_mul(const FpMat& x, const FpMat& y) {
    if (x.n != y.n || x.p != y.p) throw input_error("matrix shape mismatch");
    FpMat out(x.n, x.p);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const std::uint64_t xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < x.n; ++j)
                out.at(i, j) = std::uint32_t((out.at(i, j) + xv * y.at(k, j)) % x.p);
        }
    return out;
}

FpMat fp_transpose(const FpMat& x) {
    FpMat out(x.n, x.p);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

FpMat fp_neg(const FpMat& x) {
    FpMat out = x;
    for (std::uint32_t& v : out.a) v = v ? x.p - v : 0;
    return out;
}

FpMat fp_kron(const FpMat& x, const FpMat& y) {
    FpMat out(x.n * y.n, x.p);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            const std::uint64_t v = x.at(i, j);
            if (!v) continue;
            for (int a = 0; a < y.n; ++a)
                for (int b = 0; b < y.n; ++b)
                    out.at(i * y.n + a, j * y.n + b) = std::uint32_t(v * y.at(a, b) % x.p);
        }
    return out;
}

FpMat fp_identity(int n, std::uint32_t p) {
    FpMat out(n, p);
    for (int i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

namespace {

std::uint32_t fp_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return std::uint32_t(acc);
}

std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p) { return fp_pow(x, p - 2, p); }

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; std::uint64_t(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

int fp_span_dim(const std::vector<FpMat>& gens, std::uint32_t p) {
    if (gens.empty()) throw input_error("span of an empty generator set");
    const int n = gens[0].n;
    // Echelon rows over F_p keyed by pivot, plus a worklist of matrices.
    std::map<std::size_t, std::vector<std::uint32_t>> rows;
    std::vector<FpMat> work;
    auto insert = [&](const FpMat& m) -> bool {
        std::vector<std::uint32_t> vec = m.a;
        std::size_t lead = 0;
        while (lead < vec.size()) {
            if (!vec[lead]) {
                ++lead;
                continue;
            }
            auto it = rows.find(lead);
            if (it == rows.end()) break;
            const std::uint64_t factor = std::uint64_t(vec[lead]) * fp_inv(it->second[lead], p) % p;
            for (std::size_t k = lead; k < vec.size(); ++k)
                vec[k] = std::uint32_t((vec[k] + (p - std::uint32_t(factor * it->second[k] % p))) %
                                       p);
            ++lead;
        }
        if (lead == vec.size()) return false;
        rows.emplace(lead, vec);
        FpMat red(n, p);
        red.a = std::move(vec);
        work.push_back(std::move(red));
        return true;
    };

    insert(fp_identity(n, p));
    for (const FpMat& g : gens) insert(g);
    while (!work.empty()) {
        const FpMat cur = std::move(work.back());
        work.pop_back();
        for (const FpMat& g : gens) insert(fp_mul(g, cur));
    }
    return int(rows.size());
}

namespace {

struct PlaneLocal {
    FpMat a, b;
    bool minus = false;
};

// 2x2 generator pair for one hyperbolic plane. PLUS: both square to +1.
// MINUS: both square to -1, built from i with i^2 = -1 (p = 1 mod 4) or from
// the least x, y with x^2 + y^2 = -1 (p = 3 mod 4).
PlaneLocal make_plane(bool minus, std::uint32_t p) {
    PlaneLocal out;
    out.minus = minus;
    out.a = FpMat(2, p);
    out.b = FpMat(2, p);
    if (!minus) {
        out.a.at(0, 1) = 1;
        out.a.at(1, 0) = 1;
        out.b.at(0, 0) = 1;
        out.b.at(1, 1) = p - 1;
        return out;
    }
    out.a.at(0, 1) = 1;
    out.a.at(1, 0) = p - 1;
    if (p % 4 == 1) {
        std::uint32_t i = 0;
        for (std::uint32_t x = 2; x < p; ++x)
            if (std::uint64_t(x) * x % p == p - 1) {
                i = x;
                break;
            }
        out.b.at(0, 0) = i;
        out.b.at(1, 1) = p - i;
    } else {
        std::uint32_t xs = 0, ys = 0;
        bool found = false;
        for (std::uint32_t x = 0; x < p && !found; ++x)
            for (std::uint32_t y = 0; y < p && !found; ++y)
                if ((std::uint64_t(x) * x + std::uint64_t(y) * y + 1) % p == 0) {
                    xs = x;
                    ys = y;
                    found = true;
                }
        out.b.at(0, 0) = xs;
        out.b.at(0, 1) = (p - ys) % p;
        out.b.at(1, 0) = (p - ys) % p;
        out.b.at(1, 1) = (p - xs) % p;
    }
    return out;
}

std::vector<PlaneLocal> class_planes(const QuadClass& c, std::uint32_t p) {
    if (!is_odd_prime(p)) throw input_error("plane models need an odd prime");
    if (c.r != 0 || c.type == QType::ZERO)
        throw input_error("plane models need a nondegenerate PLUS or MINUS class");
    if (c.n_bar < 2 || c.n_bar % 2 != 0) throw input_error("plane models need even n >= 2");
    if (c.n_bar > 16) throw input_error("plane models capped at dimension 16");
    std::vector<PlaneLocal> planes;
    for (int k = 0; k < c.n_bar / 2; ++k)
        planes.push_back(make_plane(c.type == QType::MINUS && k == 0, p));
    return planes;
}

// Embed a 2x2 local block at tensor slot `slot` of `m` slots.
FpMat embed(const FpMat& local, int slot, int m) {
    FpMat out = fp_identity(1, local.p);
    for (int k = 0; k < m; ++k) out = fp_kron(out, k == slot ? local : fp_identity(2, local.p));
    return out;
}

} // namespace

std::vector<FpMat> plane_models(const QuadClass& c, std::uint32_t p) {
    const std::vector<PlaneLocal> planes = class_planes(c, p);
    const int m = int(planes.size());
    std::vector<FpMat> gens;
    gens.reserve(2 * m);
    for (int k = 0; k < m; ++k) {
        gens.push_back(embed(planes[k].a, k, m));
        gens.push_back(embed(planes[k].b, k, m));
    }
    return gens;
}

namespace {

bool transpose_check_impl(const QuadClass& c, std::uint32_t p, bool flip_first_sign) {
    const std::vector<PlaneLocal> planes = class_planes(c, p);
    const int m = int(planes.size());

    // Twist: identity on PLUS factors, the symplectic form on the MINUS
    // factor, so that psi(X) = S^-1 X^T S restricts to plain transposition
    // where possible and to the adjugate (quaternion conjugation) on the
    // definite factor.
    FpMat s = fp_identity(1, p), s_inv = fp_identity(1, p);
    for (const PlaneLocal& plane : planes) {
        FpMat block = fp_identity(2, p), block_inv = fp_identity(2, p);
        if (plane.minus) {
            block = FpMat(2, p);
            block.at(0, 1) = 1;
            block.at(1, 0) = p - 1;
            block_inv = fp_neg(block);
        }
        s = fp_kron(s, block);
        s_inv = fp_kron(s_inv, block_inv);
    }
    auto psi = [&](const FpMat& x) { return fp_mul(s_inv, fp_mul(fp_transpose(x), s)); };

    std::vector<FpMat> gens;
    std::vector<int> q; // Q value of each generator
    for (int k = 0; k < m; ++k) {
        gens.push_back(embed(planes[k].a, k, m));
        gens.push_back(embed(planes[k].b, k, m));
        q.push_back(planes[k].minus ? 1 : 0);
        q.push_back(planes[k].minus ? 1 : 0);
    }
    if (flip_first_sign) q[0] ^= 1;

    const int g = int(gens.size());
    auto signed_mat = [&](const FpMat& x, int sign) { return sign ? fp_neg(x) : x; };
    for (int i = 0; i < g; ++i)
        if (psi(gens[i]) != signed_mat(gens[i], q[i])) return false;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            const FpMat w = fp_mul(gens[i], gens[j]);
            if (psi(w) != signed_mat(fp_mul(gens[j], gens[i]), (q[i] + q[j]) & 1)) return false;
        }
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) {
                const FpMat w = fp_mul(fp_mul(gens[i], gens[j]), gens[k]);
                const FpMat rev = fp_mul(fp_mul(gens[k], gens[j]), gens[i]);
                if (psi(w) != signed_mat(rev, (q[i] + q[j] + q[k]) & 1)) return false;
            }
    return true;
}

} // namespace

bool transpose_check(const QuadClass& c, std::uint32_t p) {
    return transpose_check_impl(c, p, false);
}

bool transpose_check_negative_control(const QuadClass& c, std::uint32_t p) {
    return transpose_check_impl(c, p, true);
}

} // namespace qcl

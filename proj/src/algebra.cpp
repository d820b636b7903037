// Exact arithmetic in the twisted group algebra of GF(2)^V attached to a
// colored labeled graph.

#include "qclifford/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qclifford/errors.hpp"

namespace qcl {

AlgebraContext make_context(const ColoredGraph& g) {
    return AlgebraContext{build_space(g), g.labels, g.names};
}

AlgebraElement unit_element(const AlgebraContext& ctx) {
    AlgebraElement one;
    one.terms.emplace(BitVec(ctx.space.dim), 1);
    return one;
}

AlgebraElement generator_element(const AlgebraContext& ctx, int vertex) {
    AlgebraElement e;
    e.terms.emplace(BitVec::unit(ctx.space.dim, vertex), 1);
    return e;
}

AlgebraElement monomial_element(const AlgebraContext& ctx, const BitVec& v, const Rational& coef) {
    AlgebraElement e;
    if (coef != 0) e.terms.emplace(v, coef);
    (void)ctx;
    return e;
}

Rational lambda_factor(const AlgebraContext& ctx, const BitVec& v, const BitVec& w) {
    Rational prod = 1;
    for (std::size_t k = 0; k < v.w.size(); ++k) {
        std::uint64_t x = v.w[k] & w.w[k];
        while (x) {
            prod *= ctx.labels[int(k * 64) + std::countr_zero(x)];
            x &= x - 1;
        }
    }
    return prod;
}

namespace {

void accumulate(AlgebraElement& out, const BitVec& v, const Rational& c) {
    auto [it, fresh] = out.terms.try_emplace(v, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) out.terms.erase(it);
    } else if (it->second == 0) {
        out.terms.erase(it);
    }
}

} // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [v, c] : b.terms) accumulate(out, v, c);
    return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
    for (const auto& [v, c] : b.terms) accumulate(out, v, -c);
    return out;
}

AlgebraElement scale(const AlgebraElement& a, const Rational& c) {
    AlgebraElement out;
    if (c == 0) return out;
    for (const auto& [v, coef] : a.terms) out.terms.emplace(v, coef * c);
    return out;
}

AlgebraElement multiply(const AlgebraContext& ctx, const AlgebraElement& a,
                        const AlgebraElement& b) {
    if (a.terms.size() * b.terms.size() > 65536)
        throw input_error("product exceeds the 65536 term-pair cap");
    AlgebraElement out;
    for (const auto& [v, cv] : a.terms) {
        for (const auto& [w, cw] : b.terms) {
            Rational c = cv * cw * lambda_factor(ctx, v, w);
            if (ctx.space.g(v, w)) c = -c;
            accumulate(out, v ^ w, c);
        }
    }
    return out;
}

AlgebraElement bracket(const AlgebraContext& ctx, const AlgebraElement& a,
                       const AlgebraElement& b) {
    AlgebraElement out = sub(multiply(ctx, a, b), multiply(ctx, b, a));
    for (auto& [v, c] : out.terms) c /= 2;
    return out;
}

AlgebraElement tau_h(const AlgebraContext& ctx, const BitVec& phi, const AlgebraElement& a) {
    if (phi.none()) throw input_error("tau_h needs a nonzero functional");
    (void)ctx;
    AlgebraElement out;
    for (const auto& [v, c] : a.terms) out.terms.emplace(v, phi.dot(v) ? -c : c);
    return out;
}

AlgebraElement tau_q(const AlgebraContext& ctx, const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [v, c] : a.terms) out.terms.emplace(v, ctx.space.Q(v) ? -c : c);
    return out;
}

namespace {

void check_enumeration_cap(const AlgebraContext& ctx, const char* what) {
    if (ctx.space.dim > 20)
        throw input_error(std::string(what) + " capped at dimension 20");
}

// All 2^k combinations of the given GF(2) basis, in ascending bitmask order.
std::vector<BitVec> span_of(const std::vector<BitVec>& basis, int dim) {
    std::vector<BitVec> out{BitVec(dim)};
    for (const BitVec& b : basis) {
        const std::size_t half = out.size();
        for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] ^ b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<BitVec> center_basis(const AlgebraContext& ctx) {
    check_enumeration_cap(ctx, "center enumeration");
    return span_of(radical_f_basis(ctx.space), ctx.space.dim);
}

std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>> ideal_split(
    const AlgebraContext& ctx, const BitVec& r0) {
    check_enumeration_cap(ctx, "ideal split");
    for (const Rational& l : ctx.labels)
        if (l != 1) throw input_error("ideal split needs all labels 1");
    if (r0.none()) throw input_error("ideal split needs a nonzero radical vector");
    const std::vector<BitVec> F = ctx.space.f_rows();
    for (int i = 0; i < ctx.space.dim; ++i)
        if (F[i].dot(r0)) throw input_error("ideal split vector must lie in Rad f");
    if (ctx.space.Q(r0)) throw input_error("ideal split vector must be isotropic");

    std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>> out;
    const std::uint64_t total = std::uint64_t(1) << ctx.space.dim;
    for (std::uint64_t um = 0; um < total; ++um) {
        const BitVec u = BitVec::from_mask(ctx.space.dim, um);
        const BitVec u2 = u ^ r0;
        if (u2 < u) continue; // one representative per coset
        const Rational s = ctx.space.g(u, r0) ? -1 : 1;
        AlgebraElement plus, minus;
        plus.terms.emplace(u, 1);
        plus.terms.emplace(u2, s);
        minus.terms.emplace(u, 1);
        minus.terms.emplace(u2, -s);
        out.first.push_back(std::move(plus));
        out.second.push_back(std::move(minus));
    }
    return out;
}

TauGrading tau_grading(const AlgebraContext& ctx, const BitVec& phi) {
    check_enumeration_cap(ctx, "grading enumeration");
    if (phi.none()) throw input_error("grading needs a nonzero functional");
    TauGrading grading;
    const std::uint64_t total = std::uint64_t(1) << ctx.space.dim;
    for (std::uint64_t vm = 0; vm < total; ++vm) {
        const BitVec v = BitVec::from_mask(ctx.space.dim, vm);
        grading.part[ctx.space.Q(v)][phi.dot(v)].push_back(v);
    }
    return grading;
}

std::string format_element(const AlgebraContext& ctx, const AlgebraElement& a) {
    if (a.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        const bool unit_coef = c == 1;
        if (!unit_coef) os << "(" << rational_str(c) << ")";
        if (v.none()) {
            os << (unit_coef ? "1" : " 1");
            continue;
        }
        if (!unit_coef) os << " ";
        os << "{";
        bool comma = false;
        for (int i : v.bits()) {
            if (comma) os << ",";
            comma = true;
            os << ctx.names[i];
        }
        os << "}";
    }
    return os.str();
}

} // namespace qcl

// Bracket closure of vertex generators and identification of the Lie algebra
// they span.

#include "qclifford/lie.hpp"

#include <algorithm>
#include <bit>

#include "qclifford/errors.hpp"

namespace qcl {

namespace {

void require_black_connected(const ColoredGraph& g, const char* who) {
    for (int i = 0; i < g.n(); ++i)
        if (!g.black[i]) throw input_error(std::string(who) + " needs an all-black graph");
    if (!is_connected(g)) throw connectivity_error(std::string(who) + " needs a connected graph");
}

} // namespace

std::vector<BitVec> closure_points(const ColoredGraph& g) {
    const int n = g.n();
    if (n > 24) throw input_error("closure capped at 24 vertices");
    require_black_connected(g, "closure");

    const QuadSpace space = build_space(g);
    const std::vector<BitVec> F = space.f_rows();
    std::vector<std::uint32_t> frow(n);
    for (int i = 0; i < n; ++i) frow[i] = std::uint32_t(F[i].low_mask());

    auto f_vec = [&](std::uint32_t v) {
        std::uint32_t acc = 0;
        while (v) {
            acc ^= frow[std::countr_zero(v)];
            v &= v - 1;
        }
        return acc;
    };

    std::vector<char> in_set(std::size_t(1) << n, 0);
    std::vector<std::uint32_t> members, fmask;
    std::vector<std::size_t> todo;
    auto push = [&](std::uint32_t v) {
        if (in_set[v]) return;
        in_set[v] = 1;
        members.push_back(v);
        fmask.push_back(f_vec(v));
        todo.push_back(members.size() - 1);
    };
    for (int i = 0; i < n; ++i) push(std::uint32_t(1) << i);

    while (!todo.empty()) {
        const std::size_t idx = todo.back();
        todo.pop_back();
        const std::uint32_t v = members[idx], fv = fmask[idx];
        // Compare against a snapshot; anything added later will itself be
        // processed against the full set.
        const std::size_t snapshot = members.size();
        for (std::size_t k = 0; k < snapshot; ++k)
            if (std::popcount(fv & members[k]) & 1) push(v ^ members[k]);
    }

    std::vector<BitVec> out;
    out.reserve(members.size());
    std::sort(members.begin(), members.end());
    for (std::uint32_t m : members) out.push_back(BitVec::from_mask(n, m));
    return out;
}

namespace {

// Exact type of the algebra generated by the vertices. Line graphs first: the
// closure fills the antisymmetric model of the root, including graphs whose
// twin reduction would lose that (a path of three is the line graph of a path
// of four, yet reduces to an edge). Then twin pairs: collapsing one splits
// the algebra into two ideals of the collapsed type. Finally the reduced
// non-line case is the bracket-span lookup.
bool is_complete_triangle(const ColoredGraph& g) {
    return g.n() == 3 && g.edge(0, 1) && g.edge(0, 2) && g.edge(1, 2);
}

LieIsoType compact_type(const ColoredGraph& g, FieldType f) {
    if (is_complete_triangle(g)) {
        // line_graph_root resolves the triangle's root ambiguity to K_3 by
        // convention, but the algebra the three vertices generate is the full
        // antisymmetric model of the OTHER root, the 3-star.
        return {LieIsoType::Family::SO, 4, TailFactor::NONE, 0};
    }
    const RootReport root = line_graph_root(g);
    if (root.is_line_graph)
        return {LieIsoType::Family::SO, root.root.n(), TailFactor::NONE, 0};

    const ReductionReport red = reduce_graph(g);
    if (red.reduced.n() < g.n()) {
        for (const std::vector<int>& cls : red.classes) {
            if (cls.size() < 2) continue;
            std::vector<int> keep;
            for (int v = 0; v < g.n(); ++v)
                if (v != cls[1]) keep.push_back(v);
            LieIsoType t = compact_type(g.induced(keep), f);
            t.copies_log2 += 1;
            return t;
        }
    }
    return lie_iso(classify_quadratic(build_space(g)), f).gvq;
}

} // namespace

KReport identify_K(const ColoredGraph& g, FieldType f) {
    if (g.n() > 64) throw input_error("identification capped at 64 vertices");
    require_black_connected(g, "identification");

    KReport rep;
    if (g.n() <= 24) rep.closure_dim = (long long)closure_points(g).size();

    const ColoredGraph reduced = reduce_graph(g).reduced;
    const RootReport root = line_graph_root(reduced);
    if (root.is_line_graph) {
        rep.reduced_is_line_graph = true;
        rep.root_size = root.root.n();
        rep.quotient = {LieIsoType::Family::SO, root.root.n(), TailFactor::NONE, 0};
    } else {
        rep.quotient = lie_iso(classify_quadratic(build_space(reduced)), f).gvq;
    }
    rep.quotient_dim = lie_dim(rep.quotient);

    rep.compact = compact_type(g, f);
    rep.compact_dim = lie_dim(rep.compact);
    return rep;
}

std::vector<RatMat> antisymmetric_model(int k) {
    if (k < 2 || k > 64) throw input_error("antisymmetric model needs 2 <= k <= 64");
    std::vector<RatMat> out;
    out.reserve(std::size_t(k) * (k - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            RatMat m(k);
            m.at(i, j) = 1;
            m.at(j, i) = -1;
            out.push_back(std::move(m));
        }
    return out;
}

} // namespace qcl

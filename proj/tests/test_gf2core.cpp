#include <doctest.h>

#include <cstdint>
#include <random>

#include "property_suites.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/graph.hpp"
#include "qclifford/quadspace.hpp"

using namespace qcl;

namespace {

// Independent classification oracle by exhaustive enumeration (n <= 12):
// radical size fixes r, an anisotropic radical vector forces the odd type,
// and otherwise the anisotropic count separates the two even types.
QuadClass brute_classify(const QuadSpace& s) {
    const int n = s.dim;
    REQUIRE(n <= 12);
    const std::vector<BitVec> F = s.f_rows();

    unsigned long long rad_size = 0, aniso = 0;
    bool aniso_in_rad = false;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) {
        const BitVec v = BitVec::from_mask(n, m);
        bool in_rad = true;
        for (int i = 0; i < n && in_rad; ++i) in_rad = F[i].dot(v) == 0;
        const bool an = s.Q(v) != 0;
        if (in_rad) {
            ++rad_size;
            aniso_in_rad = aniso_in_rad || an;
        }
        if (an) ++aniso;
    }
    int r = 0;
    while ((1ull << r) < rad_size) ++r;
    const int m = n - r;

    if (aniso_in_rad) return {m + 1, r, QType::ZERO};
    if (m == 0) return {0, r, QType::PLUS};
    const unsigned long long plus_count = ((1ull << (m - 1)) - (1ull << (m / 2 - 1))) << r;
    const unsigned long long minus_count = ((1ull << (m - 1)) + (1ull << (m / 2 - 1))) << r;
    if (aniso == plus_count) return {m, r, QType::PLUS};
    REQUIRE(aniso == minus_count);
    return {m, r, QType::MINUS};
}

QuadSpace direct_sum(const QuadSpace& a, const QuadSpace& b) {
    QuadSpace out(a.dim + b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (a.gram[i].get(j)) out.gram[i].set(j);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            if (b.gram[i].get(j)) out.gram[a.dim + i].set(a.dim + j);
    return out;
}

// The four nondegenerate building blocks: hyperbolic (+) plane, definite (-)
// plane, anisotropic point (0), and the zero point (fully degenerate).
QuadSpace plus_plane() {
    QuadSpace s(2);
    s.gram[0].set(1);
    return s;
}
QuadSpace minus_plane() {
    QuadSpace s(2);
    s.gram[0].set(0);
    s.gram[0].set(1);
    s.gram[1].set(1);
    return s;
}
QuadSpace aniso_point() {
    QuadSpace s(1);
    s.gram[0].set(0);
    return s;
}
QuadSpace zero_point() { return QuadSpace(1); }

} // namespace

TEST_CASE("polarization identity holds exhaustively") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const int n = 4 + int(seed * 2); // 6, 8, 10
        const QuadSpace s = build_space(props::random_graph(seed, n, true, true));
        long long violations = 0;
        for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a)
            for (std::uint32_t b = 0; b < (std::uint32_t(1) << n); ++b) {
                const BitVec u = BitVec::from_mask(n, a), v = BitVec::from_mask(n, b);
                if (s.Q(u ^ v) != (s.Q(u) ^ s.Q(v) ^ s.f(u, v))) ++violations;
            }
        REQUIRE(violations == 0);
    }
}

TEST_CASE("classification matches the enumeration oracle") {
    std::vector<QuadSpace> spaces;
    for (int n = 1; n <= 9; ++n) spaces.push_back(build_space(family_graph("A:" + std::to_string(n))));
    for (int n = 4; n <= 8; ++n) spaces.push_back(build_space(family_graph("D:" + std::to_string(n))));
    for (int n = 6; n <= 10; ++n) spaces.push_back(build_space(family_graph("E:" + std::to_string(n))));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            if (p + q)
                spaces.push_back(build_space(
                    family_graph("Cl:" + std::to_string(p) + "," + std::to_string(q))));
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        spaces.push_back(build_space(props::random_graph(seed * 7, 1 + int(seed % 10), true, true)));

    for (const QuadSpace& s : spaces) REQUIRE(classify_quadratic(s) == brute_classify(s));
}

TEST_CASE("frozen classification examples") {
    CHECK(classify_quadratic(build_space(family_graph("Cl:0,3"))) == QuadClass{2, 1, QType::MINUS});
    CHECK(classify_quadratic(build_space(family_graph("Cl:0,4"))) == QuadClass{4, 0, QType::MINUS});
    CHECK(classify_quadratic(QuadSpace(0)) == QuadClass{0, 0, QType::PLUS});
    CHECK(classify_quadratic(build_space(family_graph("E:8"))) == QuadClass{8, 0, QType::PLUS});
    CHECK(classify_quadratic(build_space(family_graph("E:7"))) == QuadClass{7, 1, QType::ZERO});
}

TEST_CASE("symplectic decomposition satisfies its contract") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const int n = 1 + int(seed % 12);
        const QuadSpace s = build_space(props::random_graph(seed * 13, n, true, true));
        const SymplecticDecomposition d = symplectic_decompose(s);

        for (std::size_t i = 0; i < d.pairs.size(); ++i) {
            REQUIRE(s.f(d.pairs[i].first, d.pairs[i].second) == 1);
            for (std::size_t j = i + 1; j < d.pairs.size(); ++j) {
                REQUIRE(s.f(d.pairs[i].first, d.pairs[j].first) == 0);
                REQUIRE(s.f(d.pairs[i].first, d.pairs[j].second) == 0);
                REQUIRE(s.f(d.pairs[i].second, d.pairs[j].first) == 0);
                REQUIRE(s.f(d.pairs[i].second, d.pairs[j].second) == 0);
            }
        }
        int aniso_rad = 0;
        for (const BitVec& z : d.rad_f) {
            for (const auto& [a, b] : d.pairs) {
                REQUIRE(s.f(z, a) == 0);
                REQUIRE(s.f(z, b) == 0);
            }
            if (s.Q(z)) ++aniso_rad;
        }
        REQUIRE(aniso_rad <= 1);
        REQUIRE((d.aniso_index >= 0 ? 1 : 0) == aniso_rad);
        if (d.aniso_index >= 0) REQUIRE(s.Q(d.rad_f[d.aniso_index]) == 1);
        REQUIRE(int(2 * d.pairs.size() + d.rad_f.size()) == n);

        // Determinism: the lowest-pair pivot rule leaves nothing to chance.
        const SymplecticDecomposition again = symplectic_decompose(s);
        REQUIRE(again.pairs == d.pairs);
        REQUIRE(again.rad_f == d.rad_f);
        REQUIRE(again.aniso_index == d.aniso_index);
    }
}

TEST_CASE("radical of Q sits inside the radical of f with codimension at most one") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const QuadSpace s = build_space(props::random_graph(seed * 5, 1 + int(seed % 11), true, true));
        const std::vector<BitVec> rf = radical_f_basis(s);
        const std::vector<BitVec> rq = radical_q_basis(s);
        REQUIRE(rq.size() <= rf.size());
        REQUIRE(rf.size() - rq.size() <= 1);
        for (const BitVec& v : rq) {
            REQUIRE(s.Q(v) == 0);
            for (int i = 0; i < s.dim; ++i) REQUIRE(s.f(v, BitVec::unit(s.dim, i)) == 0);
        }
    }
}

TEST_CASE("type product rule under direct sums") {
    const QuadSpace P = plus_plane(), M = minus_plane(), A = aniso_point(), Z = zero_point();

    auto type_of = [](const QuadSpace& s) { return classify_quadratic(s).type; };
    // + is the identity, two minuses cancel, an anisotropic radical wins.
    CHECK(type_of(direct_sum(P, P)) == QType::PLUS);
    CHECK(type_of(direct_sum(P, M)) == QType::MINUS);
    CHECK(type_of(direct_sum(M, P)) == QType::MINUS);
    CHECK(type_of(direct_sum(M, M)) == QType::PLUS);
    CHECK(type_of(direct_sum(A, P)) == QType::ZERO);
    CHECK(type_of(direct_sum(A, M)) == QType::ZERO);
    CHECK(type_of(direct_sum(Z, M)) == QType::MINUS);
    CHECK(type_of(direct_sum(Z, A)) == QType::ZERO);

    // Two anisotropic radical directions: their sum is isotropic, so one
    // anisotropic direction remains and the type stays odd, with r = 2.
    CHECK(classify_quadratic(direct_sum(A, A)) == QuadClass{1, 2, QType::ZERO});

    // Every composite agrees with the enumeration oracle.
    for (const QuadSpace* x : {&P, &M, &A, &Z})
        for (const QuadSpace* y : {&P, &M, &A, &Z}) {
            const QuadSpace s = direct_sum(*x, *y);
            CHECK(classify_quadratic(s) == brute_classify(s));
            const QuadSpace s3 = direct_sum(s, M);
            CHECK(classify_quadratic(s3) == brute_classify(s3));
        }
}

TEST_CASE("count formulas at small dimension") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int n = 1 + int(seed % 10);
        const QuadSpace s = build_space(props::random_graph(seed * 19, n, true, true));
        const QuadClass c = classify_quadratic(s);
        const std::vector<BitVec> F = s.f_rows();
        unsigned long long aniso = 0, pts = 0;
        for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m) {
            const BitVec v = BitVec::from_mask(n, m);
            if (!s.Q(v)) continue;
            ++aniso;
            bool in_rad = true;
            for (int i = 0; i < n && in_rad; ++i) in_rad = F[i].dot(v) == 0;
            if (!in_rad) ++pts;
        }
        REQUIRE(anisotropic_count(c) == aniso);
        REQUIRE(point_count(c) == pts);
    }
}

TEST_CASE("random basis change is seeded deterministically") {
    const QuadSpace s = build_space(family_graph("E:7"));
    const QuadSpace a = random_basis_change(s, 12345);
    const QuadSpace b = random_basis_change(s, 12345);
    REQUIRE(a.gram == b.gram);
    REQUIRE(classify_quadratic(a) == classify_quadratic(s));
    // The output stays in normalized gram shape: no strictly-lower bits.
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < i; ++j) REQUIRE(!a.gram[i].get(j));
}

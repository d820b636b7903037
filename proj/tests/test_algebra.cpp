#include <doctest.h>

#include <random>
#include <sstream>

#include "property_suites.hpp"
#include "qclifford/algebra.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/graph.hpp"

using namespace qcl;

namespace {

ColoredGraph from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

AlgebraElement word_product(const AlgebraContext& ctx, const ColoredGraph& g,
                            const std::vector<std::string>& word) {
    AlgebraElement acc = unit_element(ctx);
    for (const std::string& name : word)
        acc = multiply(ctx, acc, generator_element(ctx, g.index_of(name)));
    return acc;
}

} // namespace

TEST_CASE("generator relations") {
    // Black vertices square to minus their label, white ones to plus.
    const ColoredGraph g = from_text("vertex a black 5/3\nvertex b white 2\nvertex c black 1\n"
                                     "edge a b\nedge b c\n");
    const AlgebraContext ctx = make_context(g);

    CHECK(format_element(ctx, word_product(ctx, g, {"a", "a"})) == "(-5/3) 1");
    CHECK(format_element(ctx, word_product(ctx, g, {"b", "b"})) == "(2) 1");

    // Adjacent generators anticommute, non-adjacent ones commute.
    const AlgebraElement ab = word_product(ctx, g, {"a", "b"});
    const AlgebraElement ba = word_product(ctx, g, {"b", "a"});
    CHECK(ab == scale(ba, -1));
    const AlgebraElement ac = word_product(ctx, g, {"a", "c"});
    const AlgebraElement ca = word_product(ctx, g, {"c", "a"});
    CHECK(ac == ca);
}

TEST_CASE("frozen product examples") {
    const ColoredGraph cl03 = family_graph("Cl:0,3");
    const AlgebraContext ctx = make_context(cl03);
    CHECK(format_element(ctx, word_product(ctx, cl03, {"v2", "v3"})) == "(-1) {v2,v3}");
    CHECK(format_element(ctx, word_product(ctx, cl03, {"v2", "v2"})) == "(-1) 1");
    CHECK(format_element(ctx, word_product(ctx, cl03, {})) == "1");

    // (uv)^2 = -1 for an adjacent black pair.
    const ColoredGraph a2 = family_graph("A:2");
    const AlgebraContext ctx2 = make_context(a2);
    CHECK(format_element(ctx2, word_product(ctx2, a2, {"v1", "v2", "v1", "v2"})) == "(-1) 1");
}

TEST_CASE("element formatting is canonical") {
    const ColoredGraph g = family_graph("A:3");
    const AlgebraContext ctx = make_context(g);

    CHECK(format_element(ctx, AlgebraElement{}) == "0");
    CHECK(format_element(ctx, unit_element(ctx)) == "1");

    AlgebraElement e;
    e.terms.emplace(BitVec::from_mask(3, 0b101), Rational(1));
    e.terms.emplace(BitVec::from_mask(3, 0b001), Rational(1, 2));
    e.terms.emplace(BitVec::from_mask(3, 0b000), Rational(-3));
    CHECK(format_element(ctx, e) == "(-3) 1 + (1/2) {v1} + {v1,v3}");
}

TEST_CASE("add, sub, scale") {
    const ColoredGraph g = family_graph("A:2");
    const AlgebraContext ctx = make_context(g);
    const AlgebraElement x = generator_element(ctx, 0);
    const AlgebraElement y = generator_element(ctx, 1);
    CHECK(add(x, y) == add(y, x));
    CHECK(sub(add(x, y), y) == x);
    CHECK(scale(x, 0).is_zero());
    CHECK(add(x, scale(x, -1)).is_zero());
}

TEST_CASE("bracket is the normalized commutator") {
    const ColoredGraph g = family_graph("A:2");
    const AlgebraContext ctx = make_context(g);
    const AlgebraElement x = generator_element(ctx, 0);
    const AlgebraElement y = generator_element(ctx, 1);
    // Adjacent pair: [x,y] = (1/2)(xy - yx) = xy.
    CHECK(bracket(ctx, x, y) == multiply(ctx, x, y));
    CHECK(bracket(ctx, x, x).is_zero());
    // Berman relation at the element level: [x,[x,y]] = -y.
    CHECK(bracket(ctx, x, bracket(ctx, x, y)) == scale(y, -1));
}

TEST_CASE("tau involutions on elements") {
    const ColoredGraph g = family_graph("Cl:1,2");
    const AlgebraContext ctx = make_context(g);
    CHECK_THROWS_AS(tau_h(ctx, BitVec(3), unit_element(ctx)), input_error);

    const BitVec phi = BitVec::unit(3, 1);
    CHECK(tau_h(ctx, phi, unit_element(ctx)) == unit_element(ctx));
    CHECK(tau_q(ctx, unit_element(ctx)) == unit_element(ctx));

    // tau_h negates exactly the monomials meeting the hyperplane oddly.
    const AlgebraElement e2 = generator_element(ctx, 1);
    CHECK(tau_h(ctx, phi, e2) == scale(e2, -1));
    const AlgebraElement e1 = generator_element(ctx, 0);
    CHECK(tau_h(ctx, phi, e1) == e1);

    // tau_q negates exactly the anisotropic monomials.
    for (std::uint32_t m = 0; m < 8; ++m) {
        const BitVec v = BitVec::from_mask(3, m);
        const AlgebraElement ev = monomial_element(ctx, v, 1);
        const AlgebraElement tv = tau_q(ctx, ev);
        CHECK(tv == (ctx.space.Q(v) ? scale(ev, -1) : ev));
    }
}

TEST_CASE("center of the three-generator Clifford algebra") {
    const AlgebraContext ctx = make_context(family_graph("Cl:0,3"));
    const std::vector<BitVec> z = center_basis(ctx);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == BitVec::from_mask(3, 0b000));
    CHECK(z[1] == BitVec::from_mask(3, 0b111));
}

TEST_CASE("ideal split of the three-generator Clifford algebra") {
    const AlgebraContext ctx = make_context(family_graph("Cl:0,3"));
    const BitVec r0 = BitVec::from_mask(3, 0b111);
    REQUIRE(ctx.space.Q(r0) == 0);
    const auto [plus, minus] = ideal_split(ctx, r0);
    REQUIRE(plus.size() == 4);
    REQUIRE(minus.size() == 4);

    // Cross products vanish; the split really is a direct sum of ideals.
    for (const AlgebraElement& x : plus)
        for (const AlgebraElement& y : minus) CHECK(multiply(ctx, x, y).is_zero());

    // Bad central vectors are rejected.
    CHECK_THROWS_AS(ideal_split(ctx, BitVec::from_mask(3, 0b001)), input_error);
    CHECK_THROWS_AS(ideal_split(ctx, BitVec(3)), input_error);
}

TEST_CASE("tau grading splits monomials by (Q, hyperplane) parity") {
    const ColoredGraph g = family_graph("A:4");
    const AlgebraContext ctx = make_context(g);
    const BitVec phi = BitVec::unit(4, 0);
    const TauGrading grading = tau_grading(ctx, phi);

    std::size_t total = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            total += grading.part[a][b].size();
            for (const BitVec& v : grading.part[a][b]) {
                CHECK(ctx.space.Q(v) == a);
                CHECK(phi.dot(v) == b);
            }
        }
    CHECK(total == 16);

    // Brackets respect the grading: a nonvanishing bracket of monomials from
    // parts (a,b) and (c,d) lands in part (a+c+1, b+d) — the f-pairing adds
    // one to the quadratic coordinate exactly when the bracket survives.
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    for (const BitVec& u : grading.part[a][b])
                        for (const BitVec& v : grading.part[c][d]) {
                            const AlgebraElement br =
                                bracket(ctx, monomial_element(ctx, u, 1), monomial_element(ctx, v, 1));
                            if (br.is_zero()) continue;
                            const BitVec w = br.terms.begin()->first;
                            CHECK(ctx.space.Q(w) == ((a + c + 1) & 1));
                            CHECK(phi.dot(w) == ((b + d) & 1));
                        }
}

TEST_CASE("product size cap") {
    const ColoredGraph g = props::random_graph(5, 10, false, true);
    const AlgebraContext ctx = make_context(g);
    AlgebraElement big;
    for (std::uint32_t m = 0; m < 300; ++m) big.terms.emplace(BitVec::from_mask(10, m), 1);
    CHECK_THROWS_AS(multiply(ctx, big, big), input_error);
}

TEST_CASE("associativity spot check") {
    // The full randomized sweep lives in the property suite; keep a compact
    // deterministic instance here for fast feedback.
    const ColoredGraph g = from_text("vertex a black 2\nvertex b white 1/3\nvertex c black -1\n"
                                     "edge a b\nedge a c\n");
    const AlgebraContext ctx = make_context(g);
    std::vector<AlgebraElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(generator_element(ctx, i));
    for (const auto& x : gens)
        for (const auto& y : gens)
            for (const auto& z : gens)
                CHECK(multiply(ctx, multiply(ctx, x, y), z) ==
                      multiply(ctx, x, multiply(ctx, y, z)));
}

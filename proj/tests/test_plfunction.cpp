#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mvss/plfunction.hpp"
#include "test_support.hpp"

#include <chrono>

using namespace mvss;
using mvss::testing::pt;

namespace {

PLFunction C(const char* text, std::size_t n) { return compile(parse_formula(text), n); }

// Structural check that the function is a valid McNaughton representation.
void check_valid(const PLFunction& f) {
    std::vector<Piece> copy = f.pieces();
    CHECK_NOTHROW(PLFunction::from_pieces(f.arity(), copy));
}

}  // namespace

TEST_CASE("compile examples") {
    PLFunction id = C("x1", 1);
    REQUIRE(id.pieces().size() == 1);
    CHECK(id.pieces()[0].map == AffineMap::coordinate(1, 0));

    PLFunction dbl = C("(x1 + x1)", 1);
    REQUIRE(dbl.pieces().size() == 2);
    CHECK(dbl.pieces()[0].cell == RPolytope::segment(pt({0}), pt({Rational(1, 2)})));
    CHECK(dbl.pieces()[0].map == AffineMap{{2}, 0});
    CHECK(dbl.pieces()[1].cell == RPolytope::segment(pt({Rational(1, 2)}), pt({1})));
    CHECK(dbl.pieces()[1].map == AffineMap::constant_map(1, 1));

    PLFunction s = C("(x1 + x2)", 2);
    CHECK(s(pt({Rational(1, 3), Rational(1, 3)})) == Rational(2, 3));
    CHECK(s(pt({Rational(2, 3), Rational(2, 3)})) == 1);
    CHECK_THROWS_AS(C("(x1 + x3)", 2), ArityError);
}

TEST_CASE("compile agrees with pointwise evaluation") {
    std::mt19937_64 rng(mvss::testing::test_seed());
    for (std::size_t n : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 4; ++trial) {
            Formula f = mvss::testing::random_formula(rng, n, n == 3 ? 3 : 4);
            PLFunction pf = compile(f, n);
            check_valid(pf);
            for (int i = 0; i < 10000; ++i) {
                RPoint v = mvss::testing::random_cube_point(rng, n);
                REQUIRE_MESSAGE(pf(v) == evaluate(f, v), serialize(f) << " at " << to_string(v));
            }
        }
    }
}

TEST_CASE("MV operation examples and axioms") {
    PLFunction f = C("((x1 * !x2) | (x2 -> x1))", 2);
    PLFunction g = C("(x1 & (x2 + x2))", 2);
    PLFunction h = C("!(x1 + x2)", 2);
    PLFunction zero = PLFunction::constant(2, 0);
    PLFunction one = PLFunction::constant(2, 1);

    CHECK(pl_equal(mv_oplus(f, zero), f));
    CHECK(pl_equal(mv_neg(mv_neg(f)), f));
    CHECK(pl_equal(mv_oplus(f, mv_neg(f)), one));
    CHECK(pl_equal(mv_oplus(f, g), mv_oplus(g, f)));
    CHECK(pl_equal(mv_oplus(mv_oplus(f, g), h), mv_oplus(f, mv_oplus(g, h))));
    CHECK(pl_equal(mv_oplus(mv_neg(mv_oplus(mv_neg(f), g)), g), mv_oplus(mv_neg(mv_oplus(mv_neg(g), f)), f)));
    // derived connectives against their MV definitions
    CHECK(pl_equal(mv_otimes(f, g), mv_neg(mv_oplus(mv_neg(f), mv_neg(g)))));
    CHECK(pl_equal(mv_implies(f, g), mv_oplus(mv_neg(f), g)));
    CHECK(pl_equal(mv_min(f, g), mv_otimes(f, mv_implies(f, g))));
    CHECK(!pl_equal(f, g));
    check_valid(mv_oplus(mv_oplus(f, g), h));
}

TEST_CASE("truncated multiples") {
    PLFunction x = C("x1", 1);
    CHECK(pl_equal(truncated_multiple(x, 0), PLFunction::constant(1, 0)));
    CHECK(pl_equal(truncated_multiple(x, 1), x));
    PLFunction t = truncated_multiple(x, 3);
    REQUIRE(t.pieces().size() == 2);
    CHECK(t.pieces()[0].cell.vertices().back() == pt({Rational(1, 3)}));
    CHECK(t.pieces()[0].map == AffineMap{{3}, 0});
    CHECK(t.pieces()[1].map == AffineMap::constant_map(1, 1));

    PLFunction g = C("(x1 & !x2)", 2);
    PLFunction five = truncated_multiple(g, 5);
    PLFunction sum = g;
    for (int k = 1; k < 5; ++k) sum = mv_oplus(sum, g);
    CHECK(pl_equal(five, sum));
    check_valid(five);
}

TEST_CASE("zero sets") {
    auto z = zeroset(C("(x1 + x2)", 2));
    REQUIRE(z.cells.size() == 1);
    CHECK(z.cells[0] == RPolytope::point(pt({0, 0})));

    auto facet = zeroset(C("x1", 2));
    REQUIRE(facet.cells.size() == 1);
    CHECK(facet.cells[0] == RPolytope::segment(pt({0, 0}), pt({0, 1})));

    CHECK(zeroset(PLFunction::constant(2, 1)).empty());
    auto all = zeroset(PLFunction::constant(2, 0));
    REQUIRE(all.cells.size() == 1);
    CHECK(all.cells[0] == RPolytope::cube(2));
}

TEST_CASE("zero set of a combination is the intersection") {
    std::mt19937_64 rng(mvss::testing::test_seed() + 7);
    const std::pair<const char*, const char*> pairs[] = {
        {"(x1 * x2)", "(!x1 & x2)"},
        {"((x1 + x1) * !x2)", "(x1 -> x2)"},
        {"(x1 & !(x2 + x2))", "((x1 * x1) | (x2 * !x2))"},
    };
    for (auto [a, b] : pairs) {
        PLFunction f = C(a, 2), g = C(b, 2);
        ZeroLocus zf = zeroset(f), zg = zeroset(g);
        ZeroLocus zo = zeroset(mv_oplus(f, g)), zm = zeroset(mv_max(f, g));
        CHECK(same_point_set(zo.cells, zm.cells));
        std::vector<RPoint> probes;
        for (int i = 0; i < 1000; ++i) probes.push_back(mvss::testing::random_cube_point(rng, 2, 8));
        for (const auto& c : zo.cells) probes.push_back(c.barycenter());
        for (const auto& c : zf.cells)
            for (const auto& v : c.vertices()) probes.push_back(v);
        for (const auto& p : probes) {
            bool both = zf.contains(p) && zg.contains(p);
            REQUIRE(zo.contains(p) == both);
            REQUIRE(zm.contains(p) == both);
            // independent oracle: the values themselves
            REQUIRE(zo.contains(p) == (f(p) == 0 && g(p) == 0));
        }
    }
}

TEST_CASE("directional derivatives") {
    PLFunction s = C("(x1 + x2)", 2);
    CHECK(directional_derivative(s, pt({0, 0}), pt({1, 0})) == 1);
    PLFunction m = C("(x1 + x1)", 1);
    CHECK(directional_derivative(m, pt({0}), pt({1})) == 2);
    CHECK(directional_derivative(m, pt({Rational(1, 2)}), pt({1})) == 0);
    CHECK(directional_derivative(m, pt({Rational(1, 2)}), pt({-1})) == -2);
    // incremental-ratio oracle at t = 1/8
    const Rational t(1, 8);
    CHECK((m(pt({Rational(1, 2) - t})) - m(pt({Rational(1, 2)}))) / t == -2);
    CHECK_THROWS_AS(directional_derivative(m, pt({1}), pt({1})), DirectionError);
    CHECK_THROWS_AS(directional_derivative(s, pt({0, Rational(1, 2)}), pt({-1, 1})), DirectionError);
}

TEST_CASE("derivative matches incremental ratios below the exit parameter") {
    std::mt19937_64 rng(mvss::testing::test_seed() + 3);
    PLFunction f = C("((x1 + (x2 + x2)) & !(x1 * x2))", 2);
    std::uniform_int_distribution<int> comp(-3, 3);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        RPoint x = mvss::testing::random_cube_point(rng, 2, 6);
        RVector u{Rational(comp(rng)), Rational(comp(rng))};
        if (is_zero(u)) continue;
        DirectionalDerivative d;
        try {
            d = derivative_along(f, x, u);
        } catch (const DirectionError&) {
            continue;
        }
        REQUIRE(d.exit > 0);
        for (int k = 1; k <= 4; ++k) {
            Rational tk = d.exit / k;
            REQUIRE((f(axpy(x, tk, u)) - f(x)) / tk == d.value);
        }
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("segment zero functions") {
    const std::pair<RPoint, RPoint> segs[] = {
        {pt({0, 0}), pt({Rational(1, 2), 0})},
        {pt({0, 0}), pt({1, 1})},
        {pt({Rational(1, 3), Rational(1, 5)}), pt({Rational(3, 4), Rational(2, 3)})},
        {pt({0, Rational(1, 2), 1}), pt({Rational(1, 2), Rational(1, 3), Rational(1, 4)})},
    };
    std::mt19937_64 rng(mvss::testing::test_seed() + 11);
    for (const auto& [x, y] : segs) {
        PLFunction g = segment_zero_function(x, y);
        check_valid(g);
        RPolytope seg = RPolytope::segment(x, y);
        // oracle: explicit points on and off the segment
        for (int k = 0; k <= 8; ++k) {
            RPoint p = axpy(x, Rational(k, 8), sub(y, x));
            REQUIRE(g(p) == 0);
        }
        for (int i = 0; i < 500; ++i) {
            RPoint p = mvss::testing::random_cube_point(rng, x.size(), 12);
            REQUIRE((g(p) == 0) == seg.contains(p));
        }
        RPoint beyond = axpy(y, Rational(1, 100), sub(y, x));
        bool in_cube = std::all_of(beyond.begin(), beyond.end(), [](const Rational& c) { return c >= 0 && c <= 1; });
        if (in_cube) CHECK(g(beyond) > 0);
    }
    PLFunction degenerate = segment_zero_function(pt({0, 0}), pt({0, 0}));
    CHECK(same_point_set(zeroset(degenerate).cells, zeroset(C("(x1 + x2)", 2)).cells));
}

TEST_CASE("point zero functions") {
    CHECK(same_point_set(zeroset(point_zero_function(pt({0, 0}))).cells, zeroset(C("(x1 + x2)", 2)).cells));
    CHECK(same_point_set(zeroset(point_zero_function(pt({1, 1}))).cells, zeroset(C("(!x1 + !x2)", 2)).cells));
    RPoint x = pt({Rational(1, 3), Rational(1, 2)});
    PLFunction j = point_zero_function(x);
    CHECK(j(x) == 0);
    std::mt19937_64 rng(mvss::testing::test_seed() + 5);
    for (int i = 0; i < 1000; ++i) {
        RPoint p = mvss::testing::random_cube_point(rng, 2, 12);
        REQUIRE((j(p) == 0) == (p == x));
    }
}

TEST_CASE("pl_leq") {
    PLFunction x = C("x1", 1);
    CHECK(pl_leq(x, x));
    CHECK(!pl_leq(PLFunction::constant(1, 1), x));
    auto v = pl_leq_violation(PLFunction::constant(1, 1), x, {RPolytope::cube(1)});
    REQUIRE(v.has_value());
    CHECK(*v == pt({0}));
    PLFunction two = truncated_multiple(x, 2);
    CHECK(pl_leq(x, two));
    // vertex oracle at the breakpoints
    for (Rational b : {Rational(0), Rational(1, 2), Rational(1)}) CHECK(x(pt({b})) <= two(pt({b})));
    CHECK(!pl_leq(two, x));
    // restricted to a region where the order flips
    CHECK(pl_leq(two, x, {RPolytope::point(pt({0})), RPolytope::point(pt({1}))}));
}

TEST_CASE("from_pieces validation") {
    PLFunction x = C("x1", 1);
    std::vector<Piece> bad{Piece(RPolytope::segment(pt({0}), pt({Rational(1, 2)})), AffineMap{{1}, 0}),
                           Piece(RPolytope::segment(pt({Rational(1, 2)}), pt({1})), AffineMap::constant_map(1, 1))};
    CHECK_THROWS_AS(PLFunction::from_pieces(1, bad), PLError);
    std::vector<Piece> gap{Piece(RPolytope::segment(pt({0}), pt({Rational(1, 2)})), AffineMap{{1}, 0})};
    CHECK_THROWS_AS(PLFunction::from_pieces(1, gap), PLError);
    std::vector<Piece> range{Piece(RPolytope::cube(1), AffineMap{{2}, 0})};
    CHECK_THROWS_AS(PLFunction::from_pieces(1, range), PLError);
}

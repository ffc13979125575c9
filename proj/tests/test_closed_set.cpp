#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace mvss;
using namespace mvss::fixtures;
using mvss::testing::pt;

TEST_CASE("polynomial helpers") {
    Poly p = P({-6, 1, 1});  // (i+3)(i-2)
    CHECK(integer_roots(p) == std::vector<Integer>{-3, 2});
    CHECK(integer_roots(P({0, 0, 1, -1})) == std::vector<Integer>{0, 1});
    CHECK(integer_roots(P({1, 0, 1})).empty());
    CHECK(p.shifted(1) == P({-4, 3, 1}));
    CHECK(to_string(P({1, -3, 2})) == "2i^2 - 3i + 1");
    CHECK(cauchy_bound(p) == 7);
    CHECK(last_nonpositive(p, 0) == Integer(2));
    CHECK(!last_nonpositive(p, 3).has_value());
    // brute-force oracle for the Cauchy bound
    for (long i = -50; i <= 50; ++i)
        if (p(Integer(i)) == 0) CHECK(abs(Integer(i)) < cauchy_bound(p));
}

TEST_CASE("quadratic field arithmetic") {
    QuadNum s{0, 1, 2};  // sqrt 2
    CHECK((s * s).is_rational());
    CHECK((s * s).u == 2);
    QuadNum x{1, 1, 2};
    CHECK((x * x.inverse()) == QuadNum{1, 0, 2});
    CHECK(QuadNum{Rational(3, 2), -1, 2}.sign() == 1);
    CHECK(QuadNum{Rational(7, 5), -1, 2}.sign() == -1);
    CHECK(x.pow(-2) == (x * x).inverse());
}

TEST_CASE("cusp membership") {
    ClosedSetDesc x = cusp();
    CHECK(membership(x, pt({0, 0})) == Tri::Yes);
    CHECK(membership(x, pt({Rational(1, 5), Rational(1, 25)})) == Tri::Yes);
    CHECK(membership(x, pt({Rational(1, 2), Rational(1, 3)})) == Tri::No);
    CHECK(membership(x, pt({1, 1})) == Tri::No);
    // exact oracle: the only candidate index is 1/p1
    for (long i = 2; i < 60; ++i) CHECK(membership(x, pt({Rational(1, i), Rational(1, i * i)})) == Tri::Yes);
    CHECK(membership(x, pt({Rational(1, 7), Rational(1, 48)})) == Tri::No);
    CHECK(x.sequences()[0].tail_index().value() >= 2);
}

TEST_CASE("enumeration") {
    auto pts = enumerate_points(cusp(), 3);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].point == pt({0, 0}));
    CHECK(pts[1].point == pt({Rational(1, 2), Rational(1, 4)}));
    CHECK(pts[2].point == pt({Rational(1, 3), Rational(1, 9)}));
    CHECK(pts[3].point == pt({Rational(1, 4), Rational(1, 16)}));
    ClosedSetDesc sq(2, {square(0, 1)}, {});
    CHECK(enumerate_points(sq, 7).size() == 4);

    auto pell_pts = enumerate_points(pell(), 2);
    REQUIRE(pell_pts.size() == 3);
    CHECK(pell_pts[1].point == pt({1, 1}));
    CHECK(pell_pts[2].point == pt({Rational(1, 2), Rational(3, 4)}));
    // direct unrolling oracle for later terms
    Integer q0 = 1, q1 = 2, p0 = 1, p1 = 3;
    auto ds = pell_sequence().differences(1, 30);
    for (std::size_t t = 0; t < ds.size(); ++t) {
        CHECK(ds[t] == pt({Rational(1, q0), Rational(p0, q0 * q0)}));
        Integer qn = 2 * q1 + q0, pn = 2 * p1 + p0;
        q0 = q1, q1 = qn, p0 = p1, p1 = pn;
    }
}

TEST_CASE("enumerated points are members and norms decrease past the tail index") {
    for (const ClosedSetDesc& x : {cusp(), cusp(3), aligned(), pell(), harmonic_1d(), cusp_3d(), pell_3d()}) {
        for (const auto& p : enumerate_points(x, 40)) REQUIRE(membership(x, p.point) == Tri::Yes);
        for (const auto& s : x.sequences()) {
            REQUIRE(s.tail_index().has_value());
            auto ds = s.differences(*s.tail_index(), 60);
            for (std::size_t t = 1; t < ds.size(); ++t) REQUIRE(norm2(ds[t]) < norm2(ds[t - 1]));
        }
    }
    CHECK(membership(pell(), pt({Rational(1, 5), Rational(7, 25)})) == Tri::Yes);
    CHECK(membership(pell(), pt({Rational(1, 5), Rational(8, 25)})) == Tri::No);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(ClosedSetDesc(2, {}, {}), EmptySetError);
    // denominator root at i = 3
    CHECK_THROWS_AS(ProbeSequence(origin(1), 2, RationalSchema{{P({1})}, {P({-3, 1})}}), ClosedSetError);
    // does not converge
    CHECK_THROWS_AS(ProbeSequence(origin(1), 2, RationalSchema{{P({0, 1})}, {P({1, 1})}}), ClosedSetError);
    // leaves the cube: -1/i
    CHECK_THROWS_AS(ProbeSequence(origin(1), 2, RationalSchema{{P({-1})}, {P({0, 1})}}), ClosedSetError);
    // 1 + 1/i leaves the cube from the top
    CHECK_THROWS_AS(ProbeSequence(pt({1}), 2, RationalSchema{{P({1})}, {P({0, 1})}}), ClosedSetError);
    // 1 - 1/i is fine
    CHECK_NOTHROW(ProbeSequence(pt({1}), 2, RationalSchema{{P({-1})}, {P({0, 1})}}));
    // (i-3)/i^2 hits the limit at i = 3
    CHECK_THROWS_AS(ProbeSequence(pt({Rational(1, 2)}), 2, RationalSchema{{P({-3, 1})}, {P({0, 0, 1})}}),
                    ClosedSetError);
    CHECK_THROWS_AS(ClosedSetDesc(2, {RPolytope::from_vertices({{0, 0}, {2, 0}, {0, 1}}, 2)}, {}), std::exception);
}

TEST_CASE("recurrence without a real dominant root has no tail certificate") {
    // s(i+1) = -s(i-1): 1, 1, -1, -1, ... ; d = 1/(4 s) stays in the cube but never converges
    RecurrenceSchema r{0, -1, {{1, 1}}, {Rational(1, 4)}, {{-1}}};
    ProbeSequence s(pt({Rational(1, 2)}), 1, r);
    CHECK(!s.tail_index().has_value());
    CHECK(sequence_contains(s, pt({Rational(1, 3)}), 500) == Tri::Unknown);
    CHECK(sequence_contains(s, pt({Rational(3, 4)}), 500) == Tri::Yes);
}

TEST_CASE("zero locus of a basis") {
    auto all = zero_locus_of_basis({PLFunction::constant(2, 0)});
    REQUIRE(all.cells.size() == 1);
    CHECK(all.cells[0] == RPolytope::cube(2));
    auto o = zero_locus_of_basis({PLFunction::projection(2, 1), PLFunction::projection(2, 2)});
    REQUIRE(o.cells.size() == 1);
    CHECK(o.cells[0] == RPolytope::point(pt({0, 0})));
    PLFunction j = compile(parse_formula("(x1 + x2)"), 2);
    PLFunction g = segment_zero_function(pt({0, 0}), pt({Rational(1, 2), 0}));
    auto z = zero_locus_of_basis({j, g});
    // oracle: the origin is the only point of the segment on which x1 + x2 vanishes
    RPolytope seg = RPolytope::segment(pt({0, 0}), pt({Rational(1, 2), 0}));
    CHECK(same_point_set(z.cells, {seg.intersect(RPolytope::point(pt({0, 0})))}));
    PLFunction f = compile(parse_formula("((x1 * x2) | !x1)"), 2);
    CHECK(same_point_set(zero_locus_of_basis({f}).cells, zeroset(f).cells));
    CHECK(zero_locus_of_basis({PLFunction::constant(2, 1)}).empty());
    CHECK_THROWS_AS(closed_set_from_locus(zero_locus_of_basis({PLFunction::constant(2, 1)})), EmptySetError);
}

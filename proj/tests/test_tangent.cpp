#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "mvss/tangent.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace mvss;
using namespace mvss::fixtures;
using mvss::testing::pt;

namespace {

Cone cone(RPoint apex, RVector axis, Rational h, Rational c) { return Cone{std::move(apex), std::move(axis), h, c}; }

// Floating-point oracle only: normalized difference at index i.
std::vector<double> normalized(const RVector& d) {
    // rescale by the largest coordinate before converting to avoid underflow
    Rational big = 0;
    for (const auto& x : d) big = std::max(big, abs_of(x));
    std::vector<double> v;
    double n = 0;
    for (const auto& x : d) {
        v.push_back(to_double(x / big));
        n += v.back() * v.back();
    }
    for (auto& x : v) x /= std::sqrt(n);
    return v;
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("cone membership examples") {
    Cone c = cone(pt({0, 0}), pt({1, 0}), Rational(1, 2), Rational(9, 10));
    CHECK(cone_contains(c, pt({0, 0})));
    CHECK(!cone_contains(c, pt({0, Rational(1, 4)})));
    CHECK(cone_contains(c, pt({Rational(1, 4), Rational(1, 100)})));
    // direct rational comparison oracle
    Rational lhs = Rational(1, 16), rhs = Rational(81, 100) * (Rational(1, 16) + Rational(1, 10000));
    CHECK(lhs >= rhs);
    CHECK(Rational(1, 16) + Rational(1, 10000) <= Rational(1, 4));
    CHECK(!cone_contains(c, pt({Rational(3, 4), 0})));
}

TEST_CASE("cone membership is invariant under positive axis scaling") {
    std::mt19937_64 rng(mvss::testing::test_seed());
    for (int t = 0; t < 2000; ++t) {
        RPoint apex = mvss::testing::random_cube_point(rng, 2, 10);
        RVector axis = sub(mvss::testing::random_cube_point(rng, 2, 10), pt({Rational(1, 2), Rational(1, 2)}));
        if (is_zero(axis)) continue;
        Rational k = mvss::testing::random_unit_rational(rng, 20) + Rational(1, 7);
        Cone a = cone(apex, axis, Rational(1, 2), Rational(3, 4));
        Cone b = cone(apex, scale(axis, k), Rational(1, 2), Rational(3, 4));
        RPoint p = mvss::testing::random_cube_point(rng, 2, 10);
        REQUIRE(cone_contains(a, p) == cone_contains(b, p));
    }
}

TEST_CASE("limit directions") {
    auto x_axis = ProbeSequence(origin(2), 2, RationalSchema{{P({1}), P({})}, {P({0, 1}), P({1})}});
    auto v = limit_direction(x_axis);
    CHECK(v.kind == DirectionVerdict::Kind::Rational);
    CHECK(v.u == pt({1, 0}));
    auto c = limit_direction(cusp_sequence());
    CHECK(c.kind == DirectionVerdict::Kind::Rational);
    CHECK(c.u == pt({1, 0}));
    // 1 - 1/i approaching (1, 1/2) from the left and above
    auto left = ProbeSequence(pt({1, Rational(1, 2)}), 3, RationalSchema{{P({-2}), P({1})}, {P({0, 1}), P({0, 1})}});
    CHECK(limit_direction(left).u == pt({-2, 1}));

    auto p = limit_direction(pell_sequence());
    REQUIRE(p.kind == DirectionVerdict::Kind::Irrational);
    CHECK(poly_text(p.characteristic, "λ") == "λ^2-2λ-1");
    CHECK(p.root_test.find("no rational root") != std::string::npos);
    CHECK(p.ratio_coordinate == 1);
    CHECK(rational_poly_text(p.ratio_min_poly, "X") == "X^2-2");
    INFO(to_string(p.symbolic[0]) << " " << to_string(p.symbolic[1]));
    CHECK(p.symbolic[1] == QuadNum{0, 1, 2});
    // numeric oracle: p_i / q_i -> 1.41421...
    Integer q0 = 1, q1 = 2, p0 = 1, p1 = 3;
    for (int i = 0; i < 50; ++i) {
        Integer qn = 2 * q1 + q0, pn = 2 * p1 + p0;
        q0 = q1, q1 = qn, p0 = p1, p1 = pn;
    }
    CHECK(std::abs(to_double(Rational(p1, q1)) - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("limit direction agrees with normalized differences") {
    auto check = [](const ProbeSequence& s, Index i, std::vector<double> expect) {
        double n = 0;
        for (double x : expect) n += x * x;
        for (auto& x : expect) x /= std::sqrt(n);
        CHECK(distance(normalized(s.difference(i)), expect) < 1e-2);
    };
    check(cusp_sequence(), 1000, {1, 0});
    check(cusp_sequence(3), 1000, {1, 0});
    check(pell_sequence(), 1000, {1, std::sqrt(2.0)});
    // cusp numeric limit at i = 10^6 agrees to 1e-6
    CHECK(distance(normalized(cusp_sequence().difference(1000000)), {1, 0}) < 1e-6);
}

TEST_CASE("recurrence with a rational direction") {
    // s(i+1) = 3 s(i) - 2 s(i-1): roots 2 and 1; d = (1/s, 3/s) with s = 2^i - 1 style growth
    RecurrenceSchema r{3, -2, {{1, 3}}, {Rational(1, 4), Rational(1, 2)}, {{-1}, {-1}}};
    ProbeSequence s(origin(2), 1, r);
    REQUIRE(s.tail_index().has_value());
    auto v = limit_direction(s);
    CHECK(v.kind == DirectionVerdict::Kind::Rational);
    CHECK(v.u == pt({1, 2}));
    ClosedSetDesc x(2, {}, {s});
    CHECK(is_outgoing(x, origin(2), pt({1, 2})).kind == Outgoing::Kind::AllAligned);
    CHECK(is_outgoing(x, origin(2), pt({1, 0})).kind == Outgoing::Kind::Yes);
}

TEST_CASE("recurrence without certificate is undetermined") {
    RecurrenceSchema r{0, -1, {{1, 1}}, {Rational(1, 4)}, {{-1}}};
    ProbeSequence s(pt({Rational(1, 2)}), 1, r);
    CHECK(limit_direction(s).kind == DirectionVerdict::Kind::Undetermined);
    ClosedSetDesc x(1, {}, {s});
    auto rep = tangent_report(x);
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].outgoing.kind == Outgoing::Kind::Undetermined);
}

TEST_CASE("outgoing verdicts") {
    auto cusp_out = is_outgoing(cusp(), origin(2), pt({1, 0}));
    CHECK(cusp_out.kind == Outgoing::Kind::Yes);
    CHECK(cusp_out.lambda == Rational(1, 2));
    // symbolic oracle: the second-coordinate difference 1/i^2 has no root
    CHECK(integer_roots(P({1})).empty());
    CHECK(is_outgoing(aligned(), origin(2), pt({1, 0})).kind == Outgoing::Kind::AllAligned);
    auto sq = ClosedSetDesc(2, {square(0, 1)}, {});
    std::mt19937_64 rng(mvss::testing::test_seed());
    for (int t = 0; t < 50; ++t) {
        RVector u = sub(mvss::testing::random_cube_point(rng, 2, 9), pt({Rational(1, 2), Rational(1, 2)}));
        if (is_zero(u)) continue;
        CHECK(is_outgoing(sq, pt({Rational(1, 2), Rational(1, 2)}), u).kind == Outgoing::Kind::No);
    }
    // opposite direction along the aligned set is fine
    ClosedSetDesc mid(2, {}, {ProbeSequence(pt({Rational(1, 2), 0}), 2, RationalSchema{{P({1}), P({})}, {P({0, 4}), P({1})}})});
    CHECK(is_outgoing(mid, pt({Rational(1, 2), 0}), pt({-1, 0})).kind == Outgoing::Kind::Yes);
    // a term sitting on the ray shrinks lambda: (1/i, 1/i) hits the diagonal
    ClosedSetDesc two(2, {}, {cusp_sequence(), ProbeSequence(pt({1, 1}), 2, RationalSchema{{P({-1}), P({-1})}, {P({0, 1}), P({0, 1})}})});
    auto o = is_outgoing(two, origin(2), pt({1, 1}));
    CHECK(o.kind == Outgoing::Kind::Yes);
    CHECK(o.lambda == Rational(1, 4));  // w_2 = (1/2,1/2) sits at t = 1/2
    // a polytope meeting the ray away from the apex
    ClosedSetDesc blocked(2, {RPolytope::segment(pt({Rational(1, 4), 0}), pt({Rational(1, 4), 1}))}, {cusp_sequence()});
    auto b = is_outgoing(blocked, origin(2), pt({1, 0}));
    CHECK(b.kind == Outgoing::Kind::Yes);
    CHECK(b.lambda == Rational(1, 8));
}

TEST_CASE("outgoing segments avoid enumerated points") {
    for (const ClosedSetDesc& x : {cusp(), cusp(3)}) {
        auto rep = tangent_report(x);
        REQUIRE(rep.size() == 1);
        REQUIRE(rep[0].outgoing.kind == Outgoing::Kind::Yes);
        const RPoint& a = rep[0].x;
        RPoint b = axpy(a, rep[0].outgoing.lambda, rep[0].direction.u);
        RPolytope seg = RPolytope::segment(a, b);
        for (const auto& p : enumerate_points(x, 1000))
            if (p.point != a) REQUIRE(!seg.contains(p.point));
    }
}

TEST_CASE("tangent reports") {
    CHECK(tangent_report(ClosedSetDesc(2, {triangle()}, {})).empty());
    auto p = tangent_report(pell());
    REQUIRE(p.size() == 1);
    CHECK(p[0].direction.kind == DirectionVerdict::Kind::Irrational);
    CHECK(p[0].outgoing.kind == Outgoing::Kind::NotApplicable);
}

TEST_CASE("cone counts") {
    CHECK(count_in_cone(ClosedSetDesc(2, {RPolytope::point(pt({0, 0}))}, {}), cone(pt({0, 0}), pt({1, 0}), 1, Rational(1, 2)), 5).kind ==
          ConeCount::Kind::Exactly);
    for (Rational eps : {Rational(1, 2), Rational(1, 4), Rational(1, 8)})
        for (Rational c : {Rational(1, 2), Rational(9, 10), Rational(99, 100)}) {
            auto k = count_in_cone(cusp(), cone(origin(2), pt({1, 0}), eps, c), 1000);
            CHECK(k.kind == ConeCount::Kind::AtLeast);
        }
    // enumeration oracle: the first 10^3 terms past a threshold enter the cone
    Cone c = cone(origin(2), pt({1, 0}), Rational(1, 8), Rational(99, 100));
    int inside = 0;
    for (const auto& p : enumerate_points(cusp(), 1000))
        if (p.point != origin(2) && cone_contains(c, p.point)) ++inside;
    CHECK(inside > 900);

    auto off = count_in_cone(cusp(), cone(origin(2), pt({0, 1}), Rational(1, 2), Rational(99, 100)), 100);
    CHECK(off.kind == ConeCount::Kind::Exactly);
    // brute-force oracle for the finite count
    std::size_t brute = 0;
    Cone up = cone(origin(2), pt({0, 1}), Rational(1, 2), Rational(99, 100));
    for (const auto& p : enumerate_points(cusp(), 5000))
        if (p.point != origin(2) && cone_contains(up, p.point)) ++brute;
    CHECK(off.count == brute);
}

TEST_CASE("polytope parts in cones") {
    ClosedSetDesc tri(2, {triangle()}, {});
    // apex at a vertex: the tangent cone is the positive quadrant
    CHECK(count_in_cone(tri, cone(pt({0, 0}), pt({1, 1}), Rational(1, 10), Rational(99, 100)), 10).kind == ConeCount::Kind::AtLeast);
    CHECK(count_in_cone(tri, cone(pt({0, 0}), pt({-1, -1}), Rational(1, 10), Rational(1, 2)), 10).kind == ConeCount::Kind::Exactly);
    // axis just outside the quadrant, wide enough to reach the boundary ray
    CHECK(count_in_cone(tri, cone(pt({0, 0}), pt({1, -1}), Rational(1, 10), Rational(7, 10)), 10).kind == ConeCount::Kind::AtLeast);
    CHECK(count_in_cone(tri, cone(pt({0, 0}), pt({1, -1}), Rational(1, 10), Rational(3, 4)), 10).kind == ConeCount::Kind::Exactly);
    // far polytope separated by distance
    ClosedSetDesc far(2, {square(Rational(3, 4), 1)}, {});
    CHECK(count_in_cone(far, cone(pt({0, 0}), pt({1, 1}), Rational(1, 2), Rational(1, 2)), 10).kind == ConeCount::Kind::Exactly);
    CHECK(count_in_cone(far, cone(pt({0, 0}), pt({1, 1}), Rational(3, 2), Rational(1, 2)), 10).kind == ConeCount::Kind::AtLeast);
}

TEST_CASE("polytope tangent directions are never outgoing") {
    // property: for x in P and u in the tangent cone, the segment stays in P near x
    std::mt19937_64 rng(mvss::testing::test_seed() + 9);
    RPolytope p = RPolytope::from_vertices({{0, 0}, {1, Rational(1, 3)}, {Rational(1, 2), 1}}, 2);
    ClosedSetDesc x(2, {p}, {});
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        RPoint a = p.vertices()[t % 3];
        RPoint b = mvss::testing::random_cube_point(rng, 2, 12);
        if (!p.contains(b) || b == a) continue;
        CHECK(is_outgoing(x, a, sub(b, a)).kind == Outgoing::Kind::No);
        ++checked;
    }
    CHECK(checked > 10);
}

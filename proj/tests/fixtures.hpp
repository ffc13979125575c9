#pragma once

#include "mvss/closed_set.hpp"

namespace mvss::fixtures {

inline Poly P(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.push_back(x);
    return Poly(std::move(v));
}

inline RPoint origin(std::size_t n) { return RPoint(n, Rational(0)); }

/// (1/i, 1/i^power) -> (0,0), i >= 2
inline ProbeSequence cusp_sequence(int power = 2) {
    std::vector<Integer> den(power + 1, Integer(0));
    den[power] = 1;
    return ProbeSequence(origin(2), 2, RationalSchema{{P({1}), P({1})}, {P({0, 1}), Poly(den)}});
}

inline ClosedSetDesc cusp(int power = 2) { return ClosedSetDesc(2, {}, {cusp_sequence(power)}); }

/// (1/i, 0) -> (0,0)
inline ClosedSetDesc aligned() {
    return ClosedSetDesc(2, {}, {ProbeSequence(origin(2), 2, RationalSchema{{P({1}), P({})}, {P({0, 1}), P({1})}})});
}

/// (1/q_i, p_i/q_i^2) with Pell numbers q = 1,2,5,12,... and p = 1,3,7,17,...
inline ProbeSequence pell_sequence() {
    RecurrenceSchema r{2, 1, {{1, 2}, {1, 3}}, {Rational(1), Rational(1)}, {{-1, 0}, {-2, 1}}};
    return ProbeSequence(origin(2), 1, r);
}

inline ClosedSetDesc pell() { return ClosedSetDesc(2, {}, {pell_sequence()}); }

inline RPolytope triangle() {
    return RPolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}}, 2);
}

inline RPolytope square(const Rational& lo, const Rational& hi) {
    return RPolytope::from_vertices({{lo, lo}, {hi, lo}, {lo, hi}, {hi, hi}}, 2);
}

/// (1/i, 1/i^2, 0) -> (0,0,0)
inline ClosedSetDesc cusp_3d() {
    return ClosedSetDesc(3, {}, {ProbeSequence(origin(3), 2, RationalSchema{{P({1}), P({1}), P({})}, {P({0, 1}), P({0, 0, 1}), P({1})}})});
}

/// (1/q_i, p_i/q_i^2, 0) -> (0,0,0)
inline ClosedSetDesc pell_3d() {
    RecurrenceSchema r{2, 1, {{1, 2}, {1, 3}}, {Rational(1), Rational(1), Rational(0)}, {{-1, 0}, {-2, 1}, {0, 0}}};
    return ClosedSetDesc(3, {}, {ProbeSequence(origin(3), 1, r)});
}

/// {0} u {1/i : i >= 1}
inline ClosedSetDesc harmonic_1d() {
    return ClosedSetDesc(1, {}, {ProbeSequence(origin(1), 1, RationalSchema{{P({1})}, {P({0, 1})}})});
}

}  // namespace mvss::fixtures

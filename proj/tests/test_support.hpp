#pragma once

#include "mvss/rational.hpp"

#include <cstdlib>
#include <random>

namespace mvss::testing {

inline std::uint64_t test_seed() {
    if (const char* s = std::getenv("MVSS_TEST_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240611;
}

/// Random rational in [0,1] with denominator up to max_den.
inline Rational random_unit_rational(std::mt19937_64& rng, long max_den = 97) {
    std::uniform_int_distribution<long> den(1, max_den);
    long q = den(rng);
    std::uniform_int_distribution<long> num(0, q);
    return Rational(num(rng), q);
}

inline RPoint random_cube_point(std::mt19937_64& rng, std::size_t n, long max_den = 97) {
    RPoint p(n);
    for (auto& c : p) c = random_unit_rational(rng, max_den);
    return p;
}

inline RPoint pt(std::initializer_list<Rational> c) { return RPoint(c); }

}  // namespace mvss::testing

#include "mvss/formula.hpp"

namespace mvss::testing {

inline Formula random_formula(std::mt19937_64& rng, std::size_t n, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    int r = pick(rng);
    if (depth <= 0 || r < 2) {
        if (r == 0 && depth > 0) return pick(rng) < 5 ? Formula::zero() : Formula::one();
        std::uniform_int_distribution<std::size_t> v(1, n);
        return Formula::var(v(rng));
    }
    if (r == 2) return Formula::neg(random_formula(rng, n, depth - 1));
    static constexpr Op ops[] = {Op::OPlus, Op::OTimes, Op::Min, Op::Max, Op::Implies};
    std::uniform_int_distribution<int> op(0, 4);
    Op o = ops[op(rng)];
    Formula l = random_formula(rng, n, depth - 1);
    return Formula::binary(o, l, random_formula(rng, n, depth - 1));
}

}  // namespace mvss::testing

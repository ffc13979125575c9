#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mvss {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
// gmp_rational keeps every value canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

using RVector = std::vector<Rational>;
using RPoint = RVector;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Integer& p, const Integer& q) { return Rational(p, q); }

/// Smallest integer >= q.
Integer ceil_of(const Rational& q);
/// Largest integer <= q.
Integer floor_of(const Rational& q);

Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);

int sign_of(const Rational& q);
int sign_of(const Integer& z);
Rational abs_of(const Rational& q);

/// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q", "+p/q". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// "(a,b,c)"
std::string to_string(const RVector& v);
/// Parses "(a,b,c)"; whitespace tolerant.
RVector parse_point(std::string_view text);

/// True when the stored value is reduced (always true for mpq_rational, kept
/// as an executable check for the lowest-terms invariant).
bool is_reduced(const Rational& q);

double to_double(const Rational& q);

}  // namespace mvss

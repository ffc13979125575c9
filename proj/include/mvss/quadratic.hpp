#pragma once

#include "mvss/rational.hpp"

#include <string>

namespace mvss {

/// Element u + v*sqrt(d) of Q(sqrt d), d a non-square positive integer
/// (or any d when v == 0). Arithmetic between elements requires equal d.
struct QuadNum {
    Rational u = 0, v = 0;
    Integer d = 0;

    static QuadNum rational(const Rational& r, const Integer& d) { return QuadNum{r, 0, d}; }

    bool is_rational() const { return v == 0; }
    int sign() const;
    QuadNum conjugate() const { return QuadNum{u, -v, d}; }
    Rational norm() const { return u * u - v * v * Rational(d); }
    QuadNum inverse() const;
    QuadNum pow(long e) const;
    double approx() const;

    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const { return *this * o.inverse(); }
    bool operator==(const QuadNum& o) const { return u == o.u && v == o.v; }
};

bool is_perfect_square(const Integer& z);
/// Largest integer <= sqrt(z), z >= 0.
Integer isqrt(const Integer& z);

std::string to_string(const QuadNum& q);

}  // namespace mvss

#include "mvss/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace mvss {

Integer isqrt(const Integer& z) {
    if (z < 0) throw std::domain_error("isqrt of a negative number");
    return boost::multiprecision::sqrt(z);
}

bool is_perfect_square(const Integer& z) {
    if (z < 0) return false;
    Integer r = isqrt(z);
    return r * r == z;
}

int QuadNum::sign() const {
    const int su = u.sign(), sv = v.sign();
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    // opposite signs: compare u^2 with v^2 d
    Rational lhs = u * u, rhs = v * v * Rational(d);
    if (lhs == rhs) return 0;
    return lhs > rhs ? su : sv;
}

QuadNum QuadNum::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("inverse of zero in a quadratic field");
    return QuadNum{u / n, -v / n, d};
}

QuadNum QuadNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadNum r{1, 0, d}, b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

double QuadNum::approx() const { return to_double(u) + to_double(v) * std::sqrt(d.convert_to<double>()); }

QuadNum QuadNum::operator+(const QuadNum& o) const { return QuadNum{u + o.u, v + o.v, d == 0 ? o.d : d}; }
QuadNum QuadNum::operator-(const QuadNum& o) const { return QuadNum{u - o.u, v - o.v, d == 0 ? o.d : d}; }
QuadNum QuadNum::operator*(const QuadNum& o) const {
    const Integer dd = d == 0 ? o.d : d;
    return QuadNum{u * o.u + v * o.v * Rational(dd), u * o.v + v * o.u, dd};
}

std::string to_string(const QuadNum& q) {
    if (q.v == 0) return to_string(q.u);
    std::string root = "sqrt(" + q.d.str() + ")";
    std::string vpart = (q.v == 1 || q.v == -1) ? root : to_string(abs_of(q.v)) + "*" + root;
    if (q.u == 0) return (q.v < 0 ? "-" : "") + vpart;
    return to_string(q.u) + (q.v < 0 ? " - " : " + ") + vpart;
}

}  // namespace mvss

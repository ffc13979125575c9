#pragma once

#include "mvss/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mvss {

/// Univariate integer polynomial, coefficients in ascending order, no
/// trailing zeros. Used for index polynomials of probe sequences.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> ascending);
    static Poly constant(const Integer& c);
    /// c * X^k
    static Poly monomial(const Integer& c, std::size_t k);
    /// Smallest positive integer multiple of a rational polynomial.
    static Poly cleared(const std::vector<Rational>& ascending);

    const std::vector<Integer>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Integer& leading() const { return c_.back(); }
    int eventual_sign() const;  // sign of the leading coefficient, 0 for zero

    Integer operator()(const Integer& x) const;
    Rational operator()(const Rational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Integer& k) const;
    /// p(X + h)
    Poly shifted(const Integer& h) const;

    bool operator==(const Poly& o) const = default;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Every real root r of a nonzero p satisfies |r| < cauchy_bound(p).
Integer cauchy_bound(const Poly& p);

/// All integer roots of a nonzero polynomial, ascending.
std::vector<Integer> integer_roots(const Poly& p);

/// Largest integer i >= from with p(i) <= 0, or nullopt when p > 0 on all
/// integers >= from. A zero polynomial or a negative leading coefficient
/// has no such largest value; both throw std::domain_error.
std::optional<Integer> last_nonpositive(const Poly& p, const Integer& from);

/// Smallest index >= from after which the sign of p is constant
/// (p(i) has the eventual sign for every i >= result).
Integer sign_stable_from(const Poly& p, const Integer& from);

/// Human form, e.g. "2i^2 - 3i + 1".
std::string to_string(const Poly& p, const std::string& var = "i");

}  // namespace mvss

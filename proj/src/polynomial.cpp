#include "mvss/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvss {

Poly::Poly(std::vector<Integer> ascending) : c_(std::move(ascending)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Integer& c) { return Poly({c}); }

Poly Poly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::cleared(const std::vector<Rational>& ascending) {
    Integer l = 1;
    for (const auto& q : ascending) l = lcm_of(l, denominator_of(q));
    std::vector<Integer> v;
    for (const auto& q : ascending) v.push_back(numerator_of(q) * (l / denominator_of(q)));
    return Poly(std::move(v));
}

int Poly::eventual_sign() const { return c_.empty() ? 0 : c_.back().sign(); }

Integer Poly::operator()(const Integer& x) const {
    Integer r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational Poly::operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Integer(-1); }

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Integer> v(c_.size() + o.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Integer& k) const {
    std::vector<Integer> v = c_;
    for (auto& x : v) x *= k;
    return Poly(std::move(v));
}

Poly Poly::shifted(const Integer& h) const {
    // Horner in the polynomial ring: ((c_d)(X+h) + c_{d-1})(X+h) + ...
    const Poly xh({h, Integer(1)});
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * xh + Poly::constant(*it);
    return r;
}

Integer cauchy_bound(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("cauchy bound of the zero polynomial");
    Integer lead = abs(p.leading());
    Integer best = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Integer c = abs(p.coeffs()[k]);
        Integer q = (c + lead - 1) / lead;
        if (q > best) best = q;
    }
    return best + 1;
}

std::vector<Integer> integer_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("integer roots of the zero polynomial");
    std::vector<Integer> roots;
    std::size_t low = 0;
    while (p.coeffs()[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    Poly q(std::vector<Integer>(p.coeffs().begin() + low, p.coeffs().end()));
    if (q.degree() > 0) {
        Integer c0 = abs(q.coeffs()[0]);
        Integer limit = std::min(c0, cauchy_bound(q));
        for (Integer d = 1; d <= limit; ++d) {
            if (c0 % d != 0) continue;
            if (q(d) == 0) roots.push_back(d);
            if (q(Integer(-d)) == 0) roots.push_back(-d);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<Integer> last_nonpositive(const Poly& p, const Integer& from) {
    if (p.eventual_sign() <= 0) throw std::domain_error("polynomial is not eventually positive");
    Integer b = cauchy_bound(p);
    for (Integer i = std::max(from, Integer(b)); i >= from; --i)
        if (p(i) <= 0) return i;
    return std::nullopt;
}

Integer sign_stable_from(const Poly& p, const Integer& from) {
    if (p.degree() <= 0) return from;
    Integer b = cauchy_bound(p);
    const int s = p.eventual_sign();
    for (Integer i = std::max(from, b); i >= from; --i)
        if (p(i).sign() != s) return i + 1;
    return from;
}

std::string to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Integer& c = p.coeffs()[k];
        if (c == 0) continue;
        Integer a = abs(c);
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (a != 1 || k == 0) out += a.str();
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace mvss

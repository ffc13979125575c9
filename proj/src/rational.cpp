#include "mvss/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mvss {

Integer floor_of(const Rational& q) {
    Integer n = numerator_of(q);
    Integer d = denominator_of(q);
    Integer r;
    mpz_fdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer n = numerator_of(q);
    Integer d = denominator_of(q);
    Integer r;
    mpz_cdiv_q(r.backend().data(), n.backend().data(), d.backend().data());
    return r;
}

Integer gcd_of(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm_of(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

int sign_of(const Rational& q) { return q.sign(); }
int sign_of(const Integer& z) { return z.sign(); }
Rational abs_of(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

std::string to_string(const Rational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!is_integer_literal(num, true)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    if (slash == std::string_view::npos) return Rational(Integer(n));
    std::string_view den = s.substr(slash + 1);
    if (!is_integer_literal(den, false)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(Integer(n), d);
}

std::string to_string(const RVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

RVector parse_point(std::string_view text) {
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("bad point: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    RVector out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parse_rational(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

bool is_reduced(const Rational& q) {
    return denominator_of(q) > 0 && gcd_of(numerator_of(q), denominator_of(q)) == 1;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace mvss

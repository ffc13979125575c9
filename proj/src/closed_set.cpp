#include "mvss/closed_set.hpp"

#include <algorithm>

namespace mvss {

namespace {

bool in_cube(const RPoint& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c >= 0 && c <= 1; });
}

// p(i) >= 0 for every integer i >= from.
bool nonnegative_from(const Poly& p, Index from) {
    if (p.is_zero()) return true;
    if (p.eventual_sign() < 0) return false;
    Integer b = cauchy_bound(p);
    for (Integer i = from; i < b; ++i)
        if (p(i) < 0) return false;
    return true;
}

Poly product(const std::vector<Poly>& ps, std::size_t skip) {
    Poly r = Poly::constant(1);
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (k != skip) r = r * ps[k];
    return r;
}

// Unrolls the shared recurrence for all bases.
class BaseCursor {
public:
    BaseCursor(const RecurrenceSchema& r, Index start) : r_(r), i_(start) {
        for (const auto& b : r.bases) {
            cur_.push_back(b.first);
            next_.push_back(b.second);
        }
    }
    Index index() const { return i_; }
    const std::vector<Integer>& values() const { return cur_; }
    const std::vector<Integer>& next_values() const { return next_; }
    void advance() {
        for (std::size_t k = 0; k < cur_.size(); ++k) {
            Integer n = r_.a * next_[k] + r_.b * cur_[k];
            cur_[k] = std::move(next_[k]);
            next_[k] = std::move(n);
        }
        ++i_;
    }
    void advance_to(Index i) {
        while (i_ < i) advance();
    }

private:
    const RecurrenceSchema& r_;
    Index i_;
    std::vector<Integer> cur_, next_;
};

// d(i) from base values; nullopt when a negative power of a zero value occurs.
std::optional<RVector> recurrence_difference(const RecurrenceSchema& r, const std::vector<Integer>& s) {
    RVector d;
    for (std::size_t j = 0; j < r.coeff.size(); ++j) {
        Rational v = r.coeff[j];
        if (v != 0) {
            for (std::size_t k = 0; k < s.size(); ++k) {
                int e = r.exponents[j][k];
                if (e == 0) continue;
                if (s[k] == 0) {
                    if (e < 0) return std::nullopt;
                    v = 0;
                    break;
                }
                Rational base(s[k]);
                for (int t = 0; t < std::abs(e); ++t) v = e > 0 ? v * base : v / base;
            }
        }
        d.push_back(v);
    }
    return d;
}

Rational pow_rational(const Rational& x, int e) {
    Rational r = 1;
    for (int t = 0; t < std::abs(e); ++t) r *= x;
    return e >= 0 ? r : 1 / r;
}

}  // namespace

ProbeSequence::ProbeSequence(RPoint limit, Index start, Schema schema)
    : limit_(std::move(limit)), start_(start), schema_(std::move(schema)) {
    if (limit_.empty()) throw ClosedSetError("sequence limit has arity 0");
    if (!in_cube(limit_)) throw ClosedSetError("sequence limit outside the unit cube: " + to_string(limit_));
    if (is_rational_schema()) validate_rational();
    else validate_recurrence();
}

void ProbeSequence::validate_rational() {
    const auto& s = std::get<RationalSchema>(schema_);
    const std::size_t n = limit_.size();
    if (s.num.size() != n || s.den.size() != n) throw ClosedSetError("schema arity differs from the limit arity");
    for (std::size_t j = 0; j < n; ++j) {
        if (s.den[j].is_zero()) throw ClosedSetError("zero denominator polynomial");
        for (const auto& r : integer_roots(s.den[j]))
            if (r >= start_) throw ClosedSetError("denominator vanishes at index " + r.str());
        if (!s.num[j].is_zero() && s.num[j].degree() >= s.den[j].degree())
            throw ClosedSetError("coordinate difference does not tend to 0 (deg num >= deg den)");
    }
    auto first = std::find_if(s.num.begin(), s.num.end(), [](const Poly& p) { return !p.is_zero(); });
    if (first == s.num.end()) throw ClosedSetError("sequence is constant at its limit");
    for (const auto& r : integer_roots(*first)) {
        if (r < start_) continue;
        if (std::all_of(s.num.begin(), s.num.end(), [&](const Poly& p) { return p(r) == 0; }))
            throw ClosedSetError("term " + r.str() + " equals the limit");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Integer nx = numerator_of(limit_[j]), dx = denominator_of(limit_[j]);
        Poly lower = (s.num[j] * dx + s.den[j] * nx) * s.den[j];
        Poly upper = (s.den[j] * Integer(dx - nx) - s.num[j] * dx) * s.den[j];
        if (!nonnegative_from(lower, start_) || !nonnegative_from(upper, start_))
            throw ClosedSetError("sequence leaves the unit cube in coordinate " + std::to_string(j + 1));
    }
    // ||d||^2 = N / Q^2; strictly decreasing iff N(i)Q(i+1)^2 - N(i+1)Q(i)^2 > 0.
    Poly q = product(s.den, n);
    Poly norm;
    Integer tail = start_;
    for (std::size_t j = 0; j < n; ++j) {
        Poly pj = s.num[j] * product(s.den, j);
        norm = norm + pj * pj;
        tail = std::max(tail, sign_stable_from(pj, start_));
    }
    tail = std::max(tail, sign_stable_from(q, start_));
    Poly qs = q.shifted(1);
    Poly drop = norm * qs * qs - norm.shifted(1) * q * q;
    auto last = last_nonpositive(drop, start_);
    if (last) tail = std::max(tail, Integer(*last + 1));
    tail_ = tail.convert_to<Index>();
}

void ProbeSequence::validate_recurrence() {
    const auto& r = std::get<RecurrenceSchema>(schema_);
    const std::size_t n = limit_.size();
    if (r.coeff.size() != n || r.exponents.size() != n) throw ClosedSetError("schema arity differs from the limit arity");
    if (r.bases.empty()) throw ClosedSetError("recurrence schema without base sequences");
    for (const auto& row : r.exponents)
        if (row.size() != r.bases.size()) throw ClosedSetError("exponent row length differs from the base count");
    if (std::all_of(r.coeff.begin(), r.coeff.end(), [](const Rational& c) { return c == 0; }))
        throw ClosedSetError("sequence is constant at its limit");
    for (const auto& b : r.bases)
        if (b.first == 0 && b.second == 0) throw ClosedSetError("zero base sequence");

    auto check_term = [&](const std::vector<Integer>& s, Index i) {
        auto d = recurrence_difference(r, s);
        if (!d) throw ClosedSetError("term " + std::to_string(i) + " divides by zero");
        if (is_zero(*d)) throw ClosedSetError("term " + std::to_string(i) + " equals the limit");
        if (!in_cube(add(limit_, *d))) throw ClosedSetError("term " + std::to_string(i) + " leaves the unit cube");
    };

    const Integer disc = r.a * r.a + 4 * r.b;
    bool certifiable = r.a > 0 && disc > 0;
    if (certifiable && is_perfect_square(disc)) {
        // sigma = (a - sqrt D)/2 rational; a base with s1 = sigma s0 has no dominant part
        Rational sigma = Rational(r.a - isqrt(disc), 2);
        for (const auto& b : r.bases)
            if (Rational(b.second) == sigma * Rational(b.first)) certifiable = false;
    }
    if (certifiable) {
        // rho > 1 and every nonzero coordinate has negative total exponent
        bool rho_gt_one = r.a >= 2 || r.b > 0;
        if (!rho_gt_one) throw ClosedSetError("recurrence does not grow; differences do not tend to 0");
        for (std::size_t j = 0; j < n; ++j) {
            if (r.coeff[j] == 0) continue;
            int e = 0;
            for (int x : r.exponents[j]) e += x;
            if (e >= 0) throw ClosedSetError("coordinate " + std::to_string(j + 1) + " does not tend to the limit");
        }
    }

    std::optional<std::pair<Rational, Rational>> interval;
    if (certifiable) {
        for (int m = 8; m <= 128 && !interval; m += 8) {
            const Integer scale = Integer(1) << m;
            const Integer root = isqrt(disc * scale * scale);
            const Rational lo = (Rational(r.a) + Rational(root, scale)) / 2;
            const Rational hi = (Rational(r.a) + Rational(root + 1, scale)) / 2;
            const Rational eta(1, Integer(1) << (m / 2));
            const Rational L = lo - eta, U = hi + eta;
            if (L <= 0) continue;
            auto f = [&](const Rational& t) { return Rational(r.a) + Rational(r.b) / t; };
            auto inside = [&](const Rational& t) { return t >= L && t <= U; };
            if (!inside(f(L)) || !inside(f(U))) continue;
            bool contracting = true;
            for (std::size_t j = 0; j < n && contracting; ++j) {
                if (r.coeff[j] == 0) continue;
                Rational bound = 1;
                for (int e : r.exponents[j]) bound *= pow_rational(e > 0 ? U : L, e);
                contracting = bound < 1;
            }
            if (contracting) interval = std::make_pair(L, U);
        }
    }

    constexpr Index scan_limit = 10000;
    BaseCursor cur(r, start_);
    if (interval) {
        const auto [L, U] = *interval;
        std::vector<bool> entered(r.bases.size(), false);
        std::size_t remaining = r.bases.size();
        while (remaining > 0 && cur.index() < start_ + scan_limit) {
            check_term(cur.values(), cur.index());
            for (std::size_t k = 0; k < entered.size(); ++k) {
                if (entered[k] || cur.values()[k] == 0) continue;
                Rational t(cur.next_values()[k], cur.values()[k]);
                if (t >= L && t <= U) {
                    entered[k] = true;
                    --remaining;
                }
            }
            if (remaining == 0) break;
            cur.advance();
        }
        if (remaining == 0) {
            check_term(cur.values(), cur.index());
            tail_ = cur.index();
            interval_ = interval;
            return;
        }
    }
    // No certificate: only a finite prefix is checked.
    BaseCursor prefix(r, start_);
    for (int t = 0; t < 1000; ++t, prefix.advance()) check_term(prefix.values(), prefix.index());
}

std::vector<Integer> ProbeSequence::base_values(Index i) const {
    const auto& r = std::get<RecurrenceSchema>(schema_);
    BaseCursor c(r, start_);
    c.advance_to(i);
    return c.values();
}

RVector ProbeSequence::difference(Index i) const {
    if (i < start_) throw std::out_of_range("sequence index below the start index");
    if (const auto* s = std::get_if<RationalSchema>(&schema_)) {
        RVector d;
        const Integer ii(i);
        for (std::size_t j = 0; j < s->num.size(); ++j) d.push_back(Rational(s->num[j](ii), s->den[j](ii)));
        return d;
    }
    const auto& r = std::get<RecurrenceSchema>(schema_);
    auto d = recurrence_difference(r, base_values(i));
    if (!d) throw ClosedSetError("term " + std::to_string(i) + " divides by zero");
    return *d;
}

std::vector<RVector> ProbeSequence::differences(Index first, std::size_t count) const {
    std::vector<RVector> out;
    out.reserve(count);
    if (is_rational_schema()) {
        for (std::size_t t = 0; t < count; ++t) out.push_back(difference(first + static_cast<Index>(t)));
        return out;
    }
    const auto& r = std::get<RecurrenceSchema>(schema_);
    BaseCursor c(r, start_);
    c.advance_to(first);
    for (std::size_t t = 0; t < count; ++t, c.advance()) {
        auto d = recurrence_difference(r, c.values());
        if (!d) throw ClosedSetError("term " + std::to_string(c.index()) + " divides by zero");
        out.push_back(std::move(*d));
    }
    return out;
}

ClosedSetDesc::ClosedSetDesc(std::size_t n, std::vector<RPolytope> polytopes, std::vector<ProbeSequence> sequences)
    : n_(n), polys_(std::move(polytopes)), seqs_(std::move(sequences)) {
    if (n == 0) throw ClosedSetError("arity must be at least 1");
    if (polys_.empty() && seqs_.empty()) throw EmptySetError("closed set description is empty");
    for (const auto& p : polys_) {
        if (p.empty()) throw EmptySetError("empty polytope in closed set description");
        if (p.ambient_dimension() != n) throw ClosedSetError("polytope arity mismatch");
        for (const auto& v : p.vertices())
            if (!in_cube(v)) throw ClosedSetError("polytope vertex outside the unit cube: " + to_string(v));
    }
    for (const auto& s : seqs_)
        if (s.arity() != n) throw ClosedSetError("sequence arity mismatch");
}

Tri sequence_contains(const ProbeSequence& s, const RPoint& p, Index horizon) {
    if (p == s.limit()) return Tri::Yes;
    const RVector delta = sub(p, s.limit());
    if (const auto* r = std::get_if<RationalSchema>(&s.schema())) {
        for (std::size_t j = 0; j < delta.size(); ++j) {
            Poly eq = r->num[j] * denominator_of(delta[j]) - r->den[j] * numerator_of(delta[j]);
            if (eq.is_zero()) continue;
            for (const auto& i : integer_roots(eq))
                if (i >= s.start() && s.difference(i.convert_to<Index>()) == delta) return Tri::Yes;
            return Tri::No;
        }
        return Tri::No;
    }
    const auto& r = std::get<RecurrenceSchema>(s.schema());
    const Rational target = norm2(delta);
    BaseCursor c(r, s.start());
    for (; c.index() < s.start() + horizon; c.advance()) {
        auto d = recurrence_difference(r, c.values());
        if (!d) continue;
        if (*d == delta) return Tri::Yes;
        if (s.tail_index() && c.index() >= *s.tail_index() && norm2(*d) < target) return Tri::No;
    }
    return Tri::Unknown;
}

Tri membership(const ClosedSetDesc& x, const RPoint& p, Index horizon) {
    if (p.size() != x.arity()) throw ArityError("point arity mismatch");
    if (!in_cube(p)) return Tri::No;
    for (const auto& poly : x.polytopes())
        if (poly.contains(p)) return Tri::Yes;
    Tri result = Tri::No;
    for (const auto& s : x.sequences()) {
        Tri t = sequence_contains(s, p, horizon);
        if (t == Tri::Yes) return Tri::Yes;
        if (t == Tri::Unknown) result = Tri::Unknown;
    }
    return result;
}

std::vector<PointOfSet> enumerate_points(const ClosedSetDesc& x, std::size_t budget) {
    std::vector<PointOfSet> out;
    for (std::size_t k = 0; k < x.polytopes().size(); ++k)
        for (const auto& v : x.polytopes()[k].vertices())
            out.push_back(PointOfSet{v, PointOfSet::Source::PolytopeVertex, k});
    for (std::size_t k = 0; k < x.sequences().size(); ++k) {
        const auto& s = x.sequences()[k];
        out.push_back(PointOfSet{s.limit(), PointOfSet::Source::Limit, k});
        auto ds = s.differences(s.start(), budget);
        for (std::size_t t = 0; t < ds.size(); ++t)
            out.push_back(PointOfSet{add(s.limit(), ds[t]), PointOfSet::Source::Term, k,
                                     s.start() + static_cast<Index>(t)});
    }
    return out;
}

ZeroLocus zero_locus_of_basis(const std::vector<PLFunction>& fs) {
    if (fs.empty()) throw std::invalid_argument("empty basis");
    std::vector<RPolytope> cells = zeroset(fs.front()).cells;
    for (std::size_t k = 1; k < fs.size(); ++k) {
        if (fs[k].arity() != fs.front().arity()) throw ArityError("basis arity mismatch");
        std::vector<RPolytope> next;
        for (const auto& b : zeroset(fs[k]).cells)
            for (const auto& a : cells) {
                RPolytope c = a.intersect(b);
                if (!c.empty()) next.push_back(std::move(c));
            }
        cells = std::move(next);
    }
    return ZeroLocus::from_cells(fs.front().arity(), std::move(cells));
}

ClosedSetDesc closed_set_from_locus(const ZeroLocus& z) { return ClosedSetDesc(z.arity, z.cells, {}); }

}  // namespace mvss

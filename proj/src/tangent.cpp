#include "mvss/tangent.hpp"
#include "mvss/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mvss {

namespace {

using PointSet = std::set<RPoint, decltype(&lex_less)>;

PointSet make_point_set() { return PointSet(&lex_less); }

Poly product_of(const std::vector<Poly>& ps, std::size_t skip) {
    Poly r = Poly::constant(1);
    for (std::size_t k = 0; k < ps.size(); ++k)
        if (k != skip) r = r * ps[k];
    return r;
}

Rational pow_rational(const Rational& x, int e) {
    Rational r = 1;
    for (int t = 0; t < std::abs(e); ++t) r *= x;
    return e >= 0 ? r : 1 / r;
}

bool strictly_inside(const Cone& c, const RPoint& p) {
    RVector d = sub(p, c.apex);
    if (is_zero(d)) return false;
    Rational n2 = norm2(d), s = dot(d, c.axis);
    return n2 < c.height * c.height && s > 0 &&
           s * s > c.cos_half_angle * c.cos_half_angle * n2 * norm2(c.axis);
}

// Contribution of one part of X: infinitely many points, or a finite set,
// or undecided (with the points found so far).
struct Part {
    enum class Kind { Infinite, Finite, Unknown } kind = Kind::Finite;
    std::vector<RPoint> points;
    std::string note;
};

Part polytope_part(const RPolytope& poly, const Cone& c) {
    Part part;
    const RVector& a = c.axis;
    const Rational c2 = c.cos_half_angle * c.cos_half_angle;
    const Rational aa = norm2(a);
    if (poly.contains(c.apex)) {
        // Points near the apex: decided on the tangent cone of the polytope.
        bool feasible = true;
        for (const auto* h : poly.active_at(c.apex))
            if (dot(h->normal, a) > 0) feasible = false;
        if (feasible) return Part{Part::Kind::Infinite, {}, ""};
        std::vector<RVector> rays;
        for (const auto& v : poly.vertices())
            if (v != c.apex) rays.push_back(sub(v, c.apex));
        for (const auto& r : rays) {
            Rational s = dot(r, a);
            if (s > 0 && s * s >= c2 * norm2(r) * aa) return Part{Part::Kind::Infinite, {}, ""};
        }
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                const RVector &r1 = rays[i], &r2 = rays[j];
                auto coef = solve({{dot(r1, r1), dot(r1, r2)}, {dot(r1, r2), dot(r2, r2)}}, {dot(r1, a), dot(r2, a)});
                if (!coef || (*coef)[0] < 0 || (*coef)[1] < 0) continue;
                RVector proj = add(scale(r1, (*coef)[0]), scale(r2, (*coef)[1]));
                Rational pp = norm2(proj);
                if (pp > 0 && pp >= c2 * aa) return Part{Part::Kind::Infinite, {}, ""};
            }
        if (c.apex.size() > 3) part.note = "tangent-cone test is exact only up to dimension 3";
        // Points away from the apex are covered by the same test: the polytope
        // is star-shaped from the apex and the cone is convex.
        return part;
    }
    auto found = make_point_set();
    std::vector<RPoint> probes = poly.vertices();
    const auto& vs = poly.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) probes.push_back(scale(add(vs[i], vs[j]), Rational(1, 2)));
    probes.push_back(poly.barycenter());
    bool interior_hit = false;
    for (const auto& p : probes) {
        if (p == c.apex || !cone_contains(c, p)) continue;
        found.insert(p);
        interior_hit |= strictly_inside(c, p);
    }
    if (found.size() >= 2 || (interior_hit && poly.dimension() >= 1)) return Part{Part::Kind::Infinite, {}, ""};
    part.points.assign(found.begin(), found.end());
    if (poly.dimension() == 0) return part;
    // separation certificates
    bool behind = std::all_of(vs.begin(), vs.end(), [&](const RPoint& v) { return dot(sub(v, c.apex), a) <= 0; });
    if (behind) return part;
    for (const auto& h : poly.halfspaces()) {
        Rational gap = dot(h.normal, c.apex) - h.offset;
        if (gap > 0 && gap * gap > c.height * c.height * norm2(h.normal)) return part;
    }
    part.kind = Part::Kind::Unknown;
    part.note = "polytope not containing the apex could not be separated from the cone";
    return part;
}

Part rational_sequence_part(const ProbeSequence& s, const Cone& c) {
    const auto& r = std::get<RationalSchema>(s.schema());
    const std::size_t n = s.arity();
    const Poly q = product_of(r.den, n);
    const RVector off = sub(s.limit(), c.apex);
    Integer m = 1;
    for (const auto& o : off) m = lcm_of(m, denominator_of(o));
    std::vector<Poly> rr;
    for (std::size_t j = 0; j < n; ++j) {
        Integer oj = numerator_of(off[j]) * (m / denominator_of(off[j]));
        rr.push_back(q * oj + r.num[j] * product_of(r.den, j) * m);
    }
    std::vector<Integer> a = primitive_integer_direction(c.axis);
    Poly sr, ar;
    Integer aa = 0;
    for (std::size_t j = 0; j < n; ++j) {
        sr = sr + rr[j] * rr[j];
        ar = ar + rr[j] * a[j];
        aa += a[j] * a[j];
    }
    const Rational e2 = c.height * c.height, c2 = c.cos_half_angle * c.cos_half_angle;
    const Poly ball = sr * denominator_of(e2) - q * q * Integer(m * m * numerator_of(e2));
    const Poly half = ar * q;
    const Poly angle = ar * ar * denominator_of(c2) - sr * Integer(aa * numerator_of(c2));
    Integer bound = s.start();
    for (const Poly* p : {&ball, &half, &angle}) bound = std::max(bound, sign_stable_from(*p, s.start()));
    for (const auto& p : rr) bound = std::max(bound, sign_stable_from(p, s.start()));
    Part part;
    if (bound - s.start() > 10000000) {
        part.kind = Part::Kind::Unknown;
        part.note = "sign-stability bound too large to scan";
        return part;
    }
    const Index end = bound.convert_to<Index>();
    auto found = make_point_set();
    for (Index i = s.start(); i < end; ++i) {
        RPoint p = s.term(i);
        if (p != c.apex && cone_contains(c, p)) found.insert(std::move(p));
    }
    part.points.assign(found.begin(), found.end());
    const bool moving = std::any_of(rr.begin(), rr.end(), [](const Poly& p) { return !p.is_zero(); });
    if (moving && ball.eventual_sign() <= 0 && half.eventual_sign() >= 0 && angle.eventual_sign() >= 0)
        part.kind = Part::Kind::Infinite;
    return part;
}

Part recurrence_sequence_part(const ProbeSequence& s, const Cone& c, std::size_t min_count) {
    Part part;
    if (s.tail_index()) {
        if (s.limit() == c.apex) {
            DirectionVerdict v = limit_direction(s);
            if (v.kind != DirectionVerdict::Kind::Undetermined) {
                std::vector<QuadNum> dir = v.symbolic;
                if (v.kind == DirectionVerdict::Kind::Rational) {
                    dir.clear();
                    for (const auto& x : v.u) dir.push_back(QuadNum::rational(x, 0));
                }
                const Integer d = v.kind == DirectionVerdict::Kind::Irrational ? v.symbolic.front().d : Integer(0);
                QuadNum sa = QuadNum::rational(0, d), nn = QuadNum::rational(0, d);
                for (std::size_t j = 0; j < dir.size(); ++j) {
                    sa = sa + dir[j] * QuadNum::rational(c.axis[j], d);
                    nn = nn + dir[j] * dir[j];
                }
                QuadNum angle = sa * sa - nn * QuadNum::rational(c.cos_half_angle * c.cos_half_angle * norm2(c.axis), d);
                if (sa.sign() > 0 && angle.sign() > 0) return Part{Part::Kind::Infinite, {}, ""};
            }
        } else if (strictly_inside(c, s.limit())) {
            return Part{Part::Kind::Infinite, {}, ""};
        }
    }
    auto found = make_point_set();
    for (const auto& d : s.differences(s.start(), 2000)) {
        RPoint p = add(s.limit(), d);
        if (p != c.apex && cone_contains(c, p)) found.insert(std::move(p));
        if (found.size() >= min_count) break;
    }
    part.points.assign(found.begin(), found.end());
    part.kind = Part::Kind::Unknown;
    part.note = "recurrence terms beyond the scan are not certified";
    return part;
}

// Collinearity analysis of a sequence converging to the apex.
struct AlignScan {
    bool all_aligned = false;
    bool undetermined = false;
    std::optional<Index> aligned_index;
    std::string note;
};

std::optional<Rational> ray_parameter(const RVector& d, const RVector& u) {
    Rational t = dot(d, u) / norm2(u);
    if (t <= 0) return std::nullopt;
    if (scale(u, t) != d) return std::nullopt;
    return t;
}

}  // namespace

bool cone_contains(const Cone& c, const RPoint& p) {
    RVector d = sub(p, c.apex);
    if (is_zero(d)) return true;
    Rational n2 = norm2(d);
    if (n2 > c.height * c.height) return false;
    Rational s = dot(d, c.axis);
    if (s < 0) return false;
    return s * s >= c.cos_half_angle * c.cos_half_angle * n2 * norm2(c.axis);
}

ConeCount count_in_cone(const ClosedSetDesc& x, const Cone& c, std::size_t min_count) {
    if (is_zero(c.axis) || c.height <= 0 || c.cos_half_angle <= 0 || c.cos_half_angle > 1)
        throw std::invalid_argument("malformed cone");
    std::vector<Part> parts;
    for (const auto& p : x.polytopes()) parts.push_back(polytope_part(p, c));
    for (const auto& s : x.sequences()) {
        Part lim;
        if (s.limit() != c.apex && cone_contains(c, s.limit())) lim.points.push_back(s.limit());
        parts.push_back(lim);
        parts.push_back(s.is_rational_schema() ? rational_sequence_part(s, c) : recurrence_sequence_part(s, c, min_count));
    }
    auto found = make_point_set();
    bool unknown = false;
    std::string note;
    for (const auto& p : parts) {
        if (p.kind == Part::Kind::Infinite) return ConeCount{ConeCount::Kind::AtLeast, min_count, ""};
        found.insert(p.points.begin(), p.points.end());
        if (p.kind == Part::Kind::Unknown) unknown = true;
        if (!p.note.empty()) note = p.note;
    }
    if (unknown) {
        if (found.size() >= min_count) return ConeCount{ConeCount::Kind::AtLeast, min_count, ""};
        return ConeCount{ConeCount::Kind::Unknown, found.size(), note};
    }
    return ConeCount{ConeCount::Kind::Exactly, found.size(), note};
}

DirectionVerdict limit_direction(const ProbeSequence& s) {
    DirectionVerdict v;
    const std::size_t n = s.arity();
    if (const auto* r = std::get_if<RationalSchema>(&s.schema())) {
        int best = std::numeric_limits<int>::max();
        for (std::size_t j = 0; j < n; ++j)
            if (!r->num[j].is_zero()) best = std::min(best, r->den[j].degree() - r->num[j].degree());
        RVector w(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            if (!r->num[j].is_zero() && r->den[j].degree() - r->num[j].degree() == best)
                w[j] = Rational(r->num[j].leading(), r->den[j].leading());
        v.kind = DirectionVerdict::Kind::Rational;
        v.u = to_rvector(primitive_integer_direction(w));
        return v;
    }
    const auto& r = std::get<RecurrenceSchema>(s.schema());
    const Integer disc = r.a * r.a + 4 * r.b;
    if (!s.tail_index()) {
        v.reason = "no real dominant root: a=" + r.a.str() + ", b=" + r.b.str() + ", discriminant " + disc.str();
        return v;
    }
    int emax = std::numeric_limits<int>::min();
    std::vector<int> total(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (int e : r.exponents[j]) total[j] += e;
        if (r.coeff[j] != 0) emax = std::max(emax, total[j]);
    }
    const bool square = is_perfect_square(disc);
    // sqrt(disc) = k sqrt(d) with d squarefree
    Integer k_root = 1, d = disc;
    for (Integer f = 2; f * f <= d; ++f)
        while (d % (f * f) == 0) {
            d /= f * f;
            k_root *= f;
        }
    if (square) d = 0;
    const QuadNum sigma = square ? QuadNum::rational(Rational(r.a - isqrt(disc), 2), 0)
                                 : QuadNum{Rational(r.a, 2), Rational(-k_root, 2), d};
    std::vector<QuadNum> kk(n, QuadNum::rational(0, d));
    std::optional<std::size_t> j0;
    for (std::size_t j = 0; j < n; ++j) {
        if (r.coeff[j] == 0 || total[j] != emax) continue;
        QuadNum x = QuadNum::rational(r.coeff[j], d);
        for (std::size_t b = 0; b < r.bases.size(); ++b) {
            QuadNum base = QuadNum::rational(Rational(r.bases[b].second), d) - sigma * QuadNum::rational(Rational(r.bases[b].first), d);
            x = x * base.pow(r.exponents[j][b]);
        }
        kk[j] = x;
        if (!j0) j0 = j;
    }
    const int s0 = kk[*j0].sign();
    std::vector<QuadNum> ratio(n, QuadNum::rational(0, d));
    for (std::size_t j = 0; j < n; ++j) ratio[j] = (kk[j] / kk[*j0]) * QuadNum::rational(s0, d);
    auto irrational = std::find_if(ratio.begin(), ratio.end(), [](const QuadNum& q) { return !q.is_rational(); });
    if (irrational == ratio.end()) {
        RVector w;
        for (const auto& q : ratio) w.push_back(q.u);
        v.kind = DirectionVerdict::Kind::Rational;
        v.u = to_rvector(primitive_integer_direction(w));
        return v;
    }
    v.kind = DirectionVerdict::Kind::Irrational;
    v.symbolic = ratio;
    v.characteristic = Poly({Integer(-r.b), Integer(-r.a), Integer(1)});
    std::string t = "candidates";
    Integer bb = abs(r.b);
    std::vector<Integer> cands;
    for (Integer q = 1; q <= bb; ++q)
        if (bb % q == 0) {
            cands.push_back(q);
            cands.push_back(-q);
        }
    for (std::size_t i = 0; i < cands.size(); ++i) t += std::string(i ? ", " : " ") + cands[i].str();
    t += ";";
    for (const auto& q : cands) t += " p(" + q.str() + ")=" + v.characteristic(q).str();
    t += "; no rational root";
    v.root_test = t;
    v.ratio_coordinate = static_cast<std::size_t>(irrational - ratio.begin());
    const QuadNum& x = *irrational;
    v.ratio_min_poly = {x.u * x.u - x.v * x.v * Rational(x.d), -2 * x.u, Rational(1)};
    return v;
}

namespace {

AlignScan rational_alignment(const ProbeSequence& s, const RVector& u, const std::function<void(Index, Rational)>& hit) {
    AlignScan out;
    const auto& r = std::get<RationalSchema>(s.schema());
    const std::size_t n = s.arity();
    const std::vector<Integer> uu = primitive_integer_direction(u);
    std::vector<Poly> p;
    for (std::size_t j = 0; j < n; ++j) p.push_back(r.num[j] * product_of(r.den, j));
    const Poly q = product_of(r.den, n);
    std::optional<Poly> witness;
    for (std::size_t j = 0; j < n && !witness; ++j)
        for (std::size_t k = j + 1; k < n && !witness; ++k) {
            Poly cjk = p[j] * uu[k] - p[k] * uu[j];
            if (!cjk.is_zero()) witness = cjk;
        }
    auto check = [&](Index i) {
        if (auto t = ray_parameter(s.difference(i), u)) hit(i, *t);
    };
    if (witness) {
        for (const auto& i : integer_roots(*witness))
            if (i >= s.start()) check(i.convert_to<Index>());
        return out;
    }
    // identically collinear: orientation eventually constant
    Poly t;
    for (std::size_t j = 0; j < n; ++j) t = t + p[j] * uu[j];
    if (t.eventual_sign() * q.eventual_sign() > 0) {
        out.all_aligned = true;
        out.aligned_index = std::max(sign_stable_from(t, s.start()), sign_stable_from(q, s.start())).convert_to<Index>();
        return out;
    }
    const Index end = std::max(sign_stable_from(t, s.start()), sign_stable_from(q, s.start())).convert_to<Index>();
    for (Index i = s.start(); i < end; ++i) check(i);
    return out;
}

AlignScan recurrence_alignment(const ProbeSequence& s, const RVector& u, const std::function<void(Index, Rational)>& hit) {
    constexpr std::size_t budget = 2000;
    AlignScan out;
    const auto& r = std::get<RecurrenceSchema>(s.schema());
    const std::size_t n = s.arity();
    auto check = [&](Index i, const RVector& d) {
        if (auto t = ray_parameter(d, u)) hit(i, *t);
    };
    if (!s.tail_index()) {
        auto ds = s.differences(s.start(), budget);
        for (std::size_t t = 0; t < ds.size(); ++t) check(s.start() + static_cast<Index>(t), ds[t]);
        out.undetermined = true;
        out.note = "recurrence without tail certificate; scanned " + std::to_string(budget) + " terms";
        return out;
    }
    const Index tail = *s.tail_index();
    {
        auto ds = s.differences(s.start(), static_cast<std::size_t>(tail - s.start()));
        for (std::size_t t = 0; t < ds.size(); ++t) check(s.start() + static_cast<Index>(t), ds[t]);
    }
    const auto [L, U] = *s.ratio_interval();
    enum class Pair { Always, Never, Increasing, Decreasing, Unknown };
    struct Crossing {
        std::vector<int> f;
        Rational target;
        bool increasing;
    };
    bool never = false, unknown = false;
    std::optional<Crossing> crossing;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            Rational A = r.coeff[j] * u[k], B = r.coeff[k] * u[j];
            Pair kind;
            std::vector<int> f(r.bases.size());
            for (std::size_t b = 0; b < f.size(); ++b) f[b] = r.exponents[j][b] - r.exponents[k][b];
            if (A == 0 && B == 0) kind = Pair::Always;
            else if (A == 0 || B == 0) kind = Pair::Never;
            else if (std::all_of(f.begin(), f.end(), [](int e) { return e == 0; })) kind = A == B ? Pair::Always : Pair::Never;
            else {
                Rational lo = 1, hi = 1;
                for (int e : f) {
                    lo *= pow_rational(e > 0 ? L : U, e);
                    hi *= pow_rational(e > 0 ? U : L, e);
                }
                kind = lo > 1 ? Pair::Increasing : hi < 1 ? Pair::Decreasing : Pair::Unknown;
            }
            if (kind == Pair::Never) never = true;
            if (kind == Pair::Unknown) unknown = true;
            if ((kind == Pair::Increasing || kind == Pair::Decreasing) && !crossing)
                crossing = Crossing{f, B / A, kind == Pair::Increasing};
        }
    if (never) return out;
    if (crossing) {
        // |prod s^f| is strictly monotone past the tail: it meets the target at most once.
        const Rational target = abs_of(crossing->target);
        for (Index i = tail; i < tail + ClosedSetDesc::default_horizon; ++i) {
            auto sv = s.base_values(i);
            Rational g = 1;
            for (std::size_t b = 0; b < sv.size(); ++b) g *= pow_rational(Rational(sv[b]), crossing->f[b]);
            Rational ag = abs_of(g);
            if (ag == target) check(i, s.difference(i));
            if (crossing->increasing ? ag > target : ag < target) return out;
        }
        out.undetermined = true;
        out.note = "collinearity crossing not reached within the horizon";
        return out;
    }
    if (!unknown) {
        // every pair always collinear past the tail; orientation is constant there
        RVector d = s.difference(tail);
        if (dot(d, u) > 0) {
            out.all_aligned = true;
            out.aligned_index = tail;
        }
        return out;
    }
    auto ds = s.differences(tail, budget);
    for (std::size_t t = 0; t < ds.size(); ++t) check(tail + static_cast<Index>(t), ds[t]);
    out.undetermined = true;
    out.note = "collinearity of recurrence terms not decidable past " + std::to_string(tail + budget);
    return out;
}

}  // namespace

Outgoing is_outgoing(const ClosedSetDesc& x, const RPoint& apex, const RVector& u, const Rational& lambda_max) {
    if (is_zero(u)) throw std::invalid_argument("zero direction");
    if (apex.size() != x.arity() || u.size() != x.arity()) throw ArityError("arity mismatch");
    Outgoing out;
    Rational lam = lambda_max;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] > 0) lam = std::min(lam, (1 - apex[j]) / u[j]);
        if (u[j] < 0) lam = std::min(lam, apex[j] / -u[j]);
    }
    if (lam <= 0) {
        out.note = "direction leaves the cube at the base point";
        return out;
    }
    std::optional<Index> blocking_index;
    auto shrink = [&](const Rational& t) {
        if (t <= lam) lam = t / 2;
    };
    for (const auto& p : x.polytopes()) {
        auto clip = clip_parameters(apex, axpy(apex, lam, u), p);
        if (!clip) continue;
        if (clip->first == 0) {
            if (clip->second > 0) {
                out.kind = Outgoing::Kind::No;
                out.blocker = axpy(apex, clip->second * lam, u);
                out.note = "segment runs inside a polytope part";
                return out;
            }
            continue;
        }
        shrink(clip->first * lam);
    }
    for (const auto& s : x.sequences())
        if (s.limit() != apex)
            if (auto t = ray_parameter(sub(s.limit(), apex), u)) shrink(*t);

    std::string undetermined;
    for (const auto& s : x.sequences()) {
        if (s.limit() != apex) continue;
        auto hit = [&](Index i, const Rational& t) {
            if (t <= lam) {
                lam = t / 2;
                blocking_index = i;
            }
        };
        AlignScan a = s.is_rational_schema() ? rational_alignment(s, u, hit) : recurrence_alignment(s, u, hit);
        if (a.all_aligned) {
            out.kind = Outgoing::Kind::AllAligned;
            out.index = a.aligned_index;
            out.note = "all terms past the index lie on the ray";
            return out;
        }
        if (a.undetermined) undetermined = a.note;
    }
    for (const auto& s : x.sequences()) {
        if (s.limit() == apex) continue;
        auto dist2 = [&] {
            Rational tau = dot(sub(s.limit(), apex), u) / norm2(u);
            tau = std::clamp(tau, Rational(0), lam);
            return norm2(sub(s.limit(), axpy(apex, tau, u)));
        };
        constexpr Index budget = 2000;
        bool stopped = false;
        for (Index i = s.start(); i < s.start() + ClosedSetDesc::default_horizon; ++i) {
            RVector d = s.difference(i);
            if (auto t = ray_parameter(add(d, sub(s.limit(), apex)), u); t && *t <= lam) {
                lam = *t / 2;
                blocking_index = i;
            }
            if (s.tail_index() && i >= *s.tail_index() && norm2(d) < dist2()) {
                stopped = true;
                break;
            }
            if (!s.tail_index() && i >= s.start() + budget) break;
        }
        if (!stopped) undetermined = "terms of a sequence converging elsewhere could not be excluded";
    }
    if (!undetermined.empty()) {
        out.kind = Outgoing::Kind::Undetermined;
        out.note = undetermined;
        return out;
    }
    out.kind = Outgoing::Kind::Yes;
    out.lambda = lam;
    out.index = blocking_index;
    return out;
}

std::vector<TangentWitness> tangent_report(const ClosedSetDesc& x, const Rational& lambda_max) {
    std::vector<TangentWitness> out(x.sequences().size());
    parallel_for(out.size(), [&](std::size_t k) {
        const auto& s = x.sequences()[k];
        TangentWitness w{s.limit(), limit_direction(s), {}, k};
        switch (w.direction.kind) {
            case DirectionVerdict::Kind::Rational: w.outgoing = is_outgoing(x, s.limit(), w.direction.u, lambda_max); break;
            case DirectionVerdict::Kind::Irrational:
                w.outgoing.kind = Outgoing::Kind::NotApplicable;
                w.outgoing.note = "irrational direction";
                break;
            case DirectionVerdict::Kind::Undetermined:
                w.outgoing.kind = Outgoing::Kind::Undetermined;
                w.outgoing.note = w.direction.reason;
                break;
        }
        out[k] = std::move(w);
    });
    return out;
}

namespace {

std::string compact_poly(const std::vector<Rational>& c, const std::string& var) {
    std::string out;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        if (c[k] == 0) continue;
        Rational a = abs_of(c[k]);
        if (out.empty()) out += c[k] < 0 ? "-" : "";
        else out += c[k] < 0 ? "-" : "+";
        if (a != 1 || k == 0) out += to_string(a);
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string poly_text(const Poly& p, const std::string& var) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(Rational(x));
    return compact_poly(c, var);
}

std::string rational_poly_text(const std::vector<Rational>& ascending, const std::string& var) {
    return compact_poly(ascending, var);
}

}  // namespace mvss

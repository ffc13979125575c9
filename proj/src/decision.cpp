#include "mvss/decision.hpp"
#include "mvss/parallel.hpp"

#include <algorithm>
#include <map>

namespace mvss {

namespace {

RPolytope box_around(const RPoint& c, const Rational& r) {
    std::vector<Halfspace> hs;
    const std::size_t n = c.size();
    for (std::size_t j = 0; j < n; ++j) {
        RVector e(n, Rational(0));
        e[j] = 1;
        hs.push_back(Halfspace{e, std::min(Rational(1), c[j] + r)});
        hs.push_back(Halfspace{scale(e, -1), -std::max(Rational(0), c[j] - r)});
    }
    return RPolytope::from_halfspaces(hs, n);
}

// First index >= from with ||d(i)||^2 <= r2 (norms decrease past the tail).
std::optional<Index> entry_index(const ProbeSequence& s, Index from, const Rational& r2) {
    constexpr Index limit = 2000000;
    if (s.is_rational_schema()) {
        for (Index i = from; i < from + limit; ++i)
            if (norm2(s.difference(i)) <= r2) return i;
        return std::nullopt;
    }
    constexpr std::size_t chunk = 256;
    for (Index i = from; i < from + limit; i += chunk) {
        auto ds = s.differences(i, chunk);
        for (std::size_t t = 0; t < ds.size(); ++t)
            if (norm2(ds[t]) <= r2) return i + static_cast<Index>(t);
    }
    return std::nullopt;
}

Integer ceil_ratio(const Rational& a, const Rational& b) { return ceil_of(a / b); }

}  // namespace

std::optional<DominanceRow> find_dominance(const PLFunction& j, const PLFunction& g, const ProbeSequence& s,
                                           const Integer& k) {
    Integer bound_big = 100 * k + 1000;
    const Index bound = bound_big > 100000000 ? Index(100000000) : bound_big.convert_to<Index>();
    auto test = [&](Index i) -> std::optional<DominanceRow> {
        RPoint w = s.term(i);
        Rational jv = j(w), kg = Rational(k) * g(w);
        if (jv > kg) return DominanceRow{k, i, w, jv, kg};
        return std::nullopt;
    };
    const Index linear_end = s.start() + std::min<Index>(256, bound);
    if (s.is_rational_schema()) {
        for (Index i = s.start(); i < linear_end; ++i)
            if (auto r = test(i)) return r;
    } else {
        auto ds = s.differences(s.start(), static_cast<std::size_t>(linear_end - s.start()));
        for (std::size_t t = 0; t < ds.size(); ++t) {
            RPoint w = add(s.limit(), ds[t]);
            Rational jv = j(w), kg = Rational(k) * g(w);
            if (jv > kg) return DominanceRow{k, s.start() + static_cast<Index>(t), w, jv, kg};
        }
    }
    for (Index step = 512; step <= bound; step *= 2)
        if (auto r = test(s.start() + step)) return r;
    return std::nullopt;
}

std::optional<std::string> certify_bound(const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x,
                                         const Integer& k, std::optional<RPoint>* violation) {
    const PLFunction kg = truncated_multiple(g, k);
    auto fail = [&](const RPoint& p, std::string why) -> std::optional<std::string> {
        if (violation) *violation = p;
        return why;
    };
    if (!x.polytopes().empty())
        if (auto v = pl_leq_violation(f, kg, x.polytopes())) return fail(*v, "violated on a polytope part");
    for (const auto& s : x.sequences()) {
        if (f(s.limit()) > kg(s.limit())) return fail(s.limit(), "violated at a sequence limit");
        auto scan = [&](Index from, Index to) -> std::optional<RPoint> {
            if (to <= from) return std::nullopt;
            auto ds = s.differences(from, static_cast<std::size_t>(to - from));
            for (const auto& d : ds) {
                RPoint w = add(s.limit(), d);
                if (f(w) > kg(w)) return w;
            }
            return std::nullopt;
        };
        bool certified = false;
        if (s.tail_index()) {
            for (const Rational& r : {Rational(1, 8), Rational(1, 64), Rational(1, 512)}) {
                if (!pl_leq(f, kg, {box_around(s.limit(), r)})) continue;
                auto e = entry_index(s, *s.tail_index(), r * r);
                if (!e) continue;
                if (auto v = scan(s.start(), *e)) return fail(*v, "violated at a sequence term");
                certified = true;
                break;
            }
        }
        if (!certified) {
            if (auto v = scan(s.start(), s.start() + 2000)) return fail(*v, "violated at a sequence term");
            return std::string("tail of a sequence not certified");
        }
    }
    return std::nullopt;
}

IdealMembershipResult ideal_membership(const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x,
                                       const Integer& cap) {
    if (f.arity() != g.arity() || f.arity() != x.arity()) throw ArityError("arity mismatch");
    IdealMembershipResult res;
    const std::size_t n = x.arity();
    // Zg n X must lie inside Zf
    std::vector<RPolytope> region;
    for (const auto& z : zeroset(g).cells)
        for (const auto& p : x.polytopes()) {
            RPolytope c = z.intersect(p);
            if (!c.empty()) region.push_back(std::move(c));
        }
    std::optional<RPoint> bad;
    if (!region.empty()) bad = pl_leq_violation(f, PLFunction::constant(n, 0), region);
    if (!bad) {
        for (const auto& p : enumerate_points(x, 1000))
            if (p.source != PointOfSet::Source::PolytopeVertex && g(p.point) == 0 && f(p.point) > 0) {
                bad = p.point;
                break;
            }
    }
    if (bad) {
        res.kind = IdealMembershipResult::Kind::NotMember;
        res.zero_witness = bad;
        res.note = "g vanishes and f does not at " + to_string(*bad);
        return res;
    }
    auto certified = [&](const Integer& k) { return !certify_bound(f, g, x, k).has_value(); };
    if (certified(0)) {
        res.kind = IdealMembershipResult::Kind::Member;
        res.k = 0;
        return res;
    }
    Integer prev = 0;
    bool dominated = !x.sequences().empty();
    for (Integer k = 1;; k *= 2) {
        const Integer kk = std::min(k, cap);
        std::optional<RPoint> violation;
        auto reason = certify_bound(f, g, x, kk, &violation);
        if (!reason) {
            Integer lo = prev, hi = kk;
            while (hi - lo > 1) {
                Integer mid = (lo + hi) / 2;
                if (certified(mid)) hi = mid;
                else lo = mid;
            }
            res.kind = IdealMembershipResult::Kind::Member;
            res.k = hi;
            res.dominance.clear();
            return res;
        }
        res.evidence.push_back("k=" + kk.str() + ": " + *reason);
        if (dominated) {
            std::optional<DominanceRow> row;
            for (const auto& s : x.sequences())
                if ((row = find_dominance(f, g, s, kk))) break;
            if (row) res.dominance.push_back(*row);
            else dominated = false;
        }
        prev = kk;
        if (kk == cap) break;
    }
    if (dominated) {
        res.kind = IdealMembershipResult::Kind::NotMember;
        res.note = "every tested k up to the cap has a dominating sequence term";
        return res;
    }
    res.kind = IdealMembershipResult::Kind::Unknown;
    res.note = "cap " + cap.str() + " reached";
    return res;
}

// ---------------------------------------------------------------- one variable

std::string to_string(CoverCase c) {
    switch (c) {
        case CoverCase::Case1: return "Case1";
        case CoverCase::Sub2_1: return "Sub2.1";
        case CoverCase::Sub2_2_1: return "Sub2.2.1";
        case CoverCase::Sub2_2_2: return "Sub2.2.2";
        case CoverCase::Sub2_2_3: return "Sub2.2.3";
    }
    return "?";
}

namespace {

const Rational& at0(const RPoint& p) { return p[0]; }

std::pair<Rational, Rational> extent_1d(const RPolytope& p) {
    auto [mn, mx] = std::minmax_element(p.vertices().begin(), p.vertices().end(),
                                        [](const RPoint& a, const RPoint& b) { return a[0] < b[0]; });
    return {(*mn)[0], (*mx)[0]};
}

// Smallest and largest point of X in [t0, t1] (n = 1), exact.
std::optional<std::pair<Rational, Rational>> x_hull_1d(const ClosedSetDesc& x, const Rational& t0, const Rational& t1) {
    std::vector<Rational> pts;
    auto in = [&](const Rational& v) { return v >= t0 && v <= t1; };
    for (const auto& p : x.polytopes()) {
        auto [a, b] = extent_1d(p);
        Rational lo = std::max(a, t0), hi = std::min(b, t1);
        if (lo <= hi) {
            pts.push_back(lo);
            pts.push_back(hi);
        }
    }
    for (const auto& s : x.sequences()) {
        if (!s.tail_index()) throw ClosedSetError("sequence without tail certificate in a one-variable set");
        const Rational L = at0(s.limit());
        if (in(L)) pts.push_back(L);
        const Index tail = *s.tail_index();
        for (const auto& d : s.differences(s.start(), static_cast<std::size_t>(tail - s.start())))
            if (in(L + d[0])) pts.push_back(L + d[0]);
        const int side = s.difference(tail)[0].sign();
        // tail terms move monotonically toward L from the given side
        const Rational near_end = side > 0 ? t1 : t0;  // terms enter T across this end
        const Rational far_end = side > 0 ? t0 : t1;
        if (side > 0 ? L >= t1 : L <= t0) continue;  // never inside T
        Index i = tail;
        Rational w = L + s.difference(i)[0];
        while (side > 0 ? w > near_end : w < near_end) w = L + s.difference(++i)[0];
        if (!in(w)) continue;
        pts.push_back(w);
        if (side > 0 ? L < far_end : L > far_end) {
            // finitely many terms in T: walk to the last one
            Rational last = w;
            for (;;) {
                Rational nx = L + s.difference(++i)[0];
                if (!in(nx)) break;
                last = nx;
            }
            pts.push_back(last);
        }
    }
    if (pts.empty()) return std::nullopt;
    auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
    return std::make_pair(*mn, *mx);
}

}  // namespace

CoverCertificate1D cover_certificate_1d(const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x) {
    if (x.arity() != 1 || f.arity() != 1 || g.arity() != 1) throw ArityError("cover certificates need one variable");
    std::vector<Rational> breaks;
    for (const PLFunction* h : {&f, &g})
        for (const auto& p : h->pieces())
            for (const auto& v : p.cell.vertices()) breaks.push_back(v[0]);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    CoverCertificate1D cert;
    cert.m = 0;
    auto F = [&](const Rational& t) { return f(RPoint{t}); };
    auto G = [&](const Rational& t) { return g(RPoint{t}); };
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
        const Rational t0 = breaks[b], t1 = breaks[b + 1];
        auto hull = x_hull_1d(x, t0, t1);
        if (!hull) continue;
        const auto [lo, hi] = *hull;
        const Rational glo = G(lo), ghi = G(hi);
        CoverEntry e{lo, lo, hi, 1, CoverCase::Case1};
        auto require_zero = [&](const Rational& p) {
            if (F(p) != 0) throw HypothesisViolation(RPoint{p}, "f does not vanish at " + to_string(p) + " where g does");
        };
        if (glo > 0 && ghi > 0) {
            e.m = std::max({Integer(0), ceil_ratio(F(lo), glo), ceil_ratio(F(hi), ghi)});
        } else if (glo == 0 && ghi == 0) {
            require_zero(lo);
            require_zero(hi);
            if (lo > t0 && lo < t1) {
                e.tag = CoverCase::Sub2_1;
            } else {
                const Rational y = lo == t0 ? t1 : t0;
                if (G(y) == 0) e.tag = F(y) == 0 ? CoverCase::Sub2_2_1 : CoverCase::Sub2_2_3;
                else {
                    e.tag = CoverCase::Sub2_2_2;
                    e.m = ceil_ratio(F(y), G(y));
                }
            }
        } else {
            const Rational v = glo == 0 ? lo : hi;
            require_zero(v);
            const Rational y = v == t0 ? t1 : t0;
            e.x = v;
            e.tag = CoverCase::Sub2_2_2;
            e.m = ceil_ratio(F(y), G(y));
        }
        cert.m = std::max(cert.m, e.m);
        cert.entries.push_back(e);
    }
    return cert;
}

bool verify_cover_1d(const CoverCertificate1D& c, const PLFunction& f, const PLFunction& g, const ClosedSetDesc& x) {
    std::vector<std::pair<Rational, Rational>> iv;
    for (const auto& e : c.entries) {
        if (e.lo > e.x || e.x > e.hi) return false;
        if (e.m > c.m) return false;
        RPolytope seg = e.lo == e.hi ? RPolytope::point({e.lo}) : RPolytope::segment({e.lo}, {e.hi});
        if (!pl_leq(f, truncated_multiple(g, e.m), {seg})) return false;
        iv.emplace_back(e.lo, e.hi);
    }
    auto covered = [&](const Rational& p) {
        return std::any_of(iv.begin(), iv.end(), [&](const auto& i) { return i.first <= p && p <= i.second; });
    };
    // merged closed intervals
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& i : iv) {
        if (!merged.empty() && i.first <= merged.back().second) merged.back().second = std::max(merged.back().second, i.second);
        else merged.push_back(i);
    }
    for (const auto& p : x.polytopes()) {
        auto [a, b] = extent_1d(p);
        if (std::none_of(merged.begin(), merged.end(), [&](const auto& m) { return m.first <= a && b <= m.second; }))
            return false;
    }
    for (const auto& s : x.sequences()) {
        const Rational L = s.limit()[0];
        if (!covered(L) || !s.tail_index()) return false;
        const Index tail = *s.tail_index();
        for (const auto& d : s.differences(s.start(), static_cast<std::size_t>(tail - s.start())))
            if (!covered(L + d[0])) return false;
        const int side = s.difference(tail)[0].sign();
        auto home = std::find_if(merged.begin(), merged.end(), [&](const auto& m) { return m.first <= L && L <= m.second; });
        const Rational reach = side > 0 ? home->second : home->first;
        if (reach == L) return false;  // terms accumulate on an uncovered side
        for (Index i = tail;; ++i) {
            Rational w = L + s.difference(i)[0];
            if (side > 0 ? w <= reach : w >= reach) break;
            if (!covered(w)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- witnesses

NotSssWitness not_sss_witness(const ClosedSetDesc& x, const TangentWitness& t, int kmax, const Rational& lambda_max) {
    if (t.direction.kind != DirectionVerdict::Kind::Rational) throw WitnessError("tangent direction is not rational");
    if (t.outgoing.kind != Outgoing::Kind::Yes) throw WitnessError("tangent is not outgoing");
    const RVector& u = t.direction.u;
    Rational lam = std::min(t.outgoing.lambda, lambda_max);
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] > 0) lam = std::min(lam, (1 - t.x[j]) / u[j]);
        if (u[j] < 0) lam = std::min(lam, t.x[j] / -u[j]);
    }
    if (lam <= 0) throw WitnessError("segment leaves the cube");
    if (membership(x, t.x) != Tri::Yes) throw WitnessError("base point is not in X");
    Outgoing check = is_outgoing(x, t.x, u, lam);
    if (check.kind != Outgoing::Kind::Yes || check.lambda != lam)
        throw WitnessError("segment conv(x, x + lambda u) meets X outside x");
    NotSssWitness w{t.x, u, lam, segment_zero_function(t.x, axpy(t.x, lam, u)), point_zero_function(t.x),
                    t.sequence_index, {}};
    const ProbeSequence& s = x.sequences().at(t.sequence_index);
    std::vector<std::optional<DominanceRow>> rows(static_cast<std::size_t>(std::max(kmax, 0)));
    parallel_for(rows.size(), [&](std::size_t t) { rows[t] = find_dominance(w.j, w.g, s, Integer(t + 1)); });
    for (auto& r : rows)
        if (r) w.dominance.push_back(std::move(*r));
    return w;
}

const std::vector<std::string>& fact_names() {
    static const std::vector<std::string> names{"g-vanishes-at-x", "j-vanishes-at-x",   "g-flat-along-u",
                                                "nonalignment",    "g-rises-across-u",  "j-rises-along-u",
                                                "outgoing",        "rational-data"};
    return names;
}

bool FactReport::facts_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const FactCheck& c) {
        return c.supporting || c.status != FactCheck::Status::Fail;
    });
}

bool FactReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const FactCheck& c) { return c.status != FactCheck::Status::Fail; });
}

const FactCheck* FactReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> FactReport::failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (c.status == FactCheck::Status::Fail) out.push_back(c.name);
    return out;
}

FactReport verify_fact_chain(const NotSssWitness& w, const ClosedSetDesc& x) {
    FactReport rep;
    using S = FactCheck::Status;
    auto add = [&](std::string name, bool ok, std::string detail, bool supporting = false) {
        rep.checks.push_back(FactCheck{std::move(name), ok ? S::Pass : S::Fail, std::move(detail), supporting});
    };
    const ProbeSequence& seq = x.sequences().at(w.sequence_index);
    const ClosedSetDesc only(x.arity(), {}, {seq});

    Rational gx = w.g(w.x), jx = w.j(w.x);
    add("g-vanishes-at-x", gx == 0, "g(x) = " + to_string(gx));
    add("j-vanishes-at-x", jx == 0, "j(x) = " + to_string(jx));
    try {
        Rational dg = directional_derivative(w.g, w.x, w.u);
        add("g-flat-along-u", dg == 0, "dg(x)/du = " + to_string(dg));
    } catch (const std::exception& e) {
        add("g-flat-along-u", false, e.what());
    }
    {
        Outgoing o = is_outgoing(only, w.x, w.u, w.lambda);
        add("nonalignment", o.kind == Outgoing::Kind::Yes, "no term of the sequence on conv(x, x + lambda u)");
    }
    if (x.arity() == 2) {
        RVector perp{-w.u[1], w.u[0]};
        long plus = 0, minus = 0;
        const Index from = seq.tail_index().value_or(seq.start());
        for (const auto& d : seq.differences(from, 1000)) {
            int sg = dot(d, perp).sign();
            plus += sg > 0;
            minus += sg < 0;
        }
        if (minus > plus) perp = scale(perp, -1);
        bool ok = true;
        std::string detail = "u_perp = " + to_string(perp) + ";";
        for (int q : {2, 4, 8}) {
            const Rational eps = w.lambda / q;
            try {
                Rational dv = directional_derivative(w.g, axpy(w.x, eps, w.u), perp);
                detail += " eps=" + to_string(eps) + ": " + to_string(dv);
                ok = ok && dv > 0;
            } catch (const std::exception& e) {
                detail += std::string(" eps=") + to_string(eps) + ": " + e.what();
                ok = false;
            }
        }
        add("g-rises-across-u", ok, detail);
    } else {
        rep.checks.push_back(FactCheck{"g-rises-across-u", S::NotApplicable, "only checked for two variables", false});
    }
    try {
        Rational dj = directional_derivative(w.j, w.x, w.u);
        add("j-rises-along-u", dj > 0, "dj(x)/du = " + to_string(dj));
    } catch (const std::exception& e) {
        add("j-rises-along-u", false, e.what());
    }
    {
        Outgoing o = is_outgoing(x, w.x, w.u, w.lambda);
        add("outgoing", o.kind == Outgoing::Kind::Yes && o.lambda == w.lambda,
            "conv(x, x + " + to_string(w.lambda) + " u) meets X only at x");
    }
    add("rational-data", !is_zero(w.u), "x = " + to_string(w.x) + ", u = " + to_string(w.u));

    // supporting checks
    {
        bool ok = true;
        std::string detail = "j = 0 at every point of X where g = 0";
        std::vector<RPolytope> region;
        for (const auto& z : zeroset(w.g).cells)
            for (const auto& p : x.polytopes()) {
                RPolytope c = z.intersect(p);
                if (!c.empty()) region.push_back(std::move(c));
            }
        if (!region.empty())
            if (auto v = pl_leq_violation(w.j, PLFunction::constant(x.arity(), 0), region)) {
                ok = false;
                detail = "j > 0 at " + to_string(*v);
            }
        for (const auto& p : enumerate_points(x, 1000))
            if (ok && w.g(p.point) == 0 && w.j(p.point) != 0) {
                ok = false;
                detail = "j > 0 at " + to_string(p.point);
            }
        add("j-zero-on-Zg", ok, detail, true);
    }
    {
        bool ok = true;
        std::string detail;
        for (int q : {2, 4, 8})
            for (const Rational& c : {Rational(1, 2), Rational(9, 10), Rational(99, 100)}) {
                ConeCount cc = count_in_cone(only, Cone{w.x, w.u, w.lambda / q, c}, 100);
                if (cc.kind != ConeCount::Kind::AtLeast) {
                    ok = false;
                    detail += " eps=" + to_string(w.lambda / q) + " cos=" + to_string(c) + " misses;";
                }
            }
        add("tail-in-cone", ok, ok ? "at least 100 terms in every cone of the grid" : detail, true);
    }
    {
        bool ok = !w.dominance.empty();
        for (const auto& r : w.dominance) {
            if (seq.term(r.i) != r.w || w.j(r.w) != r.j_value || Rational(r.k) * w.g(r.w) != r.kg_value ||
                !(r.j_value > r.kg_value))
                ok = false;
        }
        add("dominance", ok, std::to_string(w.dominance.size()) + " rows re-evaluated", true);
    }
    return rep;
}

// ---------------------------------------------------------------- verdicts

std::string to_string(SssVerdict::Kind k) {
    switch (k) {
        case SssVerdict::Kind::StronglySemisimple: return "SSS";
        case SssVerdict::Kind::NotStronglySemisimple: return "NOT-SSS";
        case SssVerdict::Kind::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(SssVerdict::Reason r) {
    switch (r) {
        case SssVerdict::Reason::None: return "none";
        case SssVerdict::Reason::PolyhedralHW: return "polyhedral set (finitely presented)";
        case SssVerdict::Reason::NoRationalOutgoingTangent: return "no rational outgoing tangent";
        case SssVerdict::Reason::Dim1: return "one variable";
    }
    return "?";
}

namespace {

SssVerdict from_report(const ClosedSetDesc& x, const DecisionOptions& opt, bool conclude_sss) {
    SssVerdict v;
    v.report = tangent_report(x, opt.lambda_max);
    for (const auto& t : v.report) {
        if (t.direction.kind == DirectionVerdict::Kind::Rational && t.outgoing.kind == Outgoing::Kind::Yes) {
            v.kind = SssVerdict::Kind::NotStronglySemisimple;
            v.witness = not_sss_witness(x, t, opt.kmax, opt.lambda_max);
            return v;
        }
    }
    for (const auto& t : v.report) {
        const std::string at = "sequence " + std::to_string(t.sequence_index + 1) + " at " + to_string(t.x) + ": ";
        if (t.direction.kind == DirectionVerdict::Kind::Undetermined) v.blockers.push_back(at + t.direction.reason);
        else if (t.outgoing.kind == Outgoing::Kind::Undetermined) v.blockers.push_back(at + t.outgoing.note);
        else if (!conclude_sss && t.direction.kind == DirectionVerdict::Kind::Rational)
            v.notes.push_back(at + "rational tangent is not outgoing");
    }
    if (conclude_sss && v.blockers.empty()) {
        v.kind = SssVerdict::Kind::StronglySemisimple;
        v.reason = SssVerdict::Reason::NoRationalOutgoingTangent;
        return v;
    }
    v.kind = SssVerdict::Kind::Unknown;
    if (!conclude_sss) v.blockers.push_back("no rational outgoing tangent found; no converse is available in three or more variables");
    return v;
}

}  // namespace

SssVerdict decide_sss_dim1(const ClosedSetDesc& x) {
    if (x.arity() != 1) throw ArityError("one-variable decision on a set of arity " + std::to_string(x.arity()));
    SssVerdict v;
    v.kind = SssVerdict::Kind::StronglySemisimple;
    v.reason = SssVerdict::Reason::Dim1;
    return v;
}

SssVerdict decide_sss_dim2(const ClosedSetDesc& x, const DecisionOptions& opt) {
    if (x.arity() != 2) throw ArityError("two-variable decision on a set of arity " + std::to_string(x.arity()));
    if (x.polyhedral()) {
        SssVerdict v;
        v.kind = SssVerdict::Kind::StronglySemisimple;
        v.reason = SssVerdict::Reason::PolyhedralHW;
        return v;
    }
    return from_report(x, opt, true);
}

SssVerdict decide_sss(const ClosedSetDesc& x, const DecisionOptions& opt) {
    if (x.arity() == 1) return decide_sss_dim1(x);
    if (x.arity() == 2) return decide_sss_dim2(x, opt);
    if (x.polyhedral()) {
        SssVerdict v;
        v.kind = SssVerdict::Kind::StronglySemisimple;
        v.reason = SssVerdict::Reason::PolyhedralHW;
        return v;
    }
    return from_report(x, opt, false);
}

}  // namespace mvss

#include "mvss/plfunction.hpp"

#include "mvss/parallel.hpp"

#include <algorithm>
#include <map>

namespace mvss {

// ---------------------------------------------------------------- AffineMap

AffineMap AffineMap::constant_map(std::size_t n, const Integer& c) {
    return AffineMap{std::vector<Integer>(n, Integer(0)), c};
}

AffineMap AffineMap::coordinate(std::size_t n, std::size_t i) {
    AffineMap m = constant_map(n, 0);
    m.coeffs[i] = 1;
    return m;
}

Rational AffineMap::operator()(const RPoint& p) const {
    Rational s(constant);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) s += Rational(coeffs[i]) * p[i];
    return s;
}

Rational AffineMap::slope_along(const RVector& u) const {
    Rational s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += Rational(coeffs[i]) * u[i];
    return s;
}

AffineMap AffineMap::operator+(const AffineMap& o) const {
    AffineMap r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    r.constant += o.constant;
    return r;
}

AffineMap AffineMap::operator-(const AffineMap& o) const { return *this + o.negated(); }

AffineMap AffineMap::operator*(const Integer& k) const {
    AffineMap r = *this;
    for (auto& c : r.coeffs) c *= k;
    r.constant *= k;
    return r;
}

AffineMap AffineMap::plus_constant(const Integer& c) const {
    AffineMap r = *this;
    r.constant += c;
    return r;
}

AffineMap AffineMap::negated() const { return *this * Integer(-1); }

Halfspace AffineMap::below(const Integer& t) const {
    return Halfspace{to_rvector(coeffs), Rational(t - constant)};
}

bool AffineMap::operator<(const AffineMap& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return constant < o.constant;
}

AffineMap integer_form(const RVector& a, const Rational& c) {
    Integer l = denominator_of(c);
    for (const auto& q : a) l = lcm_of(l, denominator_of(q));
    AffineMap m;
    for (const auto& q : a) m.coeffs.push_back(numerator_of(q) * (l / denominator_of(q)));
    m.constant = numerator_of(c) * (l / denominator_of(c));
    return m;
}

// ---------------------------------------------------------------- Piece

Piece::Piece(RPolytope c, AffineMap m) : cell(std::move(c)), map(std::move(m)) {
    const auto& v = cell.vertices();
    box_lo = v.front();
    box_hi = v.front();
    for (const auto& p : v) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < box_lo[i]) box_lo[i] = p[i];
            if (p[i] > box_hi[i]) box_hi[i] = p[i];
        }
    }
    volume = cell.volume();
}

bool Piece::may_contain(const RPoint& p) const {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < box_lo[i] || p[i] > box_hi[i]) return false;
    return true;
}

namespace {

bool boxes_overlap(const RPoint& alo, const RPoint& ahi, const RPoint& blo, const RPoint& bhi) {
    for (std::size_t i = 0; i < alo.size(); ++i)
        if (ahi[i] < blo[i] || bhi[i] < alo[i]) return false;
    return true;
}

bool boxes_overlap(const Piece& a, const Piece& b) { return boxes_overlap(a.box_lo, a.box_hi, b.box_lo, b.box_hi); }

std::pair<RPoint, RPoint> bounding_box(const RPolytope& p) {
    RPoint lo = p.vertices().front(), hi = lo;
    for (const auto& v : p.vertices())
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    return {lo, hi};
}

}  // namespace

// ---------------------------------------------------------------- PLFunction

PLFunction::PLFunction(std::size_t n, std::vector<Piece> pieces) : n_(n), pieces_(std::move(pieces)) { sort_pieces(); }

PLFunction make_unchecked(std::size_t n, std::vector<Piece> pieces) { return PLFunction(n, std::move(pieces)); }

void PLFunction::sort_pieces() {
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.cell < b.cell; });
}

PLFunction PLFunction::constant(std::size_t n, int value) {
    if (value != 0 && value != 1) throw PLError("McNaughton constants are 0 and 1");
    return PLFunction(n, {Piece(RPolytope::cube(n), AffineMap::constant_map(n, value))});
}

PLFunction PLFunction::projection(std::size_t n, std::size_t index) {
    if (index == 0 || index > n) throw ArityError("projection index out of range");
    return PLFunction(n, {Piece(RPolytope::cube(n), AffineMap::coordinate(n, index - 1))});
}

PLFunction PLFunction::clamped(const AffineMap& form) {
    const std::size_t n = form.coeffs.size();
    const RPolytope cube = RPolytope::cube(n);
    std::vector<Piece> out;
    const std::pair<Halfspace, AffineMap> parts[] = {
        {form.below(0), AffineMap::constant_map(n, 0)},
        {form.negated().below(-1), AffineMap::constant_map(n, 1)},
    };
    RPolytope middle = cube.cut(form.negated().below(0)).cut(form.below(1));
    if (middle.dimension() == static_cast<int>(n)) out.emplace_back(middle, form);
    for (const auto& [h, m] : parts) {
        RPolytope c = cube.cut(h);
        if (c.dimension() == static_cast<int>(n)) out.emplace_back(c, m);
    }
    PLFunction f(n, std::move(out));
    return f;
}

PLFunction PLFunction::from_pieces(std::size_t n, std::vector<Piece> pieces) {
    if (pieces.empty()) throw PLError("a function needs at least one cell");
    Rational total = 0;
    for (const auto& p : pieces) {
        if (p.cell.ambient_dimension() != n || p.map.coeffs.size() != n) throw PLError("cell arity mismatch");
        if (p.cell.dimension() != static_cast<int>(n)) throw PLError("cells must be full-dimensional");
        for (const auto& v : p.cell.vertices()) {
            for (const auto& c : v)
                if (c < 0 || c > 1) throw PLError("cell vertex outside the unit cube: " + to_string(v));
            Rational val = p.map(v);
            if (val < 0 || val > 1) throw PLError("value outside [0,1] at " + to_string(v));
        }
        total += p.volume;
    }
    if (total != 1) throw PLError("cells do not cover the unit cube (total volume " + to_string(total) + ")");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            if (!boxes_overlap(pieces[i], pieces[j])) continue;
            RPolytope common = pieces[i].cell.intersect(pieces[j].cell);
            if (common.empty()) continue;
            if (common.dimension() == static_cast<int>(n)) throw PLError("cells overlap");
            for (const auto& v : common.vertices())
                if (pieces[i].map(v) != pieces[j].map(v))
                    throw PLError("discontinuity at " + to_string(v));
        }
    }
    return PLFunction(n, std::move(pieces));
}

const Piece* PLFunction::locate(const RPoint& p) const {
    for (const auto& pc : pieces_)
        if (pc.may_contain(p) && pc.cell.contains(p)) return &pc;
    return nullptr;
}

Rational PLFunction::operator()(const RPoint& p) const {
    if (p.size() != n_) throw ArityError("point arity mismatch");
    const Piece* pc = locate(p);
    if (!pc) throw PLError("point outside the unit cube: " + to_string(p));
    return pc->map(p);
}

Complex PLFunction::triangulation() const {
    std::vector<RPolytope> cells;
    for (const auto& p : pieces_) cells.push_back(p.cell);
    return Complex::from_polytopes(n_, cells);
}

void PLFunction::merge_cells() {
    if (pieces_.size() < 2) return;
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<AffineMap, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < pieces_.size(); ++i) groups[pieces_[i].map].push_back(i);
        std::vector<bool> dead(pieces_.size(), false);
        std::vector<Piece> merged;
        for (auto& [map, idx] : groups) {
            for (std::size_t a = 0; a < idx.size(); ++a) {
                if (dead[idx[a]]) continue;
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    if (dead[idx[b]]) continue;
                    const Piece& pa = pieces_[idx[a]];
                    const Piece& pb = pieces_[idx[b]];
                    if (!boxes_overlap(pa, pb)) continue;
                    // need a common facet
                    std::vector<RPoint> common;
                    std::set_intersection(pa.cell.vertices().begin(), pa.cell.vertices().end(),
                                          pb.cell.vertices().begin(), pb.cell.vertices().end(),
                                          std::back_inserter(common), lex_less);
                    if (common.size() < n_ || affine_dimension(common) != static_cast<int>(n_) - 1) continue;
                    std::vector<RPoint> all = pa.cell.vertices();
                    all.insert(all.end(), pb.cell.vertices().begin(), pb.cell.vertices().end());
                    RPolytope hull = RPolytope::from_vertices(all, n_);
                    if (hull.volume() != pa.volume + pb.volume) continue;
                    dead[idx[a]] = dead[idx[b]] = true;
                    merged.emplace_back(std::move(hull), map);
                    changed = true;
                    break;
                }
            }
        }
        if (changed) {
            std::vector<Piece> next;
            for (std::size_t i = 0; i < pieces_.size(); ++i)
                if (!dead[i]) next.push_back(std::move(pieces_[i]));
            for (auto& m : merged) next.push_back(std::move(m));
            pieces_ = std::move(next);
        }
    }
    sort_pieces();
}

// ---------------------------------------------------------------- operations

namespace {

// Result map on the side form <= 0 and on the side form >= 0.
struct SplitRule {
    AffineMap form;
    AffineMap below, above;
};

template <class RuleFn>
PLFunction combine(const PLFunction& f, const PLFunction& g, RuleFn rule) {
    if (f.arity() != g.arity()) throw ArityError("arity mismatch");
    const std::size_t n = f.arity();
    const int full = static_cast<int>(n);
    const auto& fp = f.pieces();
    const auto& gp = g.pieces();
    std::vector<std::vector<Piece>> rows(fp.size());
    parallel_for(fp.size(), [&](std::size_t i) {
        for (const auto& q : gp) {
            if (!boxes_overlap(fp[i], q)) continue;
            RPolytope cell = fp[i].cell.intersect(q.cell);
            if (cell.dimension() != full) continue;
            SplitRule r = rule(fp[i].map, q.map);
            bool neg = false, pos = false;
            for (const auto& v : cell.vertices()) {
                int s = r.form(v).sign();
                neg |= s < 0;
                pos |= s > 0;
            }
            if (!pos) {
                rows[i].emplace_back(std::move(cell), r.below);
            } else if (!neg) {
                rows[i].emplace_back(std::move(cell), r.above);
            } else {
                RPolytope lo = cell.cut(r.form.below(0));
                RPolytope hi = cell.cut(r.form.negated().below(0));
                rows[i].emplace_back(std::move(lo), r.below);
                rows[i].emplace_back(std::move(hi), r.above);
            }
        }
    });
    std::vector<Piece> out;
    for (auto& r : rows)
        for (auto& p : r) out.push_back(std::move(p));
    PLFunction h = make_unchecked(n, std::move(out));
    h.merge_cells();
    return h;
}

}  // namespace

PLFunction mv_neg(const PLFunction& f) {
    std::vector<Piece> out;
    for (const auto& p : f.pieces()) out.emplace_back(p.cell, p.map.negated().plus_constant(1));
    return make_unchecked(f.arity(), std::move(out));
}

PLFunction mv_oplus(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [&](const AffineMap& a, const AffineMap& b) {
        AffineMap s = a + b;
        return SplitRule{s.plus_constant(-1), s, AffineMap::constant_map(f.arity(), 1)};
    });
}

PLFunction mv_otimes(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [&](const AffineMap& a, const AffineMap& b) {
        AffineMap s = (a + b).plus_constant(-1);
        return SplitRule{s, AffineMap::constant_map(f.arity(), 0), s};
    });
}

PLFunction mv_min(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [](const AffineMap& a, const AffineMap& b) { return SplitRule{a - b, a, b}; });
}

PLFunction mv_max(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [](const AffineMap& a, const AffineMap& b) { return SplitRule{a - b, b, a}; });
}

PLFunction mv_implies(const PLFunction& f, const PLFunction& g) {
    return combine(f, g, [&](const AffineMap& a, const AffineMap& b) {
        AffineMap s = (b - a).plus_constant(1);
        return SplitRule{b - a, s, AffineMap::constant_map(f.arity(), 1)};
    });
}

PLFunction truncated_multiple(const PLFunction& g, const Integer& k) {
    if (k < 0) throw std::invalid_argument("truncated_multiple needs k >= 0");
    const std::size_t n = g.arity();
    if (k == 0) return PLFunction::constant(n, 0);
    if (k == 1) return g;
    std::vector<Piece> out;
    for (const auto& p : g.pieces()) {
        AffineMap m = p.map * k;
        bool pos = false, neg = false;
        for (const auto& v : p.cell.vertices()) {
            int s = (m(v) - 1).sign();
            neg |= s < 0;
            pos |= s > 0;
        }
        if (!pos) {
            out.emplace_back(p.cell, m);
        } else if (!neg) {
            out.emplace_back(p.cell, AffineMap::constant_map(n, 1));
        } else {
            out.emplace_back(p.cell.cut(m.below(1)), m);
            out.emplace_back(p.cell.cut(m.negated().below(-1)), AffineMap::constant_map(n, 1));
        }
    }
    PLFunction h = make_unchecked(n, std::move(out));
    h.merge_cells();
    return h;
}

PLFunction compile(const Formula& f, std::size_t n) {
    if (f.max_var() > n)
        throw ArityError("formula uses x" + std::to_string(f.max_var()) + " but arity is " + std::to_string(n));
    switch (f.op()) {
        case Op::Var: return PLFunction::projection(n, f.var_index());
        case Op::Zero: return PLFunction::constant(n, 0);
        case Op::One: return PLFunction::constant(n, 1);
        case Op::Neg: return mv_neg(compile(f.child(), n));
        default: break;
    }
    PLFunction a = compile(f.left(), n);
    PLFunction b = compile(f.right(), n);
    switch (f.op()) {
        case Op::OPlus: return mv_oplus(a, b);
        case Op::OTimes: return mv_otimes(a, b);
        case Op::Min: return mv_min(a, b);
        case Op::Max: return mv_max(a, b);
        default: return mv_implies(a, b);
    }
}

// ---------------------------------------------------------------- zero sets

bool ZeroLocus::contains(const RPoint& p) const {
    return std::any_of(cells.begin(), cells.end(), [&](const RPolytope& c) { return c.contains(p); });
}

ZeroLocus ZeroLocus::from_cells(std::size_t n, std::vector<RPolytope> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<RPolytope> kept;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool inside_other = false;
        for (std::size_t j = 0; j < cells.size() && !inside_other; ++j) {
            if (i == j) continue;
            const auto& vi = cells[i].vertices();
            if (std::all_of(vi.begin(), vi.end(), [&](const RPoint& v) { return cells[j].contains(v); })) {
                // equal sets were deduplicated, so this is a proper containment
                inside_other = true;
            }
        }
        if (!inside_other) kept.push_back(cells[i]);
    }
    return ZeroLocus{n, std::move(kept)};
}

ZeroLocus zeroset(const PLFunction& f) {
    std::vector<RPolytope> cells;
    for (const auto& p : f.pieces()) {
        std::vector<RPoint> zeros;
        for (const auto& v : p.cell.vertices())
            if (p.map(v) == 0) zeros.push_back(v);
        if (zeros.empty()) continue;
        if (zeros.size() == p.cell.vertices().size()) cells.push_back(p.cell);
        else cells.push_back(RPolytope::from_vertices(zeros, f.arity()));
    }
    return ZeroLocus::from_cells(f.arity(), std::move(cells));
}

bool covered_by(const RPolytope& target, const std::vector<RPolytope>& pieces) {
    const int d = target.dimension();
    if (d < 0) return true;
    std::vector<RPolytope> clipped;
    for (const auto& p : pieces) {
        RPolytope c = p.intersect(target);
        if (c.empty()) continue;
        if (c == target) return true;
        if (c.dimension() == d) clipped.push_back(std::move(c));
    }
    if (d == 0 || clipped.empty()) return false;
    // Split the target along every constraint of every clipped piece; then each
    // sub-cell is either inside a piece or meets it only on its boundary.
    std::vector<RPolytope> cells{target};
    for (const auto& c : clipped) {
        for (const auto& h : c.halfspaces()) {
            std::vector<RPolytope> next;
            const Halfspace opposite{scale(h.normal, -1), -h.offset};
            for (const auto& cell : cells) {
                bool in = false, out = false;
                for (const auto& v : cell.vertices()) {
                    int s = (dot(h.normal, v) - h.offset).sign();
                    in |= s < 0;
                    out |= s > 0;
                }
                if (!(in && out)) {
                    next.push_back(cell);
                    continue;
                }
                for (const auto& half : {h, opposite}) {
                    RPolytope part = cell.cut(half);
                    if (part.dimension() == d) next.push_back(std::move(part));
                }
            }
            cells = std::move(next);
        }
    }
    for (const auto& cell : cells) {
        RPoint b = cell.barycenter();
        if (std::none_of(clipped.begin(), clipped.end(), [&](const RPolytope& c) { return c.contains(b); }))
            return false;
    }
    return true;
}

bool same_point_set(const std::vector<RPolytope>& a, const std::vector<RPolytope>& b) {
    for (const auto& p : a)
        if (!covered_by(p, b)) return false;
    for (const auto& p : b)
        if (!covered_by(p, a)) return false;
    return true;
}

// ---------------------------------------------------------------- derivatives

DirectionalDerivative derivative_along(const PLFunction& f, const RPoint& x, const RVector& u) {
    if (x.size() != f.arity() || u.size() != f.arity()) throw ArityError("arity mismatch");
    if (is_zero(u)) throw DirectionError("zero direction");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] > 1) throw DirectionError("base point outside the cube");
        if ((x[i] == 0 && u[i] < 0) || (x[i] == 1 && u[i] > 0))
            throw DirectionError("direction points outside the cube at " + to_string(x));
    }
    const Piece* best = nullptr;
    Rational best_exit = 0;
    for (const auto& p : f.pieces()) {
        if (!p.may_contain(x) || !p.cell.contains(x)) continue;
        std::optional<Rational> exit;
        bool blocked = false;
        for (const auto& h : p.cell.halfspaces()) {
            Rational hu = dot(h.normal, u);
            if (hu <= 0) continue;
            Rational t = h.slack(x) / hu;
            if (t == 0) {
                blocked = true;
                break;
            }
            if (!exit || t < *exit) exit = t;
        }
        if (blocked || !exit) continue;
        if (!best || *exit > best_exit) {
            best = &p;
            best_exit = *exit;
        }
    }
    if (!best) throw DirectionError("no cell contains an initial segment along the direction");
    return DirectionalDerivative{best->map.slope_along(u), best_exit};
}

Rational directional_derivative(const PLFunction& f, const RPoint& x, const RVector& u) {
    return derivative_along(f, x, u).value;
}

// ---------------------------------------------------------------- zero-set constructors

namespace {

// min(1, |form|) as an MV combination of clamped forms.
PLFunction clamped_abs(const AffineMap& form) {
    return mv_max(PLFunction::clamped(form), PLFunction::clamped(form.negated()));
}

}  // namespace

PLFunction point_zero_function(const RPoint& x) {
    const std::size_t n = x.size();
    for (const auto& c : x)
        if (c < 0 || c > 1) throw PLError("point outside the unit cube");
    std::optional<PLFunction> j;
    for (std::size_t i = 0; i < n; ++i) {
        RVector e(n, Rational(0));
        e[i] = 1;
        PLFunction term = clamped_abs(integer_form(e, -x[i]));
        j = j ? mv_oplus(*j, term) : term;
    }
    auto z = zeroset(*j);
    if (!same_point_set(z.cells, {RPolytope::point(x)}))
        throw PLError("point zero-set construction failed verification at " + to_string(x));
    return *j;
}

PLFunction segment_zero_function(const RPoint& x, const RPoint& y) {
    if (x == y) return point_zero_function(x);
    const std::size_t n = x.size();
    for (const auto* p : {&x, &y})
        for (const auto& c : *p)
            if (c < 0 || c > 1) throw PLError("segment endpoint outside the unit cube");
    const RVector d = sub(y, x);
    std::vector<PLFunction> terms;
    for (const auto& a : nullspace({d}, n)) terms.push_back(clamped_abs(integer_form(a, -dot(a, x))));
    const RVector dir = to_rvector(primitive_integer_direction(d));
    const Rational length = dot(dir, d);
    // phi(z) = dir . (z - x) ranges over [0, length] on the segment.
    terms.push_back(PLFunction::clamped(integer_form(scale(dir, -1), dot(dir, x))));
    terms.push_back(PLFunction::clamped(integer_form(dir, -dot(dir, x) - length)));
    PLFunction g = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) g = mv_oplus(g, terms[k]);
    auto z = zeroset(g);
    if (!same_point_set(z.cells, {RPolytope::segment(x, y)}))
        throw PLError("segment zero-set construction failed verification for " + to_string(x) + " -- " +
                      to_string(y));
    return g;
}

// ---------------------------------------------------------------- comparisons

std::optional<RPoint> pl_leq_violation(const PLFunction& f, const PLFunction& g,
                                       const std::vector<RPolytope>& region) {
    if (f.arity() != g.arity()) throw ArityError("arity mismatch");
    for (const auto& r : region) {
        if (r.empty()) continue;
        auto [rlo, rhi] = bounding_box(r);
        for (const auto& p : f.pieces()) {
            if (!boxes_overlap(p.box_lo, p.box_hi, rlo, rhi)) continue;
            RPolytope pr = p.cell.intersect(r);
            if (pr.empty()) continue;
            auto [plo, phi] = bounding_box(pr);
            for (const auto& q : g.pieces()) {
                if (!boxes_overlap(q.box_lo, q.box_hi, plo, phi)) continue;
                RPolytope prq = pr.intersect(q.cell);
                for (const auto& v : prq.vertices())
                    if (p.map(v) > q.map(v)) return v;
            }
        }
    }
    return std::nullopt;
}

bool pl_leq(const PLFunction& f, const PLFunction& g, const std::vector<RPolytope>& region) {
    return !pl_leq_violation(f, g, region).has_value();
}

bool pl_leq(const PLFunction& f, const PLFunction& g) { return pl_leq(f, g, {RPolytope::cube(f.arity())}); }

bool pl_equal(const PLFunction& f, const PLFunction& g) { return pl_leq(f, g) && pl_leq(g, f); }

}  // namespace mvss

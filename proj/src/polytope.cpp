#include "mvss/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace mvss {

Halfspace normalized(const Halfspace& h) {
    auto prim = primitive_integer_direction(h.normal);
    // prim = normal * s for some positive rational s; recover s from a nonzero entry.
    for (std::size_t i = 0; i < prim.size(); ++i) {
        if (h.normal[i] != 0) {
            Rational s = Rational(prim[i]) / h.normal[i];
            return Halfspace{to_rvector(prim), h.offset * s};
        }
    }
    return h;
}

RPolytope::RPolytope(std::size_t n, std::vector<RPoint> v, std::vector<Halfspace> h)
    : n_(n), vertices_(std::move(v)), halfspaces_(std::move(h)) {
    canonicalize();
}

namespace {

bool is_vertex_of(const RPoint& p, const std::vector<Halfspace>& hs, std::size_t n) {
    RMatrix tight;
    for (const auto& h : hs)
        if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    if (tight.size() < n) return false;
    return rank(std::move(tight)) == n;
}

bool in_simplex(const RPoint& p, const std::vector<RPoint>& s) {
    const std::size_t n = p.size();
    const std::size_t d = s.size() - 1;
    if (d == 0) return p == s[0];
    // Solve sum_k lambda_k (s_k - s_0) = p - s_0 (n equations, d unknowns).
    RMatrix aug(n, RVector(d + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < d; ++k) aug[r][k] = s[k + 1][r] - s[0][r];
        aug[r][d] = p[r] - s[0][r];
    }
    // Gaussian elimination on the augmented matrix.
    std::size_t row = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < d && row < n; ++c) {
        std::size_t q = row;
        while (q < n && aug[q][c] == 0) ++q;
        if (q == n) continue;
        std::swap(aug[row], aug[q]);
        Rational inv = 1 / aug[row][c];
        for (std::size_t k = c; k <= d; ++k) aug[row][k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug[r][c] == 0) continue;
            Rational f = aug[r][c];
            for (std::size_t k = c; k <= d; ++k) aug[r][k] -= f * aug[row][k];
        }
        piv.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (aug[r][d] != 0) return false;
    Rational sum = 0;
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (aug[r][d] < 0) return false;
        sum += aug[r][d];
    }
    return sum <= 1;
}

}  // namespace

void RPolytope::canonicalize() {
    std::sort(vertices_.begin(), vertices_.end(), lex_less);
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (vertices_.empty()) {
        halfspaces_.clear();
        return;
    }
    // Drop constraints that are slack at every vertex (redundant for the hull)
    // and, for full-dimensional polytopes, those that do not define a facet.
    const int dim = affine_dimension(vertices_);
    std::vector<Halfspace> kept;
    for (auto& h : halfspaces_) {
        std::vector<RPoint> act;
        for (const auto& v : vertices_)
            if (dot(h.normal, v) == h.offset) act.push_back(v);
        if (act.empty()) continue;
        if (dim == static_cast<int>(n_) && affine_dimension(act) != dim - 1) continue;
        kept.push_back(normalized(h));
    }
    std::sort(kept.begin(), kept.end(), [](const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    });
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    halfspaces_ = std::move(kept);
}

RPolytope RPolytope::cube(std::size_t n) {
    std::vector<RPoint> v;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        RPoint p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1u ? 1 : 0;
        v.push_back(std::move(p));
    }
    std::vector<Halfspace> h;
    for (std::size_t i = 0; i < n; ++i) {
        RVector e(n, Rational(0));
        e[i] = 1;
        h.push_back({e, 1});
        e[i] = -1;
        h.push_back({e, 0});
    }
    return RPolytope(n, std::move(v), std::move(h));
}

RPolytope RPolytope::from_vertices(std::vector<RPoint> pts, std::size_t n) {
    for (const auto& p : pts)
        if (p.size() != n) throw std::invalid_argument("vertex arity mismatch");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return RPolytope(n, {}, {});
    const int d = affine_dimension(pts);
    RMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    std::vector<RVector> eqs = nullspace(diffs, n);
    std::vector<Halfspace> hs;
    for (const auto& a : eqs) {
        Rational c = dot(a, pts[0]);
        hs.push_back({a, c});
        hs.push_back({scale(a, -1), -c});
    }
    if (d >= 1) {
        // Facets: hyperplanes through d affinely independent points with all
        // points on one side.
        std::vector<std::size_t> idx(static_cast<std::size_t>(d));
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
            if (pos == idx.size()) {
                std::vector<RPoint> sub_pts;
                for (auto i : idx) sub_pts.push_back(pts[i]);
                if (affine_dimension(sub_pts) != d - 1) return;
                RMatrix rows = eqs;
                for (std::size_t k = 1; k < sub_pts.size(); ++k) rows.push_back(sub(sub_pts[k], sub_pts[0]));
                auto ns = nullspace(rows, n);
                if (ns.size() != 1) return;
                const RVector& a = ns[0];
                Rational c = dot(a, sub_pts[0]);
                int side = 0;
                for (const auto& p : pts) {
                    int s = (dot(a, p) - c).sign();
                    if (s == 0) continue;
                    if (side == 0) side = s;
                    else if (s != side) return;
                }
                if (side == 0) return;
                if (side > 0) hs.push_back({scale(a, -1), -c});
                else hs.push_back({a, c});
                return;
            }
            for (std::size_t i = start; i < pts.size(); ++i) {
                idx[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
    }
    std::vector<RPoint> extreme;
    for (const auto& p : pts)
        if (is_vertex_of(p, hs, n)) extreme.push_back(p);
    return RPolytope(n, std::move(extreme), std::move(hs));
}

RPolytope RPolytope::from_halfspaces(const std::vector<Halfspace>& hs, std::size_t n) {
    RPolytope p = cube(n);
    for (const auto& h : hs) {
        p = p.cut(h);
        if (p.empty()) break;
    }
    return p;
}

int RPolytope::dimension() const { return affine_dimension(vertices_); }

bool RPolytope::contains(const RPoint& p) const {
    if (vertices_.empty()) return false;
    for (const auto& h : halfspaces_)
        if (!h.contains(p)) return false;
    return true;
}

bool RPolytope::contains_by_vertices(const RPoint& p) const {
    if (vertices_.empty()) return false;
    for (const auto& s : triangulate())
        if (in_simplex(p, s)) return true;
    return false;
}

RPolytope RPolytope::cut(const Halfspace& h) const {
    if (vertices_.empty()) return *this;
    std::vector<RPoint> inside, outside;
    std::vector<Rational> in_val, out_val;
    for (const auto& v : vertices_) {
        Rational val = dot(h.normal, v) - h.offset;
        if (val <= 0) {
            inside.push_back(v);
            in_val.push_back(val);
        } else {
            outside.push_back(v);
            out_val.push_back(val);
        }
    }
    if (outside.empty()) return *this;
    if (inside.empty()) return RPolytope(n_, {}, {});
    std::vector<Halfspace> hs = halfspaces_;
    hs.push_back(h);
    std::vector<RPoint> cand = inside;
    for (std::size_t i = 0; i < inside.size(); ++i) {
        if (in_val[i] == 0) continue;
        for (std::size_t j = 0; j < outside.size(); ++j) {
            // point where the value crosses zero along inside[i] -> outside[j]
            Rational t = in_val[i] / (in_val[i] - out_val[j]);
            cand.push_back(axpy(inside[i], t, sub(outside[j], inside[i])));
        }
    }
    std::sort(cand.begin(), cand.end(), lex_less);
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<RPoint> verts;
    for (auto& c : cand)
        if (is_vertex_of(c, hs, n_)) verts.push_back(std::move(c));
    return RPolytope(n_, std::move(verts), std::move(hs));
}

RPolytope RPolytope::intersect(const RPolytope& other) const {
    RPolytope p = *this;
    for (const auto& h : other.halfspaces_) {
        p = p.cut(h);
        if (p.empty()) break;
    }
    if (other.empty()) return RPolytope(n_, {}, {});
    return p;
}

std::vector<const Halfspace*> RPolytope::active_at(const RPoint& p) const {
    std::vector<const Halfspace*> out;
    for (const auto& h : halfspaces_)
        if (dot(h.normal, p) == h.offset) out.push_back(&h);
    return out;
}

std::vector<std::vector<RPoint>> RPolytope::triangulate() const {
    std::vector<std::vector<RPoint>> out;
    if (vertices_.empty()) return out;
    // Recursive pulling triangulation on vertex subsets (faces).
    std::function<void(const std::vector<RPoint>&, int, std::vector<RPoint>)> pull =
        [&](const std::vector<RPoint>& face, int d, std::vector<RPoint> apexes) {
            if (static_cast<int>(face.size()) == d + 1) {
                std::vector<RPoint> simplex = apexes;
                simplex.insert(simplex.end(), face.begin(), face.end());
                std::sort(simplex.begin(), simplex.end(), lex_less);
                out.push_back(std::move(simplex));
                return;
            }
            const RPoint& v = face.front();  // lexicographically smallest
            std::set<std::vector<RPoint>> seen;
            for (const auto& h : halfspaces_) {
                std::vector<RPoint> sub_face;
                bool has_v = false;
                for (const auto& p : face) {
                    if (dot(h.normal, p) == h.offset) {
                        sub_face.push_back(p);
                        if (p == v) has_v = true;
                    }
                }
                if (has_v || sub_face.empty()) continue;
                if (affine_dimension(sub_face) != d - 1) continue;
                if (!seen.insert(sub_face).second) continue;
                auto next = apexes;
                next.push_back(v);
                pull(sub_face, d - 1, std::move(next));
            }
        };
    pull(vertices_, dimension(), {});
    std::sort(out.begin(), out.end());
    return out;
}

Rational RPolytope::volume() const {
    if (vertices_.empty() || dimension() != static_cast<int>(n_)) return 0;
    Rational total = 0;
    Rational fact = 1;
    for (std::size_t k = 2; k <= n_; ++k) fact *= static_cast<long>(k);
    for (const auto& s : triangulate()) {
        RMatrix m;
        for (std::size_t k = 1; k < s.size(); ++k) m.push_back(sub(s[k], s[0]));
        total += abs_of(determinant(m));
    }
    return total / fact;
}

RPoint RPolytope::barycenter() const {
    RPoint c(n_, Rational(0));
    for (const auto& v : vertices_) c = add(c, v);
    return scale(c, Rational(1, static_cast<long>(vertices_.size())));
}

bool RPolytope::operator<(const RPolytope& o) const {
    return std::lexicographical_compare(vertices_.begin(), vertices_.end(), o.vertices_.begin(), o.vertices_.end(),
                                        lex_less);
}

std::optional<std::pair<Rational, Rational>> clip_parameters(const RPoint& a, const RPoint& b, const RPolytope& p) {
    if (p.empty()) return std::nullopt;
    Rational lo = 0, hi = 1;
    RVector d = sub(b, a);
    for (const auto& h : p.halfspaces()) {
        Rational nd = dot(h.normal, d);
        Rational s = h.slack(a);
        if (nd == 0) {
            if (s < 0) return std::nullopt;
        } else if (nd > 0) {
            hi = std::min(hi, Rational(s / nd));
        } else {
            lo = std::max(lo, Rational(s / nd));
        }
        if (lo > hi) return std::nullopt;
    }
    return std::make_pair(lo, hi);
}

SegmentClip segment_polytope_intersection(const RPoint& a, const RPoint& b, const RPolytope& p) {
    SegmentClip out;
    auto range = clip_parameters(a, b, p);
    if (!range) return out;
    RVector d = sub(b, a);
    out.a = axpy(a, range->first, d);
    if (range->first == range->second) {
        out.kind = SegmentClip::Kind::Point;
        return out;
    }
    out.kind = SegmentClip::Kind::Segment;
    out.b = axpy(a, range->second, d);
    return out;
}

}  // namespace mvss

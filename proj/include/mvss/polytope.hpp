#pragma once

#include "mvss/linalg.hpp"

#include <variant>
#include <vector>

namespace mvss {

/// normal . x <= offset
struct Halfspace {
    RVector normal;
    Rational offset;

    Rational slack(const RPoint& p) const { return offset - dot(normal, p); }
    bool contains(const RPoint& p) const { return dot(normal, p) <= offset; }
    bool operator==(const Halfspace&) const = default;
};

/// Rescale to a primitive integer normal (same halfspace).
Halfspace normalized(const Halfspace& h);

/// Bounded convex polytope with both representations kept in sync.
/// Vertices are the extreme points, sorted lexicographically; the halfspace
/// list may be redundant but always describes exactly the same set.
class RPolytope {
public:
    RPolytope() = default;

    static RPolytope cube(std::size_t n);
    static RPolytope from_vertices(std::vector<RPoint> pts, std::size_t n);
    /// Intersection of the unit cube with the given halfspaces.
    static RPolytope from_halfspaces(const std::vector<Halfspace>& hs, std::size_t n);
    static RPolytope point(const RPoint& p) { return from_vertices({p}, p.size()); }
    static RPolytope segment(const RPoint& a, const RPoint& b) { return from_vertices({a, b}, a.size()); }

    std::size_t ambient_dimension() const { return n_; }
    const std::vector<RPoint>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    bool empty() const { return vertices_.empty(); }
    /// Affine dimension, -1 when empty.
    int dimension() const;

    bool contains(const RPoint& p) const;
    /// Membership decided from the vertex description only (p in conv(V)),
    /// used to cross-check the halfspace description.
    bool contains_by_vertices(const RPoint& p) const;

    RPolytope cut(const Halfspace& h) const;
    RPolytope intersect(const RPolytope& other) const;

    /// Pulling triangulation from the lexicographically smallest vertex,
    /// recursively on faces. Each simplex is a list of dimension()+1 vertices.
    std::vector<std::vector<RPoint>> triangulate() const;
    /// dimension()-volume; only meaningful for full-dimensional polytopes
    /// (returns 0 otherwise).
    Rational volume() const;

    RPoint barycenter() const;
    /// Tight halfspaces at p.
    std::vector<const Halfspace*> active_at(const RPoint& p) const;

    bool operator==(const RPolytope& o) const { return n_ == o.n_ && vertices_ == o.vertices_; }
    bool operator<(const RPolytope& o) const;

private:
    RPolytope(std::size_t n, std::vector<RPoint> v, std::vector<Halfspace> h);
    void canonicalize();

    std::size_t n_ = 0;
    std::vector<RPoint> vertices_;
    std::vector<Halfspace> halfspaces_;
};

/// Result of clipping a segment by a polytope.
struct SegmentClip {
    enum class Kind { Empty, Point, Segment } kind = Kind::Empty;
    RPoint a;  // valid for Point and Segment
    RPoint b;  // valid for Segment
};

/// Exact classification of conv(a,b) ∩ p.
SegmentClip segment_polytope_intersection(const RPoint& a, const RPoint& b, const RPolytope& p);

/// Parameter interval {t in [0,1] : a + t (b - a) in p}; nullopt when empty.
std::optional<std::pair<Rational, Rational>> clip_parameters(const RPoint& a, const RPoint& b, const RPolytope& p);

}  // namespace mvss

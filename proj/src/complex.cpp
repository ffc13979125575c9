#include "mvss/complex.hpp"

#include <algorithm>

namespace mvss {

RSimplex::RSimplex(std::vector<RPoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("empty simplex");
    std::sort(vertices_.begin(), vertices_.end(), lex_less);
    if (affine_dimension(vertices_) != static_cast<int>(vertices_.size()) - 1)
        throw std::invalid_argument("simplex vertices are affinely dependent");
}

RPolytope RSimplex::polytope() const { return RPolytope::from_vertices(vertices_, ambient_dimension()); }

Rational RSimplex::volume() const {
    if (dimension() != ambient_dimension()) return 0;
    RMatrix m;
    for (std::size_t k = 1; k < vertices_.size(); ++k) m.push_back(sub(vertices_[k], vertices_[0]));
    Rational fact = 1;
    for (std::size_t k = 2; k <= dimension(); ++k) fact *= static_cast<long>(k);
    return abs_of(determinant(m)) / fact;
}

bool RSimplex::operator<(const RSimplex& o) const {
    return std::lexicographical_compare(vertices_.begin(), vertices_.end(), o.vertices_.begin(), o.vertices_.end(),
                                        lex_less);
}

Complex::Complex(std::size_t n, std::vector<RSimplex> cells) : n_(n), cells_(std::move(cells)) {
    for (const auto& c : cells_)
        if (c.ambient_dimension() != n_ || c.dimension() != n_)
            throw std::invalid_argument("complex cells must be full-dimensional simplices");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Complex Complex::from_polytopes(std::size_t n, const std::vector<RPolytope>& pieces) {
    std::vector<RSimplex> cells;
    for (const auto& p : pieces) {
        if (p.dimension() != static_cast<int>(n)) continue;
        for (auto& s : p.triangulate()) cells.emplace_back(std::move(s));
    }
    return Complex(n, std::move(cells));
}

Complex Complex::unit_cube(std::size_t n) { return from_polytopes(n, {RPolytope::cube(n)}); }

Rational Complex::volume() const {
    Rational v = 0;
    for (const auto& c : cells_) v += c.volume();
    return v;
}

bool Complex::covers(const RPoint& p) const {
    return std::any_of(cells_.begin(), cells_.end(), [&](const RSimplex& s) { return s.polytope().contains(p); });
}

std::vector<RPoint> Complex::vertex_set() const {
    std::vector<RPoint> out;
    for (const auto& c : cells_) out.insert(out.end(), c.vertices().begin(), c.vertices().end());
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Complex common_refinement(const Complex& a, const Complex& b) {
    if (a.dimension() != b.dimension()) throw RegionMismatch("complexes of different dimension");
    const std::size_t n = a.dimension();
    std::vector<RPolytope> pa, pb, pieces;
    for (const auto& c : a.cells()) pa.push_back(c.polytope());
    for (const auto& c : b.cells()) pb.push_back(c.polytope());
    Rational covered = 0;
    for (const auto& x : pa) {
        for (const auto& y : pb) {
            RPolytope z = x.intersect(y);
            if (z.dimension() != static_cast<int>(n)) continue;
            covered += z.volume();
            pieces.push_back(std::move(z));
        }
    }
    const Rational va = a.volume();
    if (va != b.volume() || covered != va) throw RegionMismatch("complexes cover different regions");
    return Complex::from_polytopes(n, pieces);
}

Complex split_by_hyperplane(const Complex& c, const RVector& normal, const Rational& offset) {
    const std::size_t n = c.dimension();
    std::vector<RSimplex> out;
    for (const auto& s : c.cells()) {
        bool below = false, above = false;
        for (const auto& v : s.vertices()) {
            int sg = (dot(normal, v) - offset).sign();
            below |= sg < 0;
            above |= sg > 0;
        }
        if (!(below && above)) {
            out.push_back(s);
            continue;
        }
        RPolytope p = s.polytope();
        for (const auto& half : {Halfspace{normal, offset}, Halfspace{scale(normal, -1), -offset}}) {
            RPolytope part = p.cut(half);
            if (part.dimension() != static_cast<int>(n)) continue;
            for (auto& t : part.triangulate()) out.emplace_back(std::move(t));
        }
    }
    return Complex(n, std::move(out));
}

}  // namespace mvss

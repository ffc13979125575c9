#pragma once

#include "mvss/polytope.hpp"

#include <stdexcept>
#include <vector>

namespace mvss {

/// k+1 affinely independent points, stored in lexicographic order.
class RSimplex {
public:
    explicit RSimplex(std::vector<RPoint> vertices);

    const std::vector<RPoint>& vertices() const { return vertices_; }
    std::size_t dimension() const { return vertices_.size() - 1; }
    std::size_t ambient_dimension() const { return vertices_.front().size(); }
    RPolytope polytope() const;
    Rational volume() const;  // dimension()-volume when dimension() == ambient

    bool operator==(const RSimplex&) const = default;
    bool operator<(const RSimplex& o) const;

private:
    std::vector<RPoint> vertices_;
};

struct RegionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pure n-dimensional simplicial complex; cells kept in canonical order.
class Complex {
public:
    Complex(std::size_t n, std::vector<RSimplex> cells);

    /// The cube as a complex: [0,1] for n = 1, otherwise the pulling
    /// triangulation of the cube.
    static Complex unit_cube(std::size_t n);
    /// Pulling triangulation of a family of full-dimensional polytopes that
    /// meet face to face.
    static Complex from_polytopes(std::size_t n, const std::vector<RPolytope>& pieces);

    std::size_t dimension() const { return n_; }
    const std::vector<RSimplex>& cells() const { return cells_; }
    Rational volume() const;
    bool covers(const RPoint& p) const;
    std::vector<RPoint> vertex_set() const;

    bool operator==(const Complex&) const = default;

private:
    std::size_t n_;
    std::vector<RSimplex> cells_;
};

/// Joint subdivision: every output cell lies in one cell of a and one of b.
/// Throws RegionMismatch if a and b cover different regions.
Complex common_refinement(const Complex& a, const Complex& b);

/// Every output cell lies in one closed halfspace of normal . x = offset.
Complex split_by_hyperplane(const Complex& c, const RVector& normal, const Rational& offset);

}  // namespace mvss

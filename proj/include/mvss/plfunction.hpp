#pragma once

#include "mvss/complex.hpp"
#include "mvss/formula.hpp"
#include "mvss/polytope.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace mvss {

/// x -> coeffs . x + constant, integer data only.
struct AffineMap {
    std::vector<Integer> coeffs;
    Integer constant;

    static AffineMap constant_map(std::size_t n, const Integer& c);
    static AffineMap coordinate(std::size_t n, std::size_t i);  // 0-based

    Rational operator()(const RPoint& p) const;
    Rational slope_along(const RVector& u) const;
    AffineMap operator+(const AffineMap& o) const;
    AffineMap operator-(const AffineMap& o) const;
    AffineMap operator*(const Integer& k) const;
    AffineMap plus_constant(const Integer& c) const;
    AffineMap negated() const;
    /// {x : this(x) <= t}
    Halfspace below(const Integer& t) const;
    bool operator==(const AffineMap&) const = default;
    bool operator<(const AffineMap& o) const;
};

/// Integer-scaled multiple of the rational affine form a . x + c, with the
/// same sign everywhere.
AffineMap integer_form(const RVector& a, const Rational& c);

struct Piece {
    RPolytope cell;
    AffineMap map;
    RPoint box_lo, box_hi;  // bounding box of the cell
    Rational volume;

    Piece(RPolytope c, AffineMap m);
    bool may_contain(const RPoint& p) const;
};

struct PLError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A McNaughton function on [0,1]^n: convex rational cells with disjoint
/// interiors covering the cube, one integer affine map per cell, continuous,
/// values in [0,1].
class PLFunction {
public:
    static PLFunction constant(std::size_t n, int value);  // 0 or 1
    static PLFunction projection(std::size_t n, std::size_t index);  // index 1-based
    /// max(0, min(1, form)) on the cube.
    static PLFunction clamped(const AffineMap& form);
    /// Validates coverage, continuity and range; throws PLError.
    static PLFunction from_pieces(std::size_t n, std::vector<Piece> pieces);

    std::size_t arity() const { return n_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    Rational operator()(const RPoint& p) const;
    /// First piece whose cell contains p, or nullptr outside the cube.
    const Piece* locate(const RPoint& p) const;
    /// Pulling triangulation of every cell.
    Complex triangulation() const;
    /// Merge interior-adjacent cells with equal maps whose union is convex.
    void merge_cells();

private:
    PLFunction(std::size_t n, std::vector<Piece> pieces);
    void sort_pieces();

    std::size_t n_ = 0;
    std::vector<Piece> pieces_;

    friend PLFunction make_unchecked(std::size_t n, std::vector<Piece> pieces);
};

struct ZeroLocus {
    std::size_t arity = 0;
    std::vector<RPolytope> cells;  // canonical order, none contained in another

    bool empty() const { return cells.empty(); }
    bool contains(const RPoint& p) const;
    static ZeroLocus from_cells(std::size_t n, std::vector<RPolytope> cells);
};

/// target ⊆ union of pieces, exact.
bool covered_by(const RPolytope& target, const std::vector<RPolytope>& pieces);
/// Equality of two finite unions of polytopes as point sets.
bool same_point_set(const std::vector<RPolytope>& a, const std::vector<RPolytope>& b);

PLFunction compile(const Formula& f, std::size_t n);

PLFunction mv_neg(const PLFunction& f);
PLFunction mv_oplus(const PLFunction& f, const PLFunction& g);
PLFunction mv_otimes(const PLFunction& f, const PLFunction& g);
PLFunction mv_min(const PLFunction& f, const PLFunction& g);
PLFunction mv_max(const PLFunction& f, const PLFunction& g);
PLFunction mv_implies(const PLFunction& f, const PLFunction& g);
/// min(1, k g); k = 0 gives the constant 0.
PLFunction truncated_multiple(const PLFunction& g, const Integer& k);

ZeroLocus zeroset(const PLFunction& f);

struct DirectionalDerivative {
    Rational value;
    /// Largest t with x + s u inside one cell for all s in [0, t].
    Rational exit;
};

struct DirectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One-sided derivative lim_{t->0+} (f(x + t u) - f(x)) / t.
DirectionalDerivative derivative_along(const PLFunction& f, const RPoint& x, const RVector& u);
Rational directional_derivative(const PLFunction& f, const RPoint& x, const RVector& u);

/// g with zeroset(g) = conv(x, y); verified, throws PLError on failure.
PLFunction segment_zero_function(const RPoint& x, const RPoint& y);
/// j with zeroset(j) = {x}; verified.
PLFunction point_zero_function(const RPoint& x);

/// f <= g on every region polytope, decided at vertices of the joint refinement.
bool pl_leq(const PLFunction& f, const PLFunction& g, const std::vector<RPolytope>& region);
bool pl_leq(const PLFunction& f, const PLFunction& g);  // on the whole cube
/// First point of the region where f > g, if any.
std::optional<RPoint> pl_leq_violation(const PLFunction& f, const PLFunction& g, const std::vector<RPolytope>& region);
/// Semantic equality on the cube.
bool pl_equal(const PLFunction& f, const PLFunction& g);

}  // namespace mvss

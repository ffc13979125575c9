#pragma once

#include "mvss/plfunction.hpp"
#include "mvss/polynomial.hpp"
#include "mvss/polytope.hpp"
#include "mvss/quadratic.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace mvss {

using Index = std::int64_t;

/// Coordinate differences d_j(i) = num[j](i) / den[j](i).
struct RationalSchema {
    std::vector<Poly> num, den;
};

/// Integer sequence s with s(i+1) = a s(i) + b s(i-1), given by its values
/// at the start index and the one after.
struct BaseSequence {
    Integer first, second;
};

/// Coordinate differences d_j(i) = coeff[j] * prod_k s_k(i)^exponents[j][k],
/// all base sequences sharing one order-2 recurrence.
struct RecurrenceSchema {
    Integer a, b;
    std::vector<BaseSequence> bases;
    std::vector<Rational> coeff;
    std::vector<std::vector<int>> exponents;
};

using Schema = std::variant<RationalSchema, RecurrenceSchema>;

class ProbeSequence {
public:
    ProbeSequence(RPoint limit, Index start, Schema schema);

    const RPoint& limit() const { return limit_; }
    Index start() const { return start_; }
    const Schema& schema() const { return schema_; }
    std::size_t arity() const { return limit_.size(); }
    bool is_rational_schema() const { return std::holds_alternative<RationalSchema>(schema_); }

    /// d(i) = w_i - limit, i >= start.
    RVector difference(Index i) const;
    RPoint term(Index i) const { return add(limit_, difference(i)); }
    /// Differences for start+offset, ..., start+offset+count-1 in one pass.
    std::vector<RVector> differences(Index first, std::size_t count) const;

    /// Index from which every coordinate of d has constant sign and ||d|| is
    /// strictly decreasing. nullopt when no certificate could be produced
    /// (recurrences without a real dominant root).
    const std::optional<Index>& tail_index() const { return tail_; }

    /// Recurrence schema with a tail certificate: every base ratio
    /// s_k(i+1)/s_k(i) lies in this positive interval for i >= tail_index().
    const std::optional<std::pair<Rational, Rational>>& ratio_interval() const { return interval_; }

    /// Values s_k(i) of the recurrence bases (recurrence schema only).
    std::vector<Integer> base_values(Index i) const;

private:
    void validate_rational();
    void validate_recurrence();

    RPoint limit_;
    Index start_;
    Schema schema_;
    std::optional<Index> tail_;
    std::optional<std::pair<Rational, Rational>> interval_;
};

struct ClosedSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptySetError : ClosedSetError {
    using ClosedSetError::ClosedSetError;
};

enum class Tri { No, Yes, Unknown };

struct PointOfSet {
    enum class Source { PolytopeVertex, Limit, Term };
    RPoint point;
    Source source;
    std::size_t index;  // polytope or sequence index
    Index term = 0;     // sequence index i for Term
};

class ClosedSetDesc {
public:
    /// Validates everything; throws EmptySetError for an empty description
    /// and ClosedSetError for anything outside the cube or malformed.
    ClosedSetDesc(std::size_t n, std::vector<RPolytope> polytopes, std::vector<ProbeSequence> sequences);

    std::size_t arity() const { return n_; }
    const std::vector<RPolytope>& polytopes() const { return polys_; }
    const std::vector<ProbeSequence>& sequences() const { return seqs_; }
    bool polyhedral() const { return seqs_.empty(); }

    static constexpr Index default_horizon = 1000000;

private:
    std::size_t n_;
    std::vector<RPolytope> polys_;
    std::vector<ProbeSequence> seqs_;
};

Tri membership(const ClosedSetDesc& x, const RPoint& p, Index horizon = ClosedSetDesc::default_horizon);
Tri sequence_contains(const ProbeSequence& s, const RPoint& p, Index horizon = ClosedSetDesc::default_horizon);

/// Polytope vertices, then per sequence its limit and the terms
/// start .. start+budget-1.
std::vector<PointOfSet> enumerate_points(const ClosedSetDesc& x, std::size_t budget);

ZeroLocus zero_locus_of_basis(const std::vector<PLFunction>& fs);

/// Polyhedral closed set from a zero locus (throws EmptySetError when empty).
ClosedSetDesc closed_set_from_locus(const ZeroLocus& z);

}  // namespace mvss

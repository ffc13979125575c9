#pragma once

#include "mvss/closed_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mvss {

/// Circular cone with apex x, axis u (any positive scaling), height eps and
/// half-angle delta given by its cosine.
struct Cone {
    RPoint apex;
    RVector axis;
    Rational height;
    Rational cos_half_angle;
};

bool cone_contains(const Cone& c, const RPoint& p);

struct ConeCount {
    enum class Kind { AtLeast, Exactly, Unknown } kind = Kind::Exactly;
    std::size_t count = 0;  // AtLeast: the requested minimum; Unknown: points found so far
    std::string note;
};

/// Points of X other than the apex inside the cone.
ConeCount count_in_cone(const ClosedSetDesc& x, const Cone& c, std::size_t min_count);

struct DirectionVerdict {
    enum class Kind { Rational, Irrational, Undetermined } kind = Kind::Undetermined;
    /// Rational: primitive integer representative, orientation of the
    /// sequence preserved.
    RVector u;
    /// Irrational: direction coordinates in Q(sqrt d), scaled so that the
    /// first dominant coordinate is +-1.
    std::vector<QuadNum> symbolic;
    Poly characteristic;            // lambda^2 - a lambda - b
    std::string root_test;          // rational-root test transcript
    std::size_t ratio_coordinate = 0;       // 0-based coordinate whose ratio is irrational
    std::vector<Rational> ratio_min_poly;   // monic, ascending
    std::string reason;             // Undetermined
};

DirectionVerdict limit_direction(const ProbeSequence& s);

struct Outgoing {
    enum class Kind { Yes, No, AllAligned, Undetermined, NotApplicable } kind = Kind::NotApplicable;
    Rational lambda;                // Yes
    std::optional<RPoint> blocker;  // No: a point of X on every initial segment
    std::optional<Index> index;     // No / AllAligned: sequence index of a blocking term
    std::string note;
};

/// Outgoing test for the ray x + t u, t in (0, lambda], lambda <= lambda_max
/// and the segment kept inside the cube.
Outgoing is_outgoing(const ClosedSetDesc& x, const RPoint& apex, const RVector& u,
                     const Rational& lambda_max = Rational(1, 2));

struct TangentWitness {
    RPoint x;
    DirectionVerdict direction;
    Outgoing outgoing;
    std::size_t sequence_index = 0;
};

std::vector<TangentWitness> tangent_report(const ClosedSetDesc& x, const Rational& lambda_max = Rational(1, 2));

/// "lambda^2 - 2lambda - 1" style rendering with the given variable.
std::string poly_text(const Poly& p, const std::string& var);
std::string rational_poly_text(const std::vector<Rational>& ascending, const std::string& var);

}  // namespace mvss

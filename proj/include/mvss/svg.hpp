#pragma once

#include "mvss/closed_set.hpp"
#include "mvss/decision.hpp"
#include "mvss/tangent.hpp"

#include <string>
#include <vector>

namespace mvss {

/// Picture of a two-variable set: polytope parts, the first 50 terms of each
/// sequence, tangent rays with one illustrative cone each, and the witness
/// segment when given. Throws ArityError unless x.arity() == 2.
std::string render_svg(const ClosedSetDesc& x, const std::vector<TangentWitness>& report,
                       const NotSssWitness* witness = nullptr);

}  // namespace mvss

#pragma once

#include "mvss/document.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mvss {

/// Re-runs the exact checks behind a certificate record (no search). The
/// records it references are looked up in doc; set overrides the closedset
/// named by the certificate. Returns the failed checks, empty when valid.
std::vector<std::string> verify_certificate(const Document& doc, const Record& cert,
                                            const std::optional<ClosedSetDesc>& set = std::nullopt);

}  // namespace mvss

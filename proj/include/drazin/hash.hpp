#pragma once

#include <string>

#include "drazin/matrix.hpp"

namespace drazin {

/// Canonical serialization of a matrix (shape plus shortest round-trip decimal
/// form of every component, row-major). Stable across runs.
std::string canonical_serialization(const Matrix& a);

/// SHA-256 of the canonical serialization, truncated to the first 16 hex
/// characters; the stable case identity used in reports and error messages.
std::string canonical_hash(const Matrix& a);

}  // namespace drazin

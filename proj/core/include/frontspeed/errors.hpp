#pragma once

#include <stdexcept>
#include <string>

namespace frontspeed {

/// A theorem hypothesis required by a sweep or solver is not satisfied by
/// the supplied medium. Callers may waive it explicitly where an oracle
/// needs a degenerate input.
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric failure (non-convergence, stability bound violated, ...).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration or medium document (schema violation). The
/// message names the offending field path.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace frontspeed

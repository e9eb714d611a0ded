// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aspu {

/// Enumeration budgets for the exhaustive backends. `ASPU_MAX_ATOMS` (env)
/// overrides both atom-count caps at startup.
struct Limits {
  std::size_t g3_universe_cap = 14;       // 3^14 interpretations
  std::size_t solve_signature_cap = 8;    // 3^8 candidate literal sets
  std::size_t assumption_cap = 24;        // 2^24 reduct guesses (ELP solver)
  std::size_t equilibrium_subset_cap = 20;  // 2^20 "here" worlds per candidate
};

Limits& global_limits();

/// Thrown when an enumeration would exceed its cap; carries the offending size.
struct LimitError : std::runtime_error {
  LimitError(const std::string& what, std::size_t size)
      : std::runtime_error(what), size(size) {}
  std::size_t size;
};

}  // namespace aspu

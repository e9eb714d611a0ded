// SPDX-License-Identifier: MIT
#include "aspu/limits.hpp"

#include <cstdlib>

namespace aspu {

namespace {

Limits make_default() {
  Limits lim;
  if (const char* env = std::getenv("ASPU_MAX_ATOMS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) {
      lim.g3_universe_cap = static_cast<std::size_t>(v);
      lim.solve_signature_cap = static_cast<std::size_t>(v);
    }
  }
  return lim;
}

}  // namespace

Limits& global_limits() {
  static Limits lim = make_default();
  return lim;
}

}  // namespace aspu

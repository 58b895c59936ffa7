#pragma once

#include <cstdint>

namespace addtrip {

/// A problem instance (p, s, t): |A| = s and |B| = t inside Z_p.
struct Params {
  std::uint32_t p = 3;
  std::uint32_t s = 1;
  std::uint32_t t = 1;
  bool prime = true;

  /// Validates p odd in [3, 2^31 - 1] and 1 <= s, t <= p - 1.
  /// Throws InvalidModulus or DomainError.
  static Params make(std::int64_t p, std::int64_t s, std::int64_t t);

  friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace addtrip

#include "addtrip/params.hpp"

#include <string>

#include "addtrip/errors.hpp"
#include "addtrip/residue_set.hpp"

namespace addtrip {

Params Params::make(std::int64_t p, std::int64_t s, std::int64_t t) {
  const auto modulus = checked_modulus(p);
  if (s < 1 || s > p - 1 || t < 1 || t > p - 1) {
    throw DomainError("need 1 <= s, t <= p - 1; got p = " + std::to_string(p) +
                      ", s = " + std::to_string(s) + ", t = " + std::to_string(t));
  }
  return Params{modulus, static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t),
                is_prime(p)};
}

}  // namespace addtrip

#include "addtrip/bounds.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "addtrip/errors.hpp"
#include "addtrip/params.hpp"
#include "addtrip/triple_count.hpp"

namespace addtrip {

namespace {

void check_params(std::int64_t p, std::int64_t s, std::int64_t t) {
  checked_modulus(p);
  if (s < 1 || s > p - 1 || t < 1 || t > p - 1) {
    throw DomainError("need 1 <= s, t <= p - 1; got p = " + std::to_string(p) +
                      ", s = " + std::to_string(s) + ", t = " + std::to_string(t));
  }
}

void check_schur_range(std::int64_t p, std::int64_t s) {
  checked_modulus(p);
  if (s < 1 || s > p - 1) {
    throw DomainError("need 1 <= s <= p - 1; got p = " + std::to_string(p) +
                      ", s = " + std::to_string(s));
  }
}

}  // namespace

std::int64_t lower_bound_f(std::int64_t p, std::int64_t s, std::int64_t t) {
  check_params(p, s, t);
  const std::int64_t two_t = 2 * t;
  if (two_t <= p - s + 1) return 0;
  if (two_t <= p + s - 2) {
    const std::int64_t d = s + two_t - p;
    return floor_div(d * d, 4);
  }
  return s * (two_t - p);
}

std::int64_t upper_bound_g(std::int64_t p, std::int64_t s, std::int64_t t) {
  check_params(p, s, t);
  const std::int64_t two_t = 2 * t;
  if (two_t <= s) return t * t;
  if (two_t <= 2 * p - s - 1) return ceil_div(s * (4 * t - s), 4);
  return s * (two_t - p) + (p - t) * (p - t);
}

BoundsResult compute_bounds(std::int64_t p, std::int64_t s, std::int64_t t) {
  const auto params = Params::make(p, s, t);
  return BoundsResult{p, s, t, lower_bound_f(p, s, t), upper_bound_g(p, s, t), params.prime};
}

std::int64_t schur_lower_f_s(std::int64_t p, std::int64_t s) {
  check_schur_range(p, s);
  if (3 * s <= p + 1) return 0;
  const std::int64_t d = 3 * s - p;
  return floor_div(d * d, 4);
}

std::int64_t schur_upper_g_s(std::int64_t p, std::int64_t s) {
  check_schur_range(p, s);
  if (3 * s <= 2 * p + 1) return ceil_div(3 * s * s, 4);
  return s * (2 * s - p) + (p - s) * (p - s);
}

std::int64_t pollard_lower_at_j(std::int64_t p, std::int64_t s, std::int64_t t, std::int64_t j) {
  check_params(p, s, t);
  if (j < 1 || j > std::min(s, t)) {
    throw DomainError("need 1 <= j <= min(s, t); got j = " + std::to_string(j));
  }
  return j * std::min(p, s + t - j) - j * (p - t);
}

InequalityWitness cauchy_davenport_check(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  if (!is_prime(a.modulus())) {
    throw ContractViolation("Cauchy-Davenport needs a prime modulus, got " +
                            std::to_string(a.modulus()));
  }
  if (a.is_empty() || b.is_empty()) {
    throw ContractViolation("Cauchy-Davenport needs non-empty sets");
  }
  const auto lhs = static_cast<std::int64_t>(sumset(a, b).size());
  const auto rhs = std::min<std::int64_t>(a.modulus(),
                                          static_cast<std::int64_t>(a.size() + b.size()) - 1);
  return {lhs >= rhs, lhs, rhs};
}

namespace {

void require_prime_modulus(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  if (!is_prime(a.modulus())) {
    throw ContractViolation("Pollard's inequality needs a prime modulus, got " +
                            std::to_string(a.modulus()));
  }
}

std::vector<InequalityWitness> pollard_prefix(const ResidueSet& a, const ResidueSet& b,
                                              std::int64_t j_max) {
  const auto s = static_cast<std::int64_t>(a.size());
  const auto t = static_cast<std::int64_t>(b.size());
  const auto dec = layers(a, b);
  std::vector<InequalityWitness> out;
  out.reserve(static_cast<std::size_t>(j_max));
  std::int64_t lhs = 0;
  for (std::int64_t j = 1; j <= j_max; ++j) {
    if (j <= static_cast<std::int64_t>(dec.layers.size())) {
      lhs += static_cast<std::int64_t>(dec.layers[static_cast<std::size_t>(j - 1)].size());
    }
    const std::int64_t rhs = j * std::min<std::int64_t>(a.modulus(), s + t - j);
    out.push_back({lhs >= rhs, lhs, rhs});
  }
  return out;
}

}  // namespace

InequalityWitness pollard_check(const ResidueSet& a, const ResidueSet& b, std::int64_t j) {
  require_prime_modulus(a, b);
  const auto s = static_cast<std::int64_t>(a.size());
  const auto t = static_cast<std::int64_t>(b.size());
  if (j < 1 || j > std::min(s, t)) {
    throw DomainError("need 1 <= j <= min(|A|, |B|); got j = " + std::to_string(j));
  }
  return pollard_prefix(a, b, j).back();
}

std::vector<InequalityWitness> pollard_check_all(const ResidueSet& a, const ResidueSet& b) {
  require_prime_modulus(a, b);
  if (a.is_empty() || b.is_empty()) return {};
  return pollard_prefix(a, b, static_cast<std::int64_t>(std::min(a.size(), b.size())));
}

}  // namespace addtrip

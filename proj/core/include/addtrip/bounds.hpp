#pragma once

#include <cstdint>
#include <vector>

#include "addtrip/residue_set.hpp"

namespace addtrip {

/// The extremal interval [f, g] for r(A, B, B) with |A| = s, |B| = t.
struct BoundsResult {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t f = 0;
  std::int64_t g = 0;
  /// The bounds are theorems only for prime p. For composite p they are
  /// still computed but may be violated.
  bool guaranteed = false;
};

// Every case split below is written as an inequality on 2t, never on t.

/// f(s, t): 0, floor((s + 2t - p)^2 / 4), or s(2t - p).
std::int64_t lower_bound_f(std::int64_t p, std::int64_t s, std::int64_t t);

/// g(s, t): t^2, ceil(s(4t - s) / 4), or s(2t - p) + (p - t)^2.
std::int64_t upper_bound_g(std::int64_t p, std::int64_t s, std::int64_t t);

BoundsResult compute_bounds(std::int64_t p, std::int64_t s, std::int64_t t);

/// Minimum number of Schur triples r(A, A, A) over |A| = s.
std::int64_t schur_lower_f_s(std::int64_t p, std::int64_t s);

/// Maximum number of Schur triples r(A, A, A) over |A| = s.
std::int64_t schur_upper_g_s(std::int64_t p, std::int64_t s);

/// j * min(p, s + t - j) - j * (p - t), the lower bound on r(A, B, B) obtained
/// from the first j layer sets. Requires 1 <= j <= min(s, t).
std::int64_t pollard_lower_at_j(std::int64_t p, std::int64_t s, std::int64_t t, std::int64_t j);

/// Both sides of an inequality lhs >= rhs.
struct InequalityWitness {
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// |A + B| >= min(p, |A| + |B| - 1). Throws ContractViolation for composite p
/// or an empty operand.
InequalityWitness cauchy_davenport_check(const ResidueSet& a, const ResidueSet& b);

/// sum_{i <= j} |S_i| >= j * min(p, s + t - j). Throws ContractViolation for
/// composite p and DomainError unless 1 <= j <= min(|A|, |B|).
InequalityWitness pollard_check(const ResidueSet& a, const ResidueSet& b, std::int64_t j);

/// pollard_check for every j in [1, min(|A|, |B|)] from one layer decomposition.
/// Element j - 1 is the witness for j.
std::vector<InequalityWitness> pollard_check_all(const ResidueSet& a, const ResidueSet& b);

/// Integer helpers, exact for any sign of the numerator.
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  return (num % den != 0 && ((num < 0) != (den < 0))) ? q - 1 : q;
}
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  return -floor_div(-num, den);
}

}  // namespace addtrip

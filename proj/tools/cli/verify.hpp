#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "addtrip/residue_set.hpp"

namespace addtrip::cli {

/// Tally for one property on one modulus.
struct PropertyTally {
  std::uint32_t p = 0;
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// True when the property is a theorem only for primes and p is composite.
  bool excluded = false;
};

/// A violated property, after shrinking (A, B) element by element while it
/// still fails.
struct PropertyFailure {
  std::uint32_t p = 0;
  std::string property;
  ResidueSet a;
  ResidueSet b;
  std::string detail;
};

struct SuiteResult {
  std::vector<PropertyTally> tallies;
  std::optional<PropertyFailure> first_failure;

  bool passed() const noexcept { return !first_failure.has_value(); }
};

/// Property names, in reporting order.
inline constexpr const char* kFourWayAgreement = "four_way_agreement";
inline constexpr const char* kComplementIdentity = "complement_identity";
inline constexpr const char* kCauchyDavenport = "cauchy_davenport";
inline constexpr const char* kPollard = "pollard";
inline constexpr const char* kBoundSandwich = "bound_sandwich";

/// Uniform integer in [0, n) by rejection, identical on every platform for a
/// given engine state.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// A random s-subset of Z_p.
ResidueSet random_subset(std::mt19937_64& rng, std::uint32_t p, std::uint32_t s);

/// Runs `trials` random (A, B) pairs with 1 <= |A|, |B| <= p - 1 against every
/// property. Prime-only properties are skipped (and flagged excluded) for
/// composite p.
SuiteResult run_property_suite(std::uint32_t p, std::uint64_t trials, std::mt19937_64& rng);

/// Runs the suite for each modulus in turn from one engine seeded with `seed`.
SuiteResult run_property_suites(const std::vector<std::uint32_t>& moduli, std::uint64_t trials,
                                std::uint64_t seed);

}  // namespace addtrip::cli

#include "verify.hpp"

#include <functional>
#include <numeric>

#include "addtrip/bounds.hpp"
#include "addtrip/triple_count.hpp"

namespace addtrip::cli {

namespace {

// Returns an empty string when the property holds, else a description.
using Property = std::function<std::string(const ResidueSet&, const ResidueSet&)>;

std::string check_four_way(const ResidueSet& a, const ResidueSet& b) {
  const auto naive = count_naive(a, b);
  const auto shift = count_shift(a, b);
  const auto lay = count_layers(a, b);
  const auto conv = count_convolution(a, b);
  if (naive == shift && naive == lay && naive == conv) return {};
  return "naive=" + std::to_string(naive) + " shift=" + std::to_string(shift) +
         " layers=" + std::to_string(lay) + " convolution=" + std::to_string(conv);
}

std::string check_complement(const ResidueSet& a, const ResidueSet& b) {
  const auto lhs = count_naive(a, b) + count_naive(complement(a), complement(b));
  const auto rhs = complement_identity_rhs(a.modulus(), static_cast<std::int64_t>(a.size()),
                                           static_cast<std::int64_t>(b.size()));
  if (lhs == rhs) return {};
  return "r(A,B,B)+r(~A,~B,~B)=" + std::to_string(lhs) + " expected " + std::to_string(rhs);
}

std::string check_cauchy_davenport(const ResidueSet& a, const ResidueSet& b) {
  const auto w = cauchy_davenport_check(a, b);
  if (w.holds) return {};
  return "|A+B|=" + std::to_string(w.lhs) + " < " + std::to_string(w.rhs);
}

std::string check_pollard(const ResidueSet& a, const ResidueSet& b) {
  const auto all = pollard_check_all(a, b);
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (!all[j].holds) {
      return "j=" + std::to_string(j + 1) + ": " + std::to_string(all[j].lhs) + " < " +
             std::to_string(all[j].rhs);
    }
  }
  return {};
}

std::string check_sandwich(const ResidueSet& a, const ResidueSet& b) {
  const auto p = static_cast<std::int64_t>(a.modulus());
  const auto s = static_cast<std::int64_t>(a.size());
  const auto t = static_cast<std::int64_t>(b.size());
  const auto r = count_naive(a, b);
  const auto f = lower_bound_f(p, s, t);
  const auto g = upper_bound_g(p, s, t);
  if (f <= r && r <= g) return {};
  return "r=" + std::to_string(r) + " outside [" + std::to_string(f) + ", " + std::to_string(g) + "]";
}

// Greedily drops elements while the property keeps failing and both sets
// stay within 1 <= size <= p - 1.
PropertyFailure shrink(const Property& property, std::string name, ResidueSet a, ResidueSet b,
                       std::string detail) {
  const auto p = a.modulus();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int which = 0; which < 2 && !progress; ++which) {
      const ResidueSet& cur = which == 0 ? a : b;
      if (cur.size() <= 1) continue;
      for (const auto x : cur.elements()) {
        std::vector<std::int64_t> rest;
        for (const auto y : cur.elements()) {
          if (y != x) rest.push_back(y);
        }
        auto smaller = ResidueSet::make(p, rest);
        const auto& na = which == 0 ? smaller : a;
        const auto& nb = which == 0 ? b : smaller;
        auto d = property(na, nb);
        if (!d.empty()) {
          detail = std::move(d);
          if (which == 0) {
            a = std::move(smaller);
          } else {
            b = std::move(smaller);
          }
          progress = true;
          break;
        }
      }
    }
  }
  return PropertyFailure{p, std::move(name), std::move(a), std::move(b), std::move(detail)};
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

ResidueSet random_subset(std::mt19937_64& rng, std::uint32_t p, std::uint32_t s) {
  std::vector<std::int64_t> pool(p);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::uint32_t i = 0; i < s; ++i) {
    const auto j = i + uniform_below(rng, p - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(s);
  return ResidueSet::make(p, pool);
}

SuiteResult run_property_suite(std::uint32_t p, std::uint64_t trials, std::mt19937_64& rng) {
  const bool prime = is_prime(p);
  struct Entry {
    const char* name;
    Property check;
    bool prime_only;
  };
  const std::vector<Entry> entries = {
      {kFourWayAgreement, check_four_way, false},
      {kComplementIdentity, check_complement, false},
      {kCauchyDavenport, check_cauchy_davenport, true},
      {kPollard, check_pollard, true},
      {kBoundSandwich, check_sandwich, true},
  };

  SuiteResult result;
  for (const auto& e : entries) {
    result.tallies.push_back(PropertyTally{p, e.name, 0, 0, e.prime_only && !prime});
  }
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const auto s = static_cast<std::uint32_t>(1 + uniform_below(rng, p - 1));
    const auto t = static_cast<std::uint32_t>(1 + uniform_below(rng, p - 1));
    const auto a = random_subset(rng, p, s);
    const auto b = random_subset(rng, p, t);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      auto& tally = result.tallies[i];
      if (tally.excluded) continue;
      ++tally.checked;
      auto detail = entries[i].check(a, b);
      if (detail.empty()) continue;
      ++tally.violations;
      if (!result.first_failure) {
        result.first_failure = shrink(entries[i].check, entries[i].name, a, b, std::move(detail));
      }
    }
  }
  return result;
}

SuiteResult run_property_suites(const std::vector<std::uint32_t>& moduli, std::uint64_t trials,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteResult all;
  for (const auto p : moduli) {
    auto one = run_property_suite(p, trials, rng);
    all.tallies.insert(all.tallies.end(), one.tallies.begin(), one.tallies.end());
    if (!all.first_failure && one.first_failure) all.first_failure = std::move(one.first_failure);
  }
  return all;
}

}  // namespace addtrip::cli

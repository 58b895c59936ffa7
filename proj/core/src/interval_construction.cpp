#include "addtrip/interval_construction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "addtrip/bounds.hpp"
#include "addtrip/errors.hpp"
#include "addtrip/params.hpp"
#include "addtrip/triple_count.hpp"

namespace addtrip {

namespace {

void check_length(std::int64_t p, std::int64_t t) {
  checked_modulus(p);
  if (t < 1 || t > p - 1) {
    throw DomainError("interval length must satisfy 1 <= t <= p - 1; got t = " +
                      std::to_string(t));
  }
}

void check_lemma_range(std::int64_t u, std::int64_t n) {
  if (u < 1 || n < 1 || n > 2 * u - 1) {
    throw DomainError("need 1 <= n <= 2u - 1; got u = " + std::to_string(u) +
                      ", n = " + std::to_string(n));
  }
}

// Prefix tallies over values [0, v): how many elements and their total.
struct PrefixTable {
  std::vector<std::int64_t> count;
  std::vector<std::int64_t> sum;

  explicit PrefixTable(const std::vector<std::int64_t>& counts)
      : count(counts.size() + 1, 0), sum(counts.size() + 1, 0) {
    for (std::size_t v = 0; v < counts.size(); ++v) {
      count[v + 1] = count[v] + counts[v];
      sum[v + 1] = sum[v] + static_cast<std::int64_t>(v) * counts[v];
    }
  }

  // Sum of the k smallest elements among values [0, limit). Requires k <= count[limit].
  std::int64_t min_sum(std::size_t limit, std::int64_t k) const {
    // Largest x <= limit with count[x] <= k.
    const auto it = std::upper_bound(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(limit) + 1, k);
    const auto x = static_cast<std::size_t>(it - count.begin()) - 1;
    return sum[x] + (k - count[x]) * static_cast<std::int64_t>(x);
  }

  // Sum of the k largest elements among values [0, limit). Requires k <= count[limit].
  std::int64_t max_sum(std::size_t limit, std::int64_t k) const {
    // Smallest y with count[limit] - count[y] <= k.
    const std::int64_t need = count[limit] - k;
    const auto it = std::lower_bound(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(limit) + 1, need);
    const auto y = static_cast<std::size_t>(it - count.begin());
    const std::int64_t taken = count[limit] - count[y];
    const std::int64_t extra = y == 0 ? 0 : (k - taken) * static_cast<std::int64_t>(y - 1);
    return sum[limit] - sum[y] + extra;
  }
};

}  // namespace

std::int64_t ShiftProfile::floor_value() const noexcept {
  return 2 * static_cast<std::int64_t>(t) <= static_cast<std::int64_t>(p) - 1
             ? 0
             : 2 * static_cast<std::int64_t>(t) - p;
}

std::int64_t ShiftProfile::total_count() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t ShiftProfile::weighted_sum() const noexcept {
  std::int64_t total = 0;
  for (std::size_t v = 0; v < counts.size(); ++v) total += static_cast<std::int64_t>(v) * counts[v];
  return total;
}

std::int64_t shift_overlap_interval(std::int64_t p, std::int64_t t, std::int64_t a) {
  check_length(p, t);
  std::int64_t r = a % p;
  if (r < 0) r += p;
  const std::int64_t sym = std::min(r, p - r);
  if (2 * t <= p - 1) return std::max<std::int64_t>(0, t - sym);
  return std::max(t - sym, 2 * t - p);
}

ShiftProfile build_shift_profile(std::int64_t p, std::int64_t t) {
  check_length(p, t);
  ShiftProfile profile{static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(t),
                       std::vector<std::int64_t>(static_cast<std::size_t>(t) + 1, 0)};
  for (std::int64_t a = 0; a < p; ++a) {
    ++profile.counts[static_cast<std::size_t>(shift_overlap_interval(p, t, a))];
  }
  if (profile.total_count() != p || profile.weighted_sum() != t * t) {
    throw InvariantViolation("shift profile for p = " + std::to_string(p) + ", t = " +
                             std::to_string(t) + " fails its sum invariants");
  }
  return profile;
}

std::int64_t partial_sum_smallest(std::int64_t u, std::int64_t n) {
  check_lemma_range(u, n);
  return floor_div((n + 1) * (n + 1), 4);
}

std::int64_t partial_sum_largest(std::int64_t u, std::int64_t n) {
  check_lemma_range(u, n);
  return ceil_div(n * (4 * u - n), 4);
}

std::pair<std::int64_t, std::int64_t> extreme_sums(std::int64_t p, std::int64_t s,
                                                   std::int64_t t) {
  Params::make(p, s, t);
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  if (2 * t <= p - 1) {
    // M = {0 x (p - 2t + 1)} + {1, 1, ..., t-1, t-1, t}.
    const std::int64_t zeros = p - 2 * t + 1;
    r1 = s <= zeros ? 0 : partial_sum_smallest(t, s - zeros);
    r2 = s <= 2 * t - 1 ? partial_sum_largest(t, s) : t * t;
  } else {
    // M = {(2t - p) x (2t - p + 1)} + (2t - p) + {1, 1, ..., p-t-1, p-t-1, p-t}.
    const std::int64_t base = 2 * t - p;
    const std::int64_t floors = 2 * t - p + 1;
    r1 = s <= floors ? s * base : s * base + partial_sum_smallest(p - t, s - floors);
    r2 = s <= 2 * p - 2 * t - 1 ? partial_sum_largest(t, s) : s * base + (p - t) * (p - t);
  }
  return {r1, r2};
}

Selection select_multisubset(const ShiftProfile& profile, std::int64_t s, std::int64_t r) {
  const auto& counts = profile.counts;
  const PrefixTable table(counts);
  const std::size_t top = counts.size();
  if (s < 0 || s > table.count[top]) {
    throw DomainError("cannot choose " + std::to_string(s) + " elements from a multiset of size " +
                      std::to_string(table.count[top]));
  }
  const std::int64_t r1 = table.min_sum(top, s);
  const std::int64_t r2 = table.max_sum(top, s);
  if (r < r1 || r > r2) throw UnattainableTarget(r, r1, r2);

  Selection selection(top, 0);
  std::int64_t balls = s;
  std::int64_t target = r;
  for (std::size_t v = top; v-- > 0;) {
    const auto value = static_cast<std::int64_t>(v);
    // After taking c copies of v, the rest must come from values below v.
    const std::int64_t below = table.count[v];
    for (std::int64_t c = std::min(counts[v], balls); c >= 0; --c) {
      const std::int64_t rest = balls - c;
      const std::int64_t rest_target = target - c * value;
      if (rest > below) break;
      if (rest_target < 0) continue;
      if (table.min_sum(v, rest) <= rest_target && rest_target <= table.max_sum(v, rest)) {
        selection[v] = c;
        balls = rest;
        target = rest_target;
        break;
      }
    }
  }
  if (balls != 0 || target != 0) {
    throw InvariantViolation("multi-subset selection did not reach its target");
  }
  return selection;
}

ResidueSet realize_set(const Selection& selection, std::int64_t p, std::int64_t t) {
  const auto profile = build_shift_profile(p, t);
  if (selection.size() != profile.counts.size()) {
    throw DomainError("selection must have t + 1 entries");
  }
  for (std::size_t v = 0; v < selection.size(); ++v) {
    if (selection[v] < 0 || selection[v] > profile.counts[v]) {
      throw DomainError("selection takes " + std::to_string(selection[v]) + " copies of " +
                        std::to_string(v) + " but the profile holds " +
                        std::to_string(profile.counts[v]));
    }
  }
  const std::int64_t floor_value = profile.floor_value();
  std::vector<std::int64_t> chosen;
  for (std::int64_t v = t; v > floor_value; --v) {
    const auto k = selection[static_cast<std::size_t>(v)];
    if (k == 0) continue;
    if (v == t) {
      chosen.push_back(0);
      continue;
    }
    chosen.push_back(t - v);
    if (k == 2) chosen.push_back(p - (t - v));
  }
  std::int64_t need = selection[static_cast<std::size_t>(floor_value)];
  for (std::int64_t a = 0; a < p && need > 0; ++a) {
    if (shift_overlap_interval(p, t, a) == floor_value) {
      chosen.push_back(a);
      --need;
    }
  }
  return ResidueSet::make(p, chosen);
}

ConstructionWitness construct(std::int64_t p, std::int64_t s, std::int64_t t, std::int64_t r) {
  const auto params = Params::make(p, s, t);
  const auto [r1, r2] = extreme_sums(p, s, t);
  if (r < r1 || r > r2) throw UnattainableTarget(r, r1, r2);

  const auto profile = build_shift_profile(p, t);
  auto selection = select_multisubset(profile, s, r);
  auto a = realize_set(selection, p, t);
  auto b = ResidueSet::interval(p, 0, params.t);
  const auto achieved = count_shift(a, b);
  if (achieved != r || a.size() != params.s) {
    throw InvariantViolation("construction for (p, s, t, r) = (" + std::to_string(p) + ", " +
                             std::to_string(s) + ", " + std::to_string(t) + ", " +
                             std::to_string(r) + ") produced r = " + std::to_string(achieved));
  }
  return ConstructionWitness{params.p, params.s, params.t, r, std::move(b),
                             std::move(a), std::move(selection), achieved};
}

}  // namespace addtrip

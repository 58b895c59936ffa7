#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "addtrip/interval_construction.hpp"
#include "addtrip/residue_set.hpp"

namespace addtrip {

enum class SpectrumMode { exhaustive, fixed_interval_b, multiset_dp, schur };

std::string_view to_string(SpectrumMode mode) noexcept;
/// Accepts "exhaustive", "fixed-interval-B", "multiset-dp", "schur".
std::optional<SpectrumMode> parse_spectrum_mode(std::string_view name) noexcept;

/// One (A, B) pair certifying a spectrum value. For Schur spectra a == b.
struct SpectrumWitness {
  ResidueSet a;
  ResidueSet b;
};

/// Attained values of r(A, B, B) for fixed (p, s, t), compared against [f, g].
struct SpectrumReport {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  SpectrumMode mode = SpectrumMode::exhaustive;
  std::vector<std::int64_t> attained;
  std::int64_t f = 0;
  std::int64_t g = 0;
  bool prime = false;
  /// Values in [f, g] that were not attained.
  std::vector<std::int64_t> gaps;
  /// Attained values outside [f, g].
  std::vector<std::int64_t> exceptions;
  /// First witness per value, by lexicographic order of (B, A).
  std::map<std::int64_t, SpectrumWitness> witnesses;
  double elapsed_seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultPairBudget = 100'000'000;

struct SpectrumOptions {
  /// Maximum number of (A, B) pairs (or sets A, when B is fixed) to visit.
  std::uint64_t budget = kDefaultPairBudget;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 1;
  bool want_witnesses = false;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

/// Every A with |A| = s against every B with |B| = t. Visits C(p,s) * C(p,t)
/// pairs; throws BudgetExceeded before starting if that exceeds the budget.
SpectrumReport spectrum_exhaustive(std::int64_t p, std::int64_t s, std::int64_t t,
                                   const SpectrumOptions& options = {});

/// Every A with |A| = s against B = {0, ..., t-1}. Visits C(p, s) sets.
SpectrumReport spectrum_fixed_interval_b(std::int64_t p, std::int64_t s, std::int64_t t,
                                         const SpectrumOptions& options = {});

/// Attainable sums of s-element multi-subsets of the shift profile M, by
/// bounded-multiplicity subset-sum over a (s + 1) x (s*t + 1) bit table.
SpectrumReport spectrum_multiset_dp(std::int64_t p, std::int64_t s, std::int64_t t);

/// Runs the multi-subset DP once for every size k in [0, max_k].
/// Element k is the sorted list of attainable sums of k-element multi-subsets.
std::vector<std::vector<std::int64_t>> multiset_dp_all_sizes(const ShiftProfile& profile,
                                                             std::int64_t max_k);

/// r(A, A, A) over every A with |A| = s, compared against [f_s, g_s].
SpectrumReport schur_spectrum(std::int64_t p, std::int64_t s, const SpectrumOptions& options = {});

struct ScanRecord {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::int64_t f = 0;
  std::int64_t g = 0;
  std::vector<std::int64_t> exceptions;
  std::map<std::int64_t, SpectrumWitness> witnesses;
};

struct ScanSkip {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::uint64_t estimated_pairs = 0;
};

struct ScanResult {
  /// One record per instance with at least one exception.
  std::vector<ScanRecord> records;
  /// Instances over budget, not enumerated.
  std::vector<ScanSkip> skipped;
  std::uint64_t instances_checked = 0;
};

/// Exhaustive spectra for every composite odd p in [p_min, p_max] and every
/// (s, t) within `options.budget`, collecting values outside [f, g]. Each
/// exception's witness is re-counted with count_naive before it is reported.
ScanResult exception_scan(std::int64_t p_min, std::int64_t p_max, const SpectrumOptions& options);

}  // namespace addtrip

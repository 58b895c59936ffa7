#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "addtrip/residue_set.hpp"

namespace addtrip {

/// The multiset M = { |(a + B) n B| : a in Z_p } for the interval
/// B = {0, ..., t-1}, stored as counts[v] = multiplicity of v, v in [0, t].
struct ShiftProfile {
  std::uint32_t p = 0;
  std::uint32_t t = 0;
  std::vector<std::int64_t> counts;

  /// Smallest value present: 0 when 2t <= p - 1, else 2t - p.
  std::int64_t floor_value() const noexcept;
  std::int64_t total_count() const noexcept;
  std::int64_t weighted_sum() const noexcept;

  friend bool operator==(const ShiftProfile&, const ShiftProfile&) = default;
};

/// selection[v] = how many shifts with overlap v are chosen.
using Selection = std::vector<std::int64_t>;

/// Output of construct(): a set A with r(A, B, B) = target for B = {0..t-1}.
struct ConstructionWitness {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  std::int64_t target_r = 0;
  ResidueSet b;
  ResidueSet a;
  Selection selection;
  std::int64_t achieved_r = 0;
};

/// |(a + B) n B| for B = {0, ..., t-1}. `a` is any integer; it is reduced to
/// its symmetric representative |a| <= (p-1)/2 internally.
std::int64_t shift_overlap_interval(std::int64_t p, std::int64_t t, std::int64_t a);

/// Tallies shift_overlap_interval over every residue. Works for any odd p.
ShiftProfile build_shift_profile(std::int64_t p, std::int64_t t);

/// Sum of the n smallest elements of {1, 1, 2, 2, ..., u-1, u-1, u}: floor((n+1)^2 / 4).
std::int64_t partial_sum_smallest(std::int64_t u, std::int64_t n);

/// Sum of the n largest elements of {1, 1, 2, 2, ..., u-1, u-1, u}: ceil(n(4u - n) / 4).
std::int64_t partial_sum_largest(std::int64_t u, std::int64_t n);

/// (r1, r2): sums of the s smallest and s largest elements of M, in closed form.
std::pair<std::int64_t, std::int64_t> extreme_sums(std::int64_t p, std::int64_t s, std::int64_t t);

/// Chooses s elements of the profile's multiset summing to r, largest values
/// first. Throws UnattainableTarget when r is outside [r1, r2].
Selection select_multisubset(const ShiftProfile& profile, std::int64_t s, std::int64_t r);

/// Maps a selection back to residues. Value t goes to a = 0; a doubled value v
/// goes first to t - v then to p - (t - v); the floor value takes the
/// remaining residues with that overlap in increasing order.
ResidueSet realize_set(const Selection& selection, std::int64_t p, std::int64_t t);

/// Builds A with |A| = s and r(A, B, B) = r for B = {0, ..., t-1}. The result
/// is re-counted before it is returned.
ConstructionWitness construct(std::int64_t p, std::int64_t s, std::int64_t t, std::int64_t r);

}  // namespace addtrip

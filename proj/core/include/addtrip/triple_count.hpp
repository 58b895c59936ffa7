#pragma once

#include <cstdint>
#include <vector>

#include "addtrip/residue_set.hpp"

namespace addtrip {

/// The representation multiplicities N(c) = #{(a, b) in A x B : a + b = c}
/// and the nested level sets S_i = {c : N(c) >= i}.
struct LayerDecomposition {
  std::uint32_t modulus = 0;
  /// multiplicity[c] = N(c), indexed by canonical residue.
  std::vector<std::int64_t> multiplicity;
  /// layers[i - 1] = S_i, for i = 1 up to the last non-empty layer.
  std::vector<ResidueSet> layers;
};

/// r(A, B, B) by the definition: pairs (a, b) in A x B with a + b in B.
std::int64_t count_naive(const ResidueSet& a, const ResidueSet& b);

/// r(A, B, B) as the sum over a in A of |(a + B) n B|.
std::int64_t count_shift(const ResidueSet& a, const ResidueSet& b);

/// r(A, B, B) as the sum over i >= 1 of |S_i n B|.
std::int64_t count_layers(const ResidueSet& a, const ResidueSet& b);

/// r(A, B, B) as the sum over c in B of N(c), with N an exact integer cyclic
/// convolution of the indicator vectors.
std::int64_t count_convolution(const ResidueSet& a, const ResidueSet& b);

/// Picks count_shift for p <= 4096 and count_convolution above.
std::int64_t count(const ResidueSet& a, const ResidueSet& b);

inline constexpr std::uint32_t kShiftMethodMaxModulus = 4096;

LayerDecomposition layers(const ResidueSet& a, const ResidueSet& b);

/// Cyclic convolution of indicator vectors: out[c] = N(c). Exact.
std::vector<std::int64_t> convolve_indicators(const ResidueSet& a, const ResidueSet& b);

/// st - s(p - t) + (p - t)^2, which equals r(A,B,B) + r(~A,~B,~B) for |A| = s, |B| = t.
std::int64_t complement_identity_rhs(std::int64_t p, std::int64_t s, std::int64_t t);

}  // namespace addtrip

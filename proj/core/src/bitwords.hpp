#pragma once

// Word-level helpers for little-endian bit vectors of a fixed logical length.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace addtrip::detail {

inline std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

inline std::uint64_t tail_mask(std::size_t nbits) {
  const std::size_t rem = nbits % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

/// dst |= (src << k), truncated to nbits. dst and src must not alias.
inline void or_shifted_left(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                            std::size_t k, std::size_t nbits) {
  const std::size_t n = word_count(nbits);
  const std::size_t ws = k / 64;
  const unsigned bs = static_cast<unsigned>(k % 64);
  if (ws >= n) return;
  for (std::size_t i = n; i-- > ws;) {
    std::uint64_t v = src[i - ws] << bs;
    if (bs != 0 && i - ws >= 1) v |= src[i - ws - 1] >> (64 - bs);
    dst[i] |= v;
  }
  dst[n - 1] &= tail_mask(nbits);
}

/// dst |= (src >> k), where src holds nbits meaningful bits.
inline void or_shifted_right(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                             std::size_t k, std::size_t nbits) {
  const std::size_t n = word_count(nbits);
  const std::size_t ws = k / 64;
  const unsigned bs = static_cast<unsigned>(k % 64);
  if (ws >= n) return;
  for (std::size_t i = 0; i + ws < n; ++i) {
    std::uint64_t v = src[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < n) v |= src[i + ws + 1] << (64 - bs);
    dst[i] |= v;
  }
}

/// Cyclic rotation by a (0 <= a < nbits): bit (i + a) mod nbits of the result is bit i of src.
inline std::vector<std::uint64_t> rotated(std::span<const std::uint64_t> src, std::size_t a,
                                          std::size_t nbits) {
  std::vector<std::uint64_t> out(word_count(nbits), 0);
  if (a == 0) {
    out.assign(src.begin(), src.end());
    return out;
  }
  or_shifted_left(out, src, a, nbits);
  or_shifted_right(out, src, nbits - a, nbits);
  return out;
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t n = 0;
  for (const auto w : words) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

}  // namespace addtrip::detail

#include "addtrip/triple_count.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "addtrip/errors.hpp"

namespace addtrip {

namespace {

// NTT over the prime 998244353 = 119 * 2^23 + 1 with primitive root 3.
constexpr std::uint64_t kNttPrime = 998244353;
constexpr std::uint64_t kNttRoot = 3;
constexpr std::size_t kNttMaxLength = std::size_t{1} << 23;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kNttPrime;
  while (exp > 0) {
    if (exp & 1U) result = result * base % kNttPrime;
    base = base * base % kNttPrime;
    exp >>= 1U;
  }
  return result;
}

void ntt(std::vector<std::uint64_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1U;
    for (; (j & bit) != 0; bit >>= 1U) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1U) {
    std::uint64_t w = pow_mod(kNttRoot, (kNttPrime - 1) / len);
    if (inverse) w = pow_mod(w, kNttPrime - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::uint64_t u = a[i + k];
        const std::uint64_t v = a[i + k + len / 2] * wn % kNttPrime;
        a[i + k] = (u + v) % kNttPrime;
        a[i + k + len / 2] = (u + kNttPrime - v) % kNttPrime;
        wn = wn * w % kNttPrime;
      }
    }
  }
  if (inverse) {
    const std::uint64_t n_inv = pow_mod(n, kNttPrime - 2);
    for (auto& x : a) x = x * n_inv % kNttPrime;
  }
}

std::vector<std::int64_t> convolve_direct(const ResidueSet& a, const ResidueSet& b) {
  const auto p = a.modulus();
  std::vector<std::int64_t> out(p, 0);
  const auto bs = b.elements();
  a.for_each([&](Residue x) {
    for (const auto y : bs) {
      const auto c = x + y;
      ++out[c >= p ? c - p : c];
    }
  });
  return out;
}

}  // namespace

std::int64_t count_naive(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  const auto p = a.modulus();
  const auto bs = b.elements();
  std::int64_t r = 0;
  a.for_each([&](Residue x) {
    for (const auto y : bs) {
      const auto c = x + y;
      if (b.contains(c >= p ? c - p : c)) ++r;
    }
  });
  return r;
}

std::int64_t count_shift(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  std::int64_t r = 0;
  a.for_each([&](Residue x) { r += static_cast<std::int64_t>(shifted_intersection_size(b, x, b)); });
  return r;
}

LayerDecomposition layers(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  LayerDecomposition out;
  out.modulus = a.modulus();
  out.multiplicity = convolve_direct(a, b);
  const auto top = out.multiplicity.empty()
                       ? std::int64_t{0}
                       : *std::max_element(out.multiplicity.begin(), out.multiplicity.end());
  std::vector<std::vector<std::int64_t>> members(static_cast<std::size_t>(top));
  for (std::size_t c = 0; c < out.multiplicity.size(); ++c) {
    for (std::int64_t i = 0; i < out.multiplicity[c]; ++i) {
      members[static_cast<std::size_t>(i)].push_back(static_cast<std::int64_t>(c));
    }
  }
  out.layers.reserve(members.size());
  for (const auto& m : members) out.layers.push_back(ResidueSet::make(out.modulus, m));
  return out;
}

std::int64_t count_layers(const ResidueSet& a, const ResidueSet& b) {
  const auto dec = layers(a, b);
  std::int64_t r = 0;
  for (const auto& s : dec.layers) r += static_cast<std::int64_t>(intersection_size(s, b));
  return r;
}

std::vector<std::int64_t> convolve_indicators(const ResidueSet& a, const ResidueSet& b) {
  require_same_modulus(a, b);
  const std::size_t p = a.modulus();
  const std::size_t len = std::bit_ceil(2 * p - 1);
  // Every N(c) is at most p, so the residues mod the NTT prime are exact
  // whenever p is below it; otherwise fall back to the direct double loop.
  if (len > kNttMaxLength || p >= kNttPrime) return convolve_direct(a, b);

  std::vector<std::uint64_t> fa(len, 0);
  std::vector<std::uint64_t> fb(len, 0);
  a.for_each([&](Residue x) { fa[x] = 1; });
  b.for_each([&](Residue y) { fb[y] = 1; });
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t i = 0; i < len; ++i) fa[i] = fa[i] * fb[i] % kNttPrime;
  ntt(fa, true);

  std::vector<std::int64_t> out(p, 0);
  for (std::size_t c = 0; c < 2 * p - 1; ++c) {
    out[c % p] += static_cast<std::int64_t>(fa[c]);
  }
  return out;
}

std::int64_t count_convolution(const ResidueSet& a, const ResidueSet& b) {
  const auto n = convolve_indicators(a, b);
  std::int64_t r = 0;
  b.for_each([&](Residue c) { r += n[c]; });
  return r;
}

std::int64_t count(const ResidueSet& a, const ResidueSet& b) {
  return a.modulus() <= kShiftMethodMaxModulus ? count_shift(a, b) : count_convolution(a, b);
}

std::int64_t complement_identity_rhs(std::int64_t p, std::int64_t s, std::int64_t t) {
  if (s < 0 || s > p || t < 0 || t > p) {
    throw DomainError("complement identity needs 0 <= s, t <= p");
  }
  return s * t - s * (p - t) + (p - t) * (p - t);
}

}  // namespace addtrip

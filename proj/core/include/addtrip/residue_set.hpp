#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace addtrip {

using Residue = std::uint32_t;

/// Largest supported modulus.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

/// Throws InvalidModulus unless `modulus` is odd and in [3, kMaxModulus].
std::uint32_t checked_modulus(std::int64_t modulus);

/// A subset of Z_p stored as a bit vector over the canonical residues
/// {0, ..., p-1}. Immutable after construction; all set algebra returns new
/// values.
class ResidueSet {
 public:
  /// Reduces every element mod `modulus` (negatives included) and drops duplicates.
  static ResidueSet make(std::int64_t modulus, std::span<const std::int64_t> elements);
  static ResidueSet make(std::int64_t modulus, std::initializer_list<std::int64_t> elements);

  static ResidueSet empty(std::int64_t modulus);
  static ResidueSet full(std::int64_t modulus);
  /// {start, start+1, ..., start+length-1} mod p.
  static ResidueSet interval(std::int64_t modulus, std::int64_t start, std::uint32_t length);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return cardinality_; }
  bool is_empty() const noexcept { return cardinality_ == 0; }
  bool contains(std::int64_t x) const noexcept;

  /// Members in increasing order.
  std::vector<Residue> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int low = __builtin_ctzll(bits);
        f(static_cast<Residue>(w * 64 + static_cast<std::size_t>(low)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  ResidueSet(std::uint32_t modulus, std::vector<std::uint64_t> words);

  friend ResidueSet complement(const ResidueSet&);
  friend ResidueSet shift(const ResidueSet&, std::int64_t);
  friend ResidueSet sumset(const ResidueSet&, const ResidueSet&);

  std::uint32_t modulus_;
  std::size_t cardinality_;
  std::vector<std::uint64_t> words_;
};

/// Z_p minus X.
ResidueSet complement(const ResidueSet& x);

/// a + X.
ResidueSet shift(const ResidueSet& x, std::int64_t a);

/// lambda * X. Cardinality is preserved only when lambda is a unit mod p.
ResidueSet dilate(const ResidueSet& x, std::int64_t lambda);

/// |X n Y|. Throws IncompatibleSets on a modulus mismatch.
std::size_t intersection_size(const ResidueSet& x, const ResidueSet& y);

/// |(a + X) n Y| without materializing a + X.
std::size_t shifted_intersection_size(const ResidueSet& x, std::int64_t a, const ResidueSet& y);

/// X + Y = {x + y mod p}. Empty if either operand is empty.
ResidueSet sumset(const ResidueSet& x, const ResidueSet& y);

/// Throws IncompatibleSets unless both sets share a modulus.
void require_same_modulus(const ResidueSet& x, const ResidueSet& y);

/// Deterministic trial division; valid for n < 2^63.
bool is_prime(std::int64_t n) noexcept;

}  // namespace addtrip

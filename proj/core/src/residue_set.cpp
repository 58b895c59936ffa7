#include "addtrip/residue_set.hpp"

#include <string>

#include "addtrip/errors.hpp"
#include "bitwords.hpp"

namespace addtrip {

UnattainableTarget::UnattainableTarget(std::int64_t target, std::int64_t r1, std::int64_t r2)
    : DomainError("target r = " + std::to_string(target) + " is outside the attainable interval [" +
                  std::to_string(r1) + ", " + std::to_string(r2) + "]"),
      target_(target),
      r1_(r1),
      r2_(r2) {}

BudgetExceeded::BudgetExceeded(std::uint64_t estimated, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(estimated) +
                         " (A, B) pairs, budget is " + std::to_string(budget)),
      estimated_(estimated),
      budget_(budget) {}

namespace {

std::uint32_t reduce(std::int64_t x, std::uint32_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

std::uint32_t checked_modulus(std::int64_t modulus) {
  if (modulus < 3 || modulus % 2 == 0 || modulus > kMaxModulus) {
    throw InvalidModulus("modulus must be odd and in [3, 2^31 - 1], got " +
                         std::to_string(modulus));
  }
  return static_cast<std::uint32_t>(modulus);
}

ResidueSet::ResidueSet(std::uint32_t modulus, std::vector<std::uint64_t> words)
    : modulus_(modulus), cardinality_(detail::popcount(words)), words_(std::move(words)) {}

ResidueSet ResidueSet::make(std::int64_t modulus, std::span<const std::int64_t> elements) {
  const auto p = checked_modulus(modulus);
  std::vector<std::uint64_t> words(detail::word_count(p), 0);
  for (const auto x : elements) {
    const auto r = reduce(x, p);
    words[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return ResidueSet(p, std::move(words));
}

ResidueSet ResidueSet::make(std::int64_t modulus, std::initializer_list<std::int64_t> elements) {
  return make(modulus, std::span<const std::int64_t>(elements.begin(), elements.size()));
}

ResidueSet ResidueSet::empty(std::int64_t modulus) {
  const auto p = checked_modulus(modulus);
  return ResidueSet(p, std::vector<std::uint64_t>(detail::word_count(p), 0));
}

ResidueSet ResidueSet::full(std::int64_t modulus) { return complement(empty(modulus)); }

ResidueSet ResidueSet::interval(std::int64_t modulus, std::int64_t start, std::uint32_t length) {
  const auto p = checked_modulus(modulus);
  if (length > p) throw DomainError("interval longer than the modulus");
  std::vector<std::uint64_t> words(detail::word_count(p), 0);
  auto r = reduce(start, p);
  for (std::uint32_t i = 0; i < length; ++i) {
    words[r / 64] |= std::uint64_t{1} << (r % 64);
    if (++r == p) r = 0;
  }
  return ResidueSet(p, std::move(words));
}

bool ResidueSet::contains(std::int64_t x) const noexcept {
  const auto r = reduce(x, modulus_);
  return ((words_[r / 64] >> (r % 64)) & 1U) != 0;
}

std::vector<Residue> ResidueSet::elements() const {
  std::vector<Residue> out;
  out.reserve(cardinality_);
  for_each([&](Residue r) { out.push_back(r); });
  return out;
}

ResidueSet complement(const ResidueSet& x) {
  std::vector<std::uint64_t> words(x.words_.size());
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = ~x.words_[i];
  words.back() &= detail::tail_mask(x.modulus_);
  return ResidueSet(x.modulus_, std::move(words));
}

ResidueSet shift(const ResidueSet& x, std::int64_t a) {
  return ResidueSet(x.modulus_, detail::rotated(x.words_, reduce(a, x.modulus_), x.modulus_));
}

ResidueSet dilate(const ResidueSet& x, std::int64_t lambda) {
  const auto p = x.modulus();
  const auto l = reduce(lambda, p);
  std::vector<std::int64_t> image;
  image.reserve(x.size());
  x.for_each([&](Residue r) {
    image.push_back(static_cast<std::int64_t>((std::uint64_t{l} * r) % p));
  });
  return ResidueSet::make(p, image);
}

void require_same_modulus(const ResidueSet& x, const ResidueSet& y) {
  if (x.modulus() != y.modulus()) {
    throw IncompatibleSets("residue sets live in Z_" + std::to_string(x.modulus()) + " and Z_" +
                           std::to_string(y.modulus()));
  }
}

std::size_t intersection_size(const ResidueSet& x, const ResidueSet& y) {
  require_same_modulus(x, y);
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < xw.size(); ++i) {
    n += static_cast<std::size_t>(__builtin_popcountll(xw[i] & yw[i]));
  }
  return n;
}

std::size_t shifted_intersection_size(const ResidueSet& x, std::int64_t a, const ResidueSet& y) {
  require_same_modulus(x, y);
  const auto rot = detail::rotated(x.words(), reduce(a, x.modulus()), x.modulus());
  const auto yw = y.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < rot.size(); ++i) {
    n += static_cast<std::size_t>(__builtin_popcountll(rot[i] & yw[i]));
  }
  return n;
}

ResidueSet sumset(const ResidueSet& x, const ResidueSet& y) {
  require_same_modulus(x, y);
  const auto p = x.modulus_;
  std::vector<std::uint64_t> acc(x.words_.size(), 0);
  const ResidueSet& outer = x.size() <= y.size() ? x : y;
  const ResidueSet& inner = x.size() <= y.size() ? y : x;
  outer.for_each([&](Residue a) {
    const auto rot = detail::rotated(inner.words_, a, p);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= rot[i];
  });
  return ResidueSet(p, std::move(acc));
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace addtrip

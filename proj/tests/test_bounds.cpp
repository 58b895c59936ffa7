#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "addtrip/bounds.hpp"
#include "addtrip/errors.hpp"
#include "addtrip/triple_count.hpp"
#include "oracle.hpp"

using addtrip::ResidueSet;

TEST(IntegerDivision, FloorAndCeil) {
  EXPECT_EQ(addtrip::floor_div(7, 4), 1);
  EXPECT_EQ(addtrip::floor_div(-7, 4), -2);
  EXPECT_EQ(addtrip::ceil_div(7, 4), 2);
  EXPECT_EQ(addtrip::ceil_div(-7, 4), -1);
  EXPECT_EQ(addtrip::ceil_div(8, 4), 2);
}

TEST(LowerBoundF, Examples) {
  EXPECT_EQ(addtrip::lower_bound_f(9, 7, 6), 25);
  EXPECT_EQ(addtrip::lower_bound_f(11, 3, 4), 0);

  const auto spec_7_3_3 = oracle::spectrum(7, 3, 3);
  EXPECT_EQ(*spec_7_3_3.begin(), 1);
  EXPECT_EQ(addtrip::lower_bound_f(7, 3, 3), 1);

  EXPECT_THROW(addtrip::lower_bound_f(9, 0, 3), addtrip::DomainError);
  EXPECT_THROW(addtrip::lower_bound_f(8, 1, 3), addtrip::InvalidModulus);
}

TEST(UpperBoundG, Examples) {
  EXPECT_EQ(addtrip::upper_bound_g(9, 7, 6), 30);
  EXPECT_EQ(addtrip::upper_bound_g(11, 9, 2), 4);

  const auto spec_5_2_2 = oracle::spectrum(5, 2, 2);
  EXPECT_EQ(*spec_5_2_2.rbegin(), 3);
  EXPECT_EQ(addtrip::upper_bound_g(5, 2, 2), 3);

  EXPECT_THROW(addtrip::upper_bound_g(9, 3, 9), addtrip::DomainError);
}

TEST(ComputeBounds, FlagsCompositeModuli) {
  const auto b = addtrip::compute_bounds(9, 7, 6);
  EXPECT_EQ(b.f, 25);
  EXPECT_EQ(b.g, 30);
  EXPECT_FALSE(b.guaranteed);
  EXPECT_TRUE(addtrip::compute_bounds(7, 3, 3).guaranteed);
}

TEST(SchurBounds, Examples) {
  EXPECT_EQ(addtrip::schur_lower_f_s(7, 3), 1);
  EXPECT_EQ(addtrip::schur_lower_f_s(11, 4), 0);
  EXPECT_EQ(addtrip::schur_lower_f_s(11, 10), 90);
  EXPECT_EQ(addtrip::lower_bound_f(11, 10, 10), 90);

  const auto schur_7_3 = oracle::schur_spectrum(7, 3);
  EXPECT_EQ(*schur_7_3.rbegin(), 7);
  EXPECT_EQ(addtrip::schur_upper_g_s(7, 3), 7);
  EXPECT_EQ(addtrip::schur_upper_g_s(11, 10), 91);
  for (int p : {3, 9, 101}) EXPECT_EQ(addtrip::schur_upper_g_s(p, 1), 1);

  EXPECT_THROW(addtrip::schur_lower_f_s(7, 7), addtrip::DomainError);
  EXPECT_THROW(addtrip::schur_upper_g_s(7, 0), addtrip::DomainError);
}

TEST(PollardLowerAtJ, Examples) {
  EXPECT_EQ(addtrip::pollard_lower_at_j(11, 4, 5, 2), 2);
  EXPECT_EQ(addtrip::lower_bound_f(11, 4, 5), 2);
  EXPECT_EQ(addtrip::pollard_lower_at_j(11, 4, 8, 4), 20);
  EXPECT_EQ(addtrip::lower_bound_f(11, 4, 8), 20);
  EXPECT_EQ(addtrip::pollard_lower_at_j(5, 4, 4, 1), 4);
  EXPECT_THROW(addtrip::pollard_lower_at_j(11, 4, 5, 0), addtrip::DomainError);
  EXPECT_THROW(addtrip::pollard_lower_at_j(11, 4, 5, 5), addtrip::DomainError);
}

TEST(CauchyDavenportCheck, Examples) {
  auto w = addtrip::cauchy_davenport_check(ResidueSet::make(5, {0, 1}), ResidueSet::make(5, {0, 1}));
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.lhs, 3);
  EXPECT_EQ(w.rhs, 3);

  w = addtrip::cauchy_davenport_check(ResidueSet::make(5, {0}), ResidueSet::make(5, {0}));
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.lhs, 1);
  EXPECT_EQ(w.rhs, 1);

  const auto i3 = ResidueSet::make(5, {0, 1, 2});
  w = addtrip::cauchy_davenport_check(i3, i3);
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.lhs, 5);
  EXPECT_EQ(w.rhs, 5);

  EXPECT_THROW(addtrip::cauchy_davenport_check(ResidueSet::empty(5), i3),
               addtrip::ContractViolation);
  EXPECT_THROW(addtrip::cauchy_davenport_check(ResidueSet::make(9, {0}), ResidueSet::make(9, {0})),
               addtrip::ContractViolation);
}

TEST(PollardCheck, Examples) {
  const auto a = ResidueSet::make(5, {0, 1});
  auto w = addtrip::pollard_check(a, a, 2);
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.lhs, 4);
  EXPECT_EQ(w.rhs, 4);

  const auto i3 = ResidueSet::make(5, {0, 1, 2});
  w = addtrip::pollard_check(i3, i3, 3);
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.lhs, 9);
  EXPECT_EQ(w.rhs, 9);

  // j = 1 is Cauchy-Davenport.
  const auto x = ResidueSet::make(11, {1, 4, 5});
  const auto y = ResidueSet::make(11, {0, 2, 7, 9});
  const auto p1 = addtrip::pollard_check(x, y, 1);
  const auto cd = addtrip::cauchy_davenport_check(x, y);
  EXPECT_EQ(p1.lhs, cd.lhs);
  EXPECT_EQ(p1.rhs, cd.rhs);

  EXPECT_THROW(addtrip::pollard_check(a, a, 3), addtrip::DomainError);
  EXPECT_THROW(addtrip::pollard_check(a, a, 0), addtrip::DomainError);
  EXPECT_THROW(addtrip::pollard_check(ResidueSet::make(9, {0}), ResidueSet::make(9, {0}), 1),
               addtrip::ContractViolation);

  const auto all = addtrip::pollard_check_all(i3, i3);
  ASSERT_EQ(all.size(), 3U);
  EXPECT_EQ(all[2].lhs, 9);
}

TEST(BoundsProperty, OrderedAndBoxed) {
  for (std::int64_t p = 3; p <= 199; p += 2) {
    for (std::int64_t s = 1; s < p; ++s) {
      for (std::int64_t t = 1; t < p; ++t) {
        const auto f = addtrip::lower_bound_f(p, s, t);
        const auto g = addtrip::upper_bound_g(p, s, t);
        ASSERT_LE(0, f);
        ASSERT_LE(f, g) << p << " " << s << " " << t;
        ASSERT_LE(g, s * t);
      }
    }
  }
}

TEST(BoundsProperty, SchurSpecialization) {
  for (int p = 3; p <= 2001; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (std::int64_t s = 1; s < p; ++s) {
      ASSERT_EQ(addtrip::lower_bound_f(p, s, s), addtrip::schur_lower_f_s(p, s)) << p << " " << s;
      ASSERT_EQ(addtrip::upper_bound_g(p, s, s), addtrip::schur_upper_g_s(p, s)) << p << " " << s;
    }
  }
}

TEST(BoundsProperty, DualityThroughComplements) {
  for (std::int64_t p = 3; p <= 199; p += 2) {
    for (std::int64_t s = 1; s < p; ++s) {
      for (std::int64_t t = 1; t < p; ++t) {
        ASSERT_EQ(addtrip::upper_bound_g(p, s, t),
                  addtrip::complement_identity_rhs(p, s, t) - addtrip::lower_bound_f(p, p - s, p - t));
      }
    }
  }
}

TEST(BoundsProperty, PollardWitnessesReachF) {
  for (std::int64_t p = 3; p <= 199; p += 2) {
    for (std::int64_t s = 1; s < p; ++s) {
      for (std::int64_t t = 1; t < p; ++t) {
        if (2 * t < p - s + 2) continue;
        std::int64_t best = INT64_MIN;
        for (std::int64_t j = 1; j <= std::min(s, t); ++j) {
          best = std::max(best, addtrip::pollard_lower_at_j(p, s, t, j));
        }
        ASSERT_GE(best, addtrip::lower_bound_f(p, s, t)) << p << " " << s << " " << t;
      }
    }
  }
}

// Exact extremes from brute-force spectra for small primes: f and g are the
// minimum and maximum, not just bounds.
TEST(BoundsProperty, MatchBruteForceExtremes) {
  for (int p : {3, 5, 7}) {
    for (int s = 1; s < p; ++s) {
      for (int t = 1; t < p; ++t) {
        const auto values = oracle::spectrum(p, s, t);
        EXPECT_EQ(*values.begin(), addtrip::lower_bound_f(p, s, t));
        EXPECT_EQ(*values.rbegin(), addtrip::upper_bound_g(p, s, t));
      }
    }
  }
}

TEST(BoundsProperty, RandomSandwichAndInequalities) {
  std::mt19937_64 rng(77);
  for (int p : {5, 7, 11, 13, 31, 101}) {
    std::vector<std::int64_t> all(p);
    for (int i = 0; i < p; ++i) all[i] = i;
    std::uniform_int_distribution<int> size(1, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::shuffle(all.begin(), all.end(), rng);
      const int s = size(rng);
      const int t = size(rng);
      const auto a = ResidueSet::make(p, std::span(all.data(), s));
      std::shuffle(all.begin(), all.end(), rng);
      const auto b = ResidueSet::make(p, std::span(all.data(), t));
      const auto r = addtrip::count_naive(a, b);
      EXPECT_LE(addtrip::lower_bound_f(p, s, t), r);
      EXPECT_LE(r, addtrip::upper_bound_g(p, s, t));
      EXPECT_TRUE(addtrip::cauchy_davenport_check(a, b).holds);
      const auto pollard = addtrip::pollard_check_all(a, b);
      for (std::size_t j = 0; j < pollard.size(); ++j) {
        EXPECT_TRUE(pollard[j].holds);
        EXPECT_LE(addtrip::pollard_lower_at_j(p, s, t, static_cast<std::int64_t>(j + 1)), r);
      }
    }
  }
}

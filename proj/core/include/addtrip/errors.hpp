#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addtrip {

/// Argument outside the domain of an operation (bad s, t, j, n, selection...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Modulus that is even, below 3, or above the supported cap.
class InvalidModulus : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two residue sets over different moduli.
class IncompatibleSets : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The hypotheses of a theorem-backed check do not hold (composite modulus, empty set).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A requested triple count lies outside what the interval construction can reach.
class UnattainableTarget : public DomainError {
 public:
  UnattainableTarget(std::int64_t target, std::int64_t r1, std::int64_t r2);

  std::int64_t target() const noexcept { return target_; }
  std::int64_t r1() const noexcept { return r1_; }
  std::int64_t r2() const noexcept { return r2_; }

 private:
  std::int64_t target_;
  std::int64_t r1_;
  std::int64_t r2_;
};

/// Internal self-check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive enumeration would visit more (A, B) pairs than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimated, std::uint64_t budget);

  std::uint64_t estimated() const noexcept { return estimated_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimated_;
  std::uint64_t budget_;
};

}  // namespace addtrip

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "addtrip/bounds.hpp"
#include "addtrip/interval_construction.hpp"
#include "addtrip/residue_set.hpp"
#include "addtrip/spectrum.hpp"
#include "addtrip/triple_count.hpp"
#include "cli/verify.hpp"
#include "oracle.hpp"

namespace {

using namespace addtrip;
using Clock = std::chrono::steady_clock;

// Runtime ceilings, in seconds.
constexpr double kLimitReproduction = 1.0;
constexpr double kLimitDeskScale = 600.0;
constexpr double kLimitConstruction = 300.0;
constexpr double kLimitInequalities = 120.0;
// Minimum parallel efficiency (speedup / workers) accepted as near-linear.
constexpr double kMinParallelEfficiency = 0.6;
constexpr unsigned kMaxWorkers = 8;

constexpr std::uint64_t kSeedConstruction = 20240601;
constexpr std::uint64_t kSeedInequalities = 4242;
constexpr std::uint64_t kInequalityTrials = 10000;
constexpr int kRandomConstructions = 1000;

struct Outcome {
  enum class Status { pass, fail, skip } status = Status::pass;
  std::string detail;
};

Outcome pass(std::string detail) { return {Outcome::Status::pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::Status::fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::Status::skip, std::move(detail)}; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::int64_t> interval_values(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string describe(std::int64_t p, std::int64_t s, std::int64_t t) {
  return "p=" + std::to_string(p) + " s=" + std::to_string(s) + " t=" + std::to_string(t);
}

std::vector<std::int64_t> odd_moduli(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto p = lo | 1; p <= hi; p += 2) out.push_back(p);
  return out;
}

Outcome reproduction() {
  const auto start = Clock::now();
  const auto report = spectrum_exhaustive(9, 7, 6, {.want_witnesses = true});
  if (report.attained != interval_values(24, 30)) return fail("attained set differs from {24} u [25,30]");
  if (report.f != 25 || report.g != 30) return fail("bounds differ from [25,30]");
  if (report.exceptions != std::vector<std::int64_t>{24}) return fail("exception list differs from {24}");
  const auto w = report.witnesses.find(24);
  if (w == report.witnesses.end() || count_naive(w->second.a, w->second.b) != 24) {
    return fail("exception 24 lacks a verified witness");
  }
  const auto a = ResidueSet::make(9, {0, 1, 2, 4, 5, 7, 8});
  const auto b = ResidueSet::make(9, {0, 1, 3, 4, 6, 7});
  for (const auto r : {count_naive(a, b), count_shift(a, b), count_layers(a, b), count_convolution(a, b)}) {
    if (r != 24) return fail("count of the published witness is " + std::to_string(r));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kLimitReproduction) return fail("took " + std::to_string(elapsed) + " s");
  return pass("attained {24} u [25,30], witness recounts to 24");
}

// Every (s, t) for the given moduli, exhaustively, with `jobs` workers. Returns
// a failure description or an empty string.
std::string desk_scale_sweep(unsigned jobs, std::uint64_t& pairs) {
  for (const std::int64_t p : {3, 5, 7, 11}) {
    for (std::int64_t s = 1; s < p; ++s) {
      for (std::int64_t t = 1; t < p; ++t) {
        const auto report = spectrum_exhaustive(p, s, t, {.budget = ~std::uint64_t{0}, .jobs = jobs});
        pairs += binomial_saturating(p, s) * binomial_saturating(p, t);
        if (report.attained != interval_values(report.f, report.g)) {
          return describe(p, s, t) + ": spectrum is not [f,g]";
        }
      }
    }
  }
  return {};
}

Outcome desk_scale() {
  const auto start = Clock::now();
  std::uint64_t pairs = 0;
  if (auto problem = desk_scale_sweep(1, pairs); !problem.empty()) return fail(problem);
  const double elapsed = seconds_since(start);
  if (elapsed > kLimitDeskScale) return fail("took " + std::to_string(elapsed) + " s");
  std::ostringstream msg;
  msg << pairs << " pairs on one worker in " << elapsed << " s, every spectrum equals [f,g]";
  return pass(msg.str());
}

Outcome desk_scale_speedup() {
  const unsigned hardware = std::thread::hardware_concurrency();
  if (hardware < 2) {
    return skip("only " + std::to_string(hardware) +
                " hardware thread available; a speedup cannot be measured on this host");
  }
  const unsigned workers = std::min(hardware, kMaxWorkers);
  std::uint64_t pairs = 0;
  auto start = Clock::now();
  desk_scale_sweep(1, pairs);
  const double serial = seconds_since(start);
  start = Clock::now();
  if (auto problem = desk_scale_sweep(workers, pairs); !problem.empty()) return fail(problem);
  const double parallel = seconds_since(start);
  const double speedup = serial / parallel;
  std::ostringstream msg;
  msg << "speedup " << speedup << " with " << workers << " workers (need >= "
      << kMinParallelEfficiency * workers << ")";
  return speedup >= kMinParallelEfficiency * workers ? pass(msg.str()) : fail(msg.str());
}

std::string check_construct(std::int64_t p, std::int64_t s, std::int64_t t, std::int64_t r) {
  const auto w = construct(p, s, t, r);
  if (w.achieved_r != r || count_naive(w.a, w.b) != r) return describe(p, s, t) + " r=" + std::to_string(r);
  if (w.a.size() != static_cast<std::size_t>(s) || w.b != ResidueSet::interval(p, 0, t)) {
    return describe(p, s, t) + " r=" + std::to_string(r) + ": wrong shape";
  }
  return {};
}

Outcome construction_totality() {
  const auto start = Clock::now();
  std::uint64_t exhaustive = 0;
  for (const auto p : odd_moduli(3, 31)) {
    for (std::int64_t s = 1; s < p; ++s) {
      for (std::int64_t t = 1; t < p; ++t) {
        const auto [f, g] = extreme_sums(p, s, t);
        for (auto r = f; r <= g; ++r, ++exhaustive) {
          if (auto problem = check_construct(p, s, t, r); !problem.empty()) return fail(problem);
        }
      }
    }
  }
  std::mt19937_64 rng(kSeedConstruction);
  const auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(cli::uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
  };
  for (int i = 0; i < kRandomConstructions; ++i) {
    const auto p = 2 * pick(16, 499) + 1;
    const auto s = pick(1, p - 1);
    const auto t = pick(1, p - 1);
    const auto [f, g] = extreme_sums(p, s, t);
    if (auto problem = check_construct(p, s, t, pick(f, g)); !problem.empty()) return fail(problem);
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kLimitConstruction) return fail("took " + std::to_string(elapsed) + " s");
  std::ostringstream msg;
  msg << exhaustive << " exhaustive + " << kRandomConstructions << " random targets round-trip in "
      << elapsed << " s";
  return pass(msg.str());
}

Outcome fixed_interval_matches_dp() {
  std::uint64_t instances = 0;
  for (const auto p : odd_moduli(3, 13)) {
    for (std::int64_t s = 1; s < p; ++s) {
      for (std::int64_t t = 1; t < p; ++t, ++instances) {
        const auto enumerated = spectrum_fixed_interval_b(p, s, t, {});
        const auto dp = spectrum_multiset_dp(p, s, t);
        if (enumerated.attained != dp.attained) return fail(describe(p, s, t));
      }
    }
  }
  return pass(std::to_string(instances) + " instances agree");
}

// Overlaps |(a + B) n B| for B = {0..t-1}, from prefix counts of B's indicator
// over two periods. Shares nothing with the library's closed form.
std::vector<std::int64_t> overlaps_by_prefix(std::int64_t p, std::int64_t t) {
  std::vector<std::int64_t> prefix(2 * p + 1, 0);
  for (std::int64_t i = 0; i < 2 * p; ++i) prefix[i + 1] = prefix[i] + ((i % p) < t ? 1 : 0);
  std::vector<std::int64_t> out(p);
  for (std::int64_t a = 0; a < p; ++a) out[a] = prefix[a + t] - prefix[a];
  return out;
}

Outcome extreme_sums_identity() {
  std::uint64_t instances = 0;
  for (const auto p : odd_moduli(3, 999)) {
    for (std::int64_t t = 1; t < p; ++t) {
      auto values = overlaps_by_prefix(p, t);
      std::sort(values.begin(), values.end());
      std::int64_t low = 0;
      std::int64_t high = 0;
      for (std::int64_t s = 1; s < p; ++s, ++instances) {
        low += values[s - 1];
        high += values[p - s];
        const std::int64_t f = lower_bound_f(p, s, t);
        const std::int64_t g = upper_bound_g(p, s, t);
        const auto [r1, r2] = extreme_sums(p, s, t);
        if (r1 != f || r2 != g) return fail(describe(p, s, t) + ": extreme sums differ from (f,g)");
        if (low != f || high != g) return fail(describe(p, s, t) + ": direct overlap sums differ from (f,g)");
        if (g != complement_identity_rhs(p, s, t) - lower_bound_f(p, p - s, p - t)) {
          return fail(describe(p, s, t) + ": duality fails");
        }
      }
    }
  }
  return pass(std::to_string(instances) + " instances, also matched against directly computed overlaps");
}

Outcome schur_specialization() {
  std::uint64_t instances = 0;
  for (std::int64_t p = 3; p <= 10000; p += 2) {
    if (!oracle::is_prime(static_cast<int>(p))) continue;
    for (std::int64_t s = 1; s < p; ++s, ++instances) {
      if (lower_bound_f(p, s, s) != schur_lower_f_s(p, s) || upper_bound_g(p, s, s) != schur_upper_g_s(p, s)) {
        return fail("p=" + std::to_string(p) + " s=" + std::to_string(s));
      }
    }
  }
  return pass(std::to_string(instances) + " (p, s) pairs");
}

Outcome inequality_suite() {
  const auto start = Clock::now();
  const std::vector<std::uint32_t> primes{5, 7, 11, 101, 499};
  const auto result = cli::run_property_suites(primes, kInequalityTrials, kSeedInequalities);
  if (result.first_failure) {
    const auto& f = *result.first_failure;
    return fail(f.property + " at p=" + std::to_string(f.p) + ": " + f.detail);
  }
  for (const auto& tally : result.tallies) {
    if (tally.excluded || tally.checked != kInequalityTrials || tally.violations != 0) {
      return fail(tally.name + " at p=" + std::to_string(tally.p) + " was not fully checked");
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kLimitInequalities) return fail("took " + std::to_string(elapsed) + " s");
  std::ostringstream msg;
  msg << result.tallies.size() << " property tallies, " << kInequalityTrials << " pairs each, zero violations in "
      << elapsed << " s";
  return pass(msg.str());
}

Outcome lemma_partial_sums() {
  std::uint64_t checks = 0;
  for (std::int64_t u = 1; u <= 100; ++u) {
    const auto m = oracle::lemma_multiset(u);
    const auto len = static_cast<std::int64_t>(m.size());
    std::int64_t low = 0;
    std::int64_t high = 0;
    for (std::int64_t n = 1; n <= len; ++n, ++checks) {
      low += m[n - 1];
      high += m[len - n];
      if (partial_sum_smallest(u, n) != low || partial_sum_largest(u, n) != high) {
        return fail("u=" + std::to_string(u) + " n=" + std::to_string(n));
      }
    }
  }
  return pass(std::to_string(checks) + " (u, n) pairs");
}

Outcome schur_spectra() {
  std::uint64_t with_gaps = 0;
  std::uint64_t instances = 0;
  for (const std::int64_t p : {3, 5, 7, 11, 13}) {
    for (std::int64_t s = 1; s < p; ++s, ++instances) {
      const auto report = schur_spectrum(p, s);
      const auto expected = oracle::schur_spectrum(static_cast<int>(p), static_cast<int>(s));
      if (report.attained != std::vector<std::int64_t>(expected.begin(), expected.end())) {
        return fail("p=" + std::to_string(p) + " s=" + std::to_string(s) + ": attained set differs from brute force");
      }
      if (report.f != schur_lower_f_s(p, s) || report.g != schur_upper_g_s(p, s) || !report.exceptions.empty()) {
        return fail("p=" + std::to_string(p) + " s=" + std::to_string(s) + ": values outside [f_s, g_s]");
      }
      const auto range = interval_values(report.f, report.g);
      std::vector<std::int64_t> missing;
      std::set_difference(range.begin(), range.end(), report.attained.begin(), report.attained.end(),
                          std::back_inserter(missing));
      if (report.gaps != missing) return fail("p=" + std::to_string(p) + " s=" + std::to_string(s) + ": gap list inconsistent");
      if (!report.gaps.empty()) ++with_gaps;

      bool low = false;
      bool high = false;
      for (std::int64_t c = 0; c < p; ++c) {
        const auto interval = ResidueSet::interval(p, c, s);
        const auto r = count_naive(interval, interval);
        low = low || r == report.f;
        high = high || r == report.g;
      }
      if (!low || !high) {
        return fail("p=" + std::to_string(p) + " s=" + std::to_string(s) + ": an endpoint is not attained by an interval");
      }
    }
  }
  return pass(std::to_string(instances) + " spectra consistent, " + std::to_string(with_gaps) +
              " with gaps, both endpoints attained by translates of {0..s-1}");
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "composite p=9 reproduction", reproduction},
      {"2", "exhaustive spectra equal [f,g] for p in {3,5,7,11}", desk_scale},
      {"2s", "parallel speedup of the same sweep", desk_scale_speedup},
      {"3", "construction totality", construction_totality},
      {"4", "fixed-interval enumeration equals multiset DP", fixed_interval_matches_dp},
      {"5", "extreme sums and duality", extreme_sums_identity},
      {"6", "Schur specialization of the bounds", schur_specialization},
      {"7", "randomized inequality suite", inequality_suite},
      {"8", "partial sums of the doubled multiset", lemma_partial_sums},
      {"9", "Schur spectra for primes up to 13", schur_spectra},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const char* tag = outcome.status == Outcome::Status::pass   ? "PASS"
                      : outcome.status == Outcome::Status::skip ? "SKIP"
                                                                : "FAIL";
    if (outcome.status == Outcome::Status::fail) ++failures;
    std::printf("[%s] %-3s %-52s %8.3f s  %s\n", tag, c.id, c.title, seconds_since(start), outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

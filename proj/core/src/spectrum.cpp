#include "addtrip/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

#include "addtrip/bounds.hpp"
#include "addtrip/errors.hpp"
#include "addtrip/params.hpp"
#include "addtrip/triple_count.hpp"
#include "bitwords.hpp"

namespace addtrip {

namespace {

using Elements = std::vector<Residue>;
using Clock = std::chrono::steady_clock;

struct WitnessPair {
  Elements b;
  Elements a;

  friend bool operator<(const WitnessPair& x, const WitnessPair& y) {
    return std::tie(x.b, x.a) < std::tie(y.b, y.a);
  }
};

// Attained values plus the lexicographically first witness per value.
struct Tally {
  std::vector<char> attained;
  std::map<std::int64_t, WitnessPair> witnesses;

  explicit Tally(std::size_t max_value = 0) : attained(max_value + 1, 0) {}

  void merge(Tally&& other) {
    for (std::size_t v = 0; v < attained.size(); ++v) attained[v] |= other.attained[v];
    for (auto& [value, w] : other.witnesses) {
      auto [it, inserted] = witnesses.try_emplace(value, std::move(w));
      if (!inserted && w < it->second) it->second = std::move(w);
    }
  }
};

// Visits every k-subset of {first, ..., p-1} whose minimum is `first`, in
// lexicographic order. `buf` holds the current subset at each call of `f`.
template <typename F>
void for_each_subset_from(std::uint32_t p, std::uint32_t k, std::uint32_t first, Elements& buf,
                          F&& f) {
  buf.clear();
  buf.push_back(first);
  auto rec = [&](auto& self, std::uint32_t start, std::uint32_t remaining) -> void {
    if (remaining == 0) {
      f(static_cast<const Elements&>(buf));
      return;
    }
    for (std::uint32_t x = start; x + remaining <= p; ++x) {
      buf.push_back(x);
      self(self, x + 1, remaining - 1);
      buf.pop_back();
    }
  };
  rec(rec, first + 1, k - 1);
}

// overlap[d] = |(d + B) n B|, counted from pairs of members.
std::vector<std::int64_t> overlap_vector(std::uint32_t p, const Elements& b) {
  std::vector<std::int64_t> overlap(p, 0);
  for (const auto x : b) {
    for (const auto y : b) {
      ++overlap[y >= x ? y - x : y + p - x];
    }
  }
  return overlap;
}

// Adds sum_{a in A} overlap[a] to `tally` for every A with |A| = s and min A = first.
void sweep_sets_a(std::uint32_t p, std::uint32_t s, std::uint32_t first,
                  const std::vector<std::int64_t>& overlap, const Elements& b, bool want_witnesses,
                  Tally& tally) {
  Elements a;
  a.reserve(s);
  a.push_back(first);
  auto rec = [&](auto& self, std::uint32_t start, std::uint32_t remaining,
                 std::int64_t sum) -> void {
    if (remaining == 0) {
      auto& seen = tally.attained[static_cast<std::size_t>(sum)];
      if (!seen) {
        seen = 1;
        if (want_witnesses) tally.witnesses.try_emplace(sum, WitnessPair{b, a});
      }
      return;
    }
    for (std::uint32_t x = start; x + remaining <= p; ++x) {
      a.push_back(x);
      self(self, x + 1, remaining - 1, sum + overlap[x]);
      a.pop_back();
    }
  };
  rec(rec, first + 1, s - 1, overlap[first]);
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs `item_fn(i)` for every work item on `jobs` workers and unions the
// per-item tallies. The merge is commutative, so the result does not depend
// on scheduling.
template <typename ItemFn>
Tally run_items(std::size_t item_count, std::size_t max_value, unsigned jobs, ItemFn&& item_fn) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(item_count, 1)));
  std::vector<Tally> partial(jobs, Tally(max_value));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](unsigned w) {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= item_count) break;
        Tally local(max_value);
        item_fn(i, local);
        partial[w].merge(std::move(local));
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(item_count);
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  }
  if (failure) std::rethrow_exception(failure);

  Tally total(max_value);
  for (auto& t : partial) total.merge(std::move(t));
  return total;
}

SpectrumReport finish_report(std::uint32_t p, std::uint32_t s, std::uint32_t t, SpectrumMode mode,
                             std::int64_t f, std::int64_t g, const std::vector<char>& attained,
                             std::map<std::int64_t, WitnessPair> witnesses, Clock::time_point start) {
  SpectrumReport report;
  report.p = p;
  report.s = s;
  report.t = t;
  report.mode = mode;
  report.f = f;
  report.g = g;
  report.prime = is_prime(p);
  for (std::size_t v = 0; v < attained.size(); ++v) {
    if (!attained[v]) continue;
    const auto value = static_cast<std::int64_t>(v);
    report.attained.push_back(value);
    if (value < f || value > g) report.exceptions.push_back(value);
  }
  for (std::int64_t v = f; v <= g; ++v) {
    if (v < 0 || static_cast<std::size_t>(v) >= attained.size() ||
        !attained[static_cast<std::size_t>(v)]) {
      report.gaps.push_back(v);
    }
  }
  for (auto& [value, w] : witnesses) {
    std::vector<std::int64_t> a(w.a.begin(), w.a.end());
    std::vector<std::int64_t> b(w.b.begin(), w.b.end());
    report.witnesses.emplace(value,
                             SpectrumWitness{ResidueSet::make(p, a), ResidueSet::make(p, b)});
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

void check_budget(std::uint64_t cost, std::uint64_t budget) {
  if (cost > budget) throw BudgetExceeded(cost, budget);
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) noexcept {
  std::uint64_t r = 0;
  return __builtin_mul_overflow(x, y, &r) ? UINT64_MAX : r;
}

}  // namespace

std::string_view to_string(SpectrumMode mode) noexcept {
  switch (mode) {
    case SpectrumMode::exhaustive: return "exhaustive";
    case SpectrumMode::fixed_interval_b: return "fixed-interval-B";
    case SpectrumMode::multiset_dp: return "multiset-dp";
    case SpectrumMode::schur: return "schur";
  }
  return "exhaustive";
}

std::optional<SpectrumMode> parse_spectrum_mode(std::string_view name) noexcept {
  for (const auto mode : {SpectrumMode::exhaustive, SpectrumMode::fixed_interval_b,
                          SpectrumMode::multiset_dp, SpectrumMode::schur}) {
    if (to_string(mode) == name) return mode;
  }
  return std::nullopt;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is C(n - k + i, i); cancel the gcd first so the
    // division is exact before multiplying.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(r / g, factor, &r)) return UINT64_MAX;
  }
  return r;
}

SpectrumReport spectrum_exhaustive(std::int64_t p_in, std::int64_t s_in, std::int64_t t_in,
                                   const SpectrumOptions& options) {
  const auto start = Clock::now();
  const auto params = Params::make(p_in, s_in, t_in);
  const std::uint32_t p = params.p;
  const std::uint32_t s = params.s;
  const std::uint32_t t = params.t;
  check_budget(saturating_mul(binomial_saturating(p, s), binomial_saturating(p, t)),
               options.budget);

  // One work item per (min A, min B), heaviest first.
  struct Item {
    std::uint32_t a0;
    std::uint32_t b0;
    std::uint64_t cost;
  };
  std::vector<Item> items;
  for (std::uint32_t a0 = 0; a0 + s <= p; ++a0) {
    for (std::uint32_t b0 = 0; b0 + t <= p; ++b0) {
      items.push_back({a0, b0,
                       saturating_mul(binomial_saturating(p - a0 - 1, s - 1),
                                      binomial_saturating(p - b0 - 1, t - 1))});
    }
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& x, const Item& y) { return x.cost > y.cost; });

  const std::size_t max_value = std::size_t{s} * t;
  auto tally = run_items(items.size(), max_value, options.jobs, [&](std::size_t i, Tally& local) {
    Elements b;
    b.reserve(t);
    for_each_subset_from(p, t, items[i].b0, b, [&](const Elements& bset) {
      const auto overlap = overlap_vector(p, bset);
      sweep_sets_a(p, s, items[i].a0, overlap, bset, options.want_witnesses, local);
    });
  });
  return finish_report(p, s, t, SpectrumMode::exhaustive, lower_bound_f(p, s, t),
                       upper_bound_g(p, s, t), tally.attained, std::move(tally.witnesses), start);
}

SpectrumReport spectrum_fixed_interval_b(std::int64_t p_in, std::int64_t s_in, std::int64_t t_in,
                                         const SpectrumOptions& options) {
  const auto start = Clock::now();
  const auto params = Params::make(p_in, s_in, t_in);
  const std::uint32_t p = params.p;
  const std::uint32_t s = params.s;
  const std::uint32_t t = params.t;
  check_budget(binomial_saturating(p, s), options.budget);

  Elements b(t);
  for (std::uint32_t i = 0; i < t; ++i) b[i] = i;
  const auto overlap = overlap_vector(p, b);

  auto tally = run_items(p - s + 1, std::size_t{s} * t, options.jobs,
                         [&](std::size_t a0, Tally& local) {
                           sweep_sets_a(p, s, static_cast<std::uint32_t>(a0), overlap, b,
                                        options.want_witnesses, local);
                         });
  return finish_report(p, s, t, SpectrumMode::fixed_interval_b, lower_bound_f(p, s, t),
                       upper_bound_g(p, s, t), tally.attained, std::move(tally.witnesses), start);
}

std::vector<std::vector<std::int64_t>> multiset_dp_all_sizes(const ShiftProfile& profile,
                                                             std::int64_t max_k) {
  if (max_k < 0) throw DomainError("multi-subset size must be non-negative");
  const std::size_t rows = static_cast<std::size_t>(max_k) + 1;
  const std::size_t top_value = profile.counts.empty() ? 0 : profile.counts.size() - 1;
  const std::size_t nbits = static_cast<std::size_t>(max_k) * top_value + 1;
  const std::size_t nwords = detail::word_count(nbits);

  // table[k] has bit x set iff some k-element multi-subset sums to x.
  std::vector<std::vector<std::uint64_t>> table(rows, std::vector<std::uint64_t>(nwords, 0));
  table[0][0] = 1;
  std::size_t placed = 0;
  for (std::size_t v = 0; v < profile.counts.size(); ++v) {
    for (std::int64_t copy = 0; copy < profile.counts[v]; ++copy) {
      ++placed;
      for (std::size_t k = std::min(placed, rows - 1); k >= 1; --k) {
        detail::or_shifted_left(table[k], table[k - 1], v, nbits);
      }
    }
  }

  std::vector<std::vector<std::int64_t>> out(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t w = 0; w < nwords; ++w) {
      std::uint64_t bits = table[k][w];
      while (bits != 0) {
        out[k].push_back(static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        bits &= bits - 1;
      }
    }
  }
  return out;
}

SpectrumReport spectrum_multiset_dp(std::int64_t p_in, std::int64_t s_in, std::int64_t t_in) {
  const auto start = Clock::now();
  const auto params = Params::make(p_in, s_in, t_in);
  const auto profile = build_shift_profile(params.p, params.t);
  const auto sums = multiset_dp_all_sizes(profile, params.s);
  std::vector<char> attained(std::size_t{params.s} * params.t + 1, 0);
  for (const auto v : sums[params.s]) attained[static_cast<std::size_t>(v)] = 1;
  return finish_report(params.p, params.s, params.t, SpectrumMode::multiset_dp,
                       lower_bound_f(params.p, params.s, params.t),
                       upper_bound_g(params.p, params.s, params.t), attained, {}, start);
}

SpectrumReport schur_spectrum(std::int64_t p_in, std::int64_t s_in, const SpectrumOptions& options) {
  const auto start = Clock::now();
  const auto params = Params::make(p_in, s_in, s_in);
  const std::uint32_t p = params.p;
  const std::uint32_t s = params.s;
  check_budget(binomial_saturating(p, s), options.budget);

  auto tally = run_items(p - s + 1, std::size_t{s} * s, options.jobs,
                         [&](std::size_t a0, Tally& local) {
                           std::vector<char> member(p, 0);
                           Elements buf;
                           for_each_subset_from(p, s, static_cast<std::uint32_t>(a0), buf,
                                                [&](const Elements& a) {
                                                  for (const auto x : a) member[x] = 1;
                                                  std::int64_t r = 0;
                                                  for (const auto x : a) {
                                                    for (const auto y : a) {
                                                      const auto c = x + y;
                                                      r += member[c >= p ? c - p : c];
                                                    }
                                                  }
                                                  for (const auto x : a) member[x] = 0;
                                                  auto& seen = local.attained[static_cast<std::size_t>(r)];
                                                  if (!seen) {
                                                    seen = 1;
                                                    if (options.want_witnesses) {
                                                      local.witnesses.try_emplace(r, WitnessPair{a, a});
                                                    }
                                                  }
                                                });
                         });
  return finish_report(p, s, s, SpectrumMode::schur, schur_lower_f_s(p, s), schur_upper_g_s(p, s),
                       tally.attained, std::move(tally.witnesses), start);
}

ScanResult exception_scan(std::int64_t p_min, std::int64_t p_max, const SpectrumOptions& options) {
  ScanResult result;
  if (p_max > kMaxModulus) throw InvalidModulus("scan upper end exceeds the modulus cap");
  SpectrumOptions run = options;
  run.want_witnesses = true;
  for (std::int64_t p = std::max<std::int64_t>(p_min, 3); p <= p_max; ++p) {
    if (p % 2 == 0 || is_prime(p)) continue;
    for (std::int64_t s = 1; s <= p - 1; ++s) {
      for (std::int64_t t = 1; t <= p - 1; ++t) {
        const auto cost = saturating_mul(binomial_saturating(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(s)),
                                         binomial_saturating(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(t)));
        if (cost > run.budget) {
          result.skipped.push_back({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(s),
                                    static_cast<std::uint32_t>(t), cost});
          continue;
        }
        auto report = spectrum_exhaustive(p, s, t, run);
        ++result.instances_checked;
        if (report.exceptions.empty()) continue;
        ScanRecord record{report.p, report.s, report.t, report.f, report.g, report.exceptions, {}};
        for (const auto value : report.exceptions) {
          auto& w = report.witnesses.at(value);
          if (count_naive(w.a, w.b) != value) {
            throw InvariantViolation("scan witness for r = " + std::to_string(value) +
                                     " does not re-count");
          }
          record.witnesses.emplace(value, std::move(w));
        }
        result.records.push_back(std::move(record));
      }
    }
  }
  return result;
}

}  // namespace addtrip

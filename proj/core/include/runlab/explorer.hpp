#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "runlab/audits.hpp"
#include "runlab/rational.hpp"
#include "runlab/report.hpp"

// Population-scale verification: exhaustive sweeps over canonical strings,
// deterministic random sweeps, run-density tables, Fibonacci words, and the
// nested-square-prefix scan.

namespace runlab {

/// Thrown when a sweep's estimated work exceeds its budget; carries the
/// estimate so the caller can report it.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(long long estimate_, long long budget_);
  long long estimate;
  long long budget;
};

/// Relabels symbols so each first occurrence introduces the next letter
/// 'a', 'b', ... — one representative per alphabet-permutation orbit. Runs
/// are invariant under relabeling, so analyzing the canonical form is
/// enough.
std::string canonical_form(std::string_view w);
bool is_canonical(std::string_view w);

/// Calls fn once per canonical string of exactly length len over an
/// alphabet of at most k symbols, in lexicographic order.
void enumerate_canonical(int k, int len, const std::function<void(const std::string&)>& fn);

/// Number of canonical strings of exactly length len (at most k symbols).
long long count_canonical(int k, int len);

/// Deterministic sample: string `index` of the stream defined by (k, len,
/// seed). Distinct indices are independent, so workers can split a sweep
/// without sharing generator state.
std::string random_string(int k, int len, std::uint64_t seed, std::uint64_t index);

/// F_1 = "b", F_2 = "a", F_m = F_{m-1} F_{m-2} (so F_5 = "abaab"). The
/// length guard rejects words longer than max_length.
std::string fibonacci_word(int m, long long max_length = 64'000'000);

struct FibStats {
  int m = 0;
  long long length = 0;
  long long runs = 0;
  Rational ratio;  // runs / length
};
FibStats fibonacci_stats(int m, long long max_length = 64'000'000);

/// For every suffix position and every chain u, v, x of square prefixes of
/// that suffix (uu a prefix of vv, vv a prefix of xx, |u| < |v| < |x|) with
/// u primitive, asserts |u| + |v| <= |x|.
AuditReport three_square_scan(std::string_view w);

struct SweepOptions {
  int alphabet = 2;
  int min_len = 1;
  int max_len = 14;     // exhaustive: inclusive length range
  int len = 64;         // random: fixed string length
  long long samples = 0;
  std::uint64_t seed = 0;
  std::vector<AuditId> audits;  // empty = all
  bool assert_mode = true;      // abort on first failure; survey mode records and continues
  int threads = 1;
  long long budget = 600'000'000;  // work-estimate guard for exhaustive sweeps
  AuditOptions audit_options;
  /// Every spot_check_every-th sample of a random sweep is re-checked
  /// against the quadratic oracle (full compare for short strings, per-run
  /// definition validation for long ones).
  long long spot_check_every = 100;
};

/// Enumerates canonical strings of each length in [min_len, max_len], runs
/// the selected audits on every one, and aggregates. Throws BudgetExceeded
/// when the estimated work exceeds options.budget.
SweepReport exhaustive_sweep(const SweepOptions& options);

/// Audits `samples` deterministic random strings of the given length.
/// Identical options (including seed) produce identical reports.
SweepReport random_sweep(const SweepOptions& options);

/// Per length n in [1, max_len]: the maximum run count and maximum exponent
/// sum over all strings of length n (canonical representatives), each with
/// one witness. For k = 2 the run-count bound max_runs <= n is asserted via
/// density_bound_holds.
DensityTable density_table(int k, int max_len, long long budget = 600'000'000,
                           int threads = 1);

}  // namespace runlab

#include "runlab/explorer.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <random>
#include <thread>

#include "runlab/delta.hpp"
#include "runlab/exponents.hpp"
#include "runlab/lce.hpp"
#include "runlab/periods.hpp"

namespace runlab {

BudgetExceeded::BudgetExceeded(long long estimate_, long long budget_)
    : std::runtime_error("estimated work " + std::to_string(estimate_) +
                         " exceeds the budget of " + std::to_string(budget_)),
      estimate(estimate_),
      budget(budget_) {}

std::string canonical_form(std::string_view w) {
  std::array<int, 256> relabel;
  relabel.fill(-1);
  std::string out;
  out.reserve(w.size());
  int next = 0;
  for (unsigned char c : w) {
    if (relabel[c] < 0) relabel[c] = next++;
    out.push_back(static_cast<char>('a' + relabel[c]));
  }
  return out;
}

bool is_canonical(std::string_view w) { return canonical_form(w) == w; }

namespace {

void enumerate_canonical_rec(int k, int len, std::string& buffer, int used,
                             const std::function<void(const std::string&)>& fn) {
  if (static_cast<int>(buffer.size()) == len) {
    fn(buffer);
    return;
  }
  const int limit = std::min(used + 1, k);
  for (int s = 0; s < limit; ++s) {
    buffer.push_back(static_cast<char>('a' + s));
    enumerate_canonical_rec(k, len, buffer, std::max(used, s + 1), fn);
    buffer.pop_back();
  }
}

}  // namespace

void enumerate_canonical(int k, int len, const std::function<void(const std::string&)>& fn) {
  if (k < 1 || len < 1) return;
  std::string buffer;
  buffer.reserve(len);
  enumerate_canonical_rec(k, len, buffer, 0, fn);
}

long long count_canonical(int k, int len) {
  if (k < 1 || len < 1) return 0;
  // ways[d] = canonical strings of the current length using exactly d symbols
  std::vector<long long> ways(k + 1, 0);
  ways[1] = 1;
  for (int pos = 1; pos < len; ++pos) {
    std::vector<long long> next(k + 1, 0);
    for (int d = 1; d <= k; ++d) {
      if (ways[d] == 0) continue;
      next[d] += ways[d] * d;
      if (d + 1 <= k) next[d + 1] += ways[d];
    }
    ways.swap(next);
  }
  long long total = 0;
  for (int d = 1; d <= k; ++d) total += ways[d];
  return total;
}

std::string random_string(int k, int len, std::uint64_t seed, std::uint64_t index) {
  if (k < 1 || len < 1) {
    throw std::invalid_argument("random_string: k and len must be positive");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  std::string out(static_cast<std::size_t>(len), 'a');
  // gen() % k instead of a distribution: distributions are not specified
  // bit-for-bit across standard libraries, and reports must be reproducible.
  for (auto& c : out) c = static_cast<char>('a' + gen() % k);
  return out;
}

std::string fibonacci_word(int m, long long max_length) {
  if (m < 1) {
    throw std::invalid_argument("fibonacci_word: m must be >= 1");
  }
  long long len_prev = 1, len_cur = 1;  // |F_1|, |F_2|
  for (int i = 3; i <= m; ++i) {
    len_cur += len_prev;
    len_prev = len_cur - len_prev;
    if (len_cur > max_length) throw BudgetExceeded(len_cur, max_length);
  }
  if (m == 1) return "b";
  std::string prev = "b", cur = "a";
  for (int i = 3; i <= m; ++i) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FibStats fibonacci_stats(int m, long long max_length) {
  const std::string word = fibonacci_word(m, max_length);
  FibStats stats;
  stats.m = m;
  stats.length = static_cast<long long>(word.size());
  stats.runs = enumerate_runs_fast(word).size();
  stats.ratio = Rational(stats.runs, stats.length);
  return stats;
}

namespace {

std::vector<int32_t> spf_sieve(int limit) {
  std::vector<int32_t> spf(std::max(limit, 1) + 1, 0);
  for (int i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (long long j = i; j <= limit; j += i) {
        if (spf[j] == 0) spf[j] = i;
      }
    }
  }
  return spf;
}

bool root_is_primitive(const LceIndex& lce, const std::vector<int32_t>& spf, int s, int p) {
  int rest = p;
  while (rest > 1) {
    const int prime = spf[rest];
    const int d = p / prime;
    if (lce.forward0(s, s + d) >= p - d) return false;
    while (rest % prime == 0) rest /= prime;
  }
  return true;
}

}  // namespace

AuditReport three_square_scan(std::string_view w) {
  AuditReport report;
  report.audit = "three-square";
  const int n = static_cast<int>(w.size());
  if (n < 4) return report;
  const LceIndex lce(w);
  const auto spf = spf_sieve(n / 2);
  for (int i = 0; i < n; ++i) {
    // Square prefixes of the suffix at i, in increasing root length.
    int max_primitive = 0;  // largest primitive root length seen so far
    int prev_square = 0;    // previous square root length (the v candidate)
    bool prev_primitive = false;
    for (int s = 1; 2 * s <= n - i; ++s) {
      if (lce.forward0(i, i + s) < s) continue;
      if (prev_square > 0 && max_primitive > 0) {
        report.bump("chains");
        // u = longest primitive square < v; the tightest x is the next
        // square, i.e. this one.
        if (max_primitive + prev_square > s) {
          report.fail("position " + std::to_string(i + 1) + ": square prefixes |u|=" +
                      std::to_string(max_primitive) + ", |v|=" + std::to_string(prev_square) +
                      ", |x|=" + std::to_string(s) + " violate |u|+|v| <= |x|");
        }
      }
      if (prev_primitive) max_primitive = std::max(max_primitive, prev_square);
      prev_square = s;
      prev_primitive = root_is_primitive(lce, spf, i, s);
    }
  }
  return report;
}

namespace {

struct Extreme {
  bool set = false;
  Rational value;
  std::string witness;

  void offer(const Rational& candidate, const std::string& w) {
    if (!set || candidate > value) {
      set = true;
      value = candidate;
      witness = w;
    }
  }
  // Chunk merge: earlier chunks win ties, keeping thread counts invisible.
  void merge(const Extreme& other) {
    if (!other.set) return;
    if (!set || other.value > value) {
      set = true;
      value = other.value;
      witness = other.witness;
    }
  }
};

struct ChunkResult {
  std::map<std::string, SweepReport::Tally> audits;
  std::map<std::string, long long> counters;
  Extreme max_runs;
  Extreme max_sum_exp;
  bool failed = false;
};

void analyze_one(const std::string& s, const std::string& label,
                 const std::vector<AuditId>& audits, const AuditOptions& audit_options,
                 bool spot_check, ChunkResult& out) {
  const RunSet runs =
      s.size() <= 64 ? enumerate_runs_oracle(s) : enumerate_runs_fast(s);
  const long long n = static_cast<long long>(s.size());
  out.max_runs.offer(Rational(runs.size(), n), label);
  out.max_sum_exp.offer(sum_of_exponents(runs) / Rational(n), label);
  if (spot_check) {
    // Random sweeps re-check a fixed fraction of samples against the
    // definition: a full oracle comparison while that stays affordable,
    // otherwise a per-run validation.
    auto& tally = out.audits["spot-check"];
    ++tally.strings_checked;
    bool ok = true;
    if (s.size() <= 2048) {
      ok = enumerate_runs_oracle(s) == runs;
    } else {
      for (const Run& run : runs.runs()) {
        if (!is_valid_run(s, run)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      ++tally.failures;
      out.failed = true;
      if (static_cast<int>(tally.failure_witnesses.size()) < kWitnessCap) {
        tally.failure_witnesses.push_back(label + " | fast enumeration failed the oracle spot-check");
      }
    }
  }
  for (AuditId id : audits) {
    const AuditReport report = run_audit(id, s, runs, audit_options);
    auto& tally = out.audits[std::string(audit_name(id))];
    ++tally.strings_checked;
    for (const auto& entry : report.entries) {
      if (entry.kind == AuditEntry::Kind::fail) {
        ++tally.failures;
        out.failed = true;
        if (static_cast<int>(tally.failure_witnesses.size()) < kWitnessCap) {
          tally.failure_witnesses.push_back(label + " | " + entry.message);
        }
      } else if (entry.kind == AuditEntry::Kind::flag) {
        ++tally.flags;
      }
    }
    for (const auto& [key, value] : report.counters) {
      out.counters[std::string(audit_name(id)) + "." + key] += value;
    }
  }
}

void merge_chunk(SweepReport& report, Extreme& max_runs, Extreme& max_sum_exp,
                 const ChunkResult& chunk) {
  for (const auto& [name, tally] : chunk.audits) {
    auto& dst = report.audits[name];
    dst.strings_checked += tally.strings_checked;
    dst.failures += tally.failures;
    dst.flags += tally.flags;
    for (const auto& witness : tally.failure_witnesses) {
      if (static_cast<int>(dst.failure_witnesses.size()) < kWitnessCap) {
        dst.failure_witnesses.push_back(witness);
      }
    }
  }
  for (const auto& [key, value] : chunk.counters) report.counters[key] += value;
  max_runs.merge(chunk.max_runs);
  max_sum_exp.merge(chunk.max_sum_exp);
}

// Processes tasks [0, count) in deterministic chunks across threads. make(i)
// materializes task i's string. In assert mode the sweep stops at the first
// failing chunk: exactly the chunks up to and including it are merged, so
// reports stay reproducible regardless of thread scheduling.
SweepReport run_population(const SweepOptions& options, long long count,
                           const std::function<std::string(long long)>& make,
                           long long spot_every = 0) {
  SweepReport report;
  report.mode = options.assert_mode ? "assert" : "survey";
  const std::vector<AuditId> audits = options.audits.empty() ? all_audits() : options.audits;

  const int threads = std::max(1, options.threads);
  const long long chunk_size =
      std::max<long long>(1, std::min<long long>(4096, (count + threads - 1) / threads));
  const long long chunks = count == 0 ? 0 : (count + chunk_size - 1) / chunk_size;

  std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
  std::atomic<long long> next_chunk{0};
  std::atomic<long long> first_failed_chunk{chunks};  // min failing chunk index

  auto worker = [&] {
    for (;;) {
      const long long c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      if (options.assert_mode && c > first_failed_chunk.load()) continue;
      ChunkResult& result = results[static_cast<std::size_t>(c)];
      const long long lo = c * chunk_size;
      const long long hi = std::min(count, lo + chunk_size);
      for (long long i = lo; i < hi; ++i) {
        const bool spot = spot_every > 0 && i % spot_every == 0;
        const std::string s = make(i);
        // Reports quote short strings verbatim; long random samples are
        // referenced by index, which regenerates them exactly.
        const std::string label =
            s.size() <= 256 ? s : "sample:" + std::to_string(i) + "/n:" +
                                      std::to_string(s.size());
        analyze_one(s, label, audits, options.audit_options, spot, result);
      }
      if (result.failed) {
        long long expected = first_failed_chunk.load();
        while (c < expected && !first_failed_chunk.compare_exchange_weak(expected, c)) {
        }
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Extreme max_runs, max_sum_exp;
  const long long last_chunk = std::min<long long>(chunks - 1, first_failed_chunk.load());
  for (long long c = 0; c <= last_chunk; ++c) {
    merge_chunk(report, max_runs, max_sum_exp, results[static_cast<std::size_t>(c)]);
  }
  if (options.assert_mode && first_failed_chunk.load() < chunks) {
    report.counters["aborted_at_chunk"] = first_failed_chunk.load();
  }
  if (max_runs.set) {
    report.max_runs_ratio = max_runs.value.str();
    report.max_runs_witness = max_runs.witness;
  }
  if (max_sum_exp.set) {
    report.max_sum_exp_ratio = max_sum_exp.value.str();
    report.max_sum_exp_witness = max_sum_exp.witness;
  }
  return report;
}

// Rough per-string cost models for the budget guards. Exhaustive sweeps run
// the quadratic reference audits, random sweeps lean on the n log n
// enumerator (the quadratic audits bow out via their own work budgets on
// long inputs).
long long string_cost(int len) {
  return static_cast<long long>(len) * len + 60LL * len + 600;
}

long long random_string_cost(int len) {
  int log2len = 0;
  while ((1 << log2len) < len) ++log2len;
  return 4LL * len * log2len + 600;
}

}  // namespace

SweepReport exhaustive_sweep(const SweepOptions& options) {
  if (options.alphabet < 2) {
    throw std::invalid_argument("exhaustive_sweep: alphabet size must be >= 2");
  }
  if (options.min_len < 1 || options.max_len < options.min_len) {
    throw std::invalid_argument("exhaustive_sweep: bad length range");
  }
  long long estimate = 0;
  long long population = 0;
  for (int len = options.min_len; len <= options.max_len; ++len) {
    const long long reps = count_canonical(options.alphabet, len);
    population += reps;
    estimate += reps * string_cost(len);
    if (estimate > options.budget) throw BudgetExceeded(estimate, options.budget);
  }

  std::vector<std::string> strings;
  strings.reserve(static_cast<std::size_t>(population));
  for (int len = options.min_len; len <= options.max_len; ++len) {
    enumerate_canonical(options.alphabet, len,
                        [&](const std::string& s) { strings.push_back(s); });
  }

  SweepReport report = run_population(options, population,
                                      [&](long long i) { return strings[i]; });
  report.kind = "exhaustive";
  report.alphabet = options.alphabet;
  report.min_len = options.min_len;
  report.max_len = options.max_len;
  report.population = population;
  // Each canonical representative stands for every injective relabeling of
  // its d distinct symbols into the k available ones.
  long long orbit_total = 0;
  for (const auto& s : strings) {
    const int d = *std::max_element(s.begin(), s.end()) - 'a' + 1;
    long long orbit = 1;
    for (int t = 0; t < d; ++t) orbit *= options.alphabet - t;
    orbit_total += orbit;
  }
  report.counters["orbit_total"] = orbit_total;
  return report;
}

SweepReport random_sweep(const SweepOptions& options) {
  if (options.alphabet < 2) {
    throw std::invalid_argument("random_sweep: alphabet size must be >= 2");
  }
  if (options.len < 1) {
    throw std::invalid_argument("random_sweep: length must be >= 1");
  }
  if (options.samples < 0) {
    throw std::invalid_argument("random_sweep: negative sample count");
  }
  const long long estimate = options.samples * random_string_cost(options.len);
  if (estimate > options.budget) throw BudgetExceeded(estimate, options.budget);

  SweepReport report = run_population(
      options, options.samples,
      [&](long long i) {
        return random_string(options.alphabet, options.len, options.seed,
                             static_cast<std::uint64_t>(i));
      },
      options.spot_check_every);
  report.kind = "random";
  report.alphabet = options.alphabet;
  report.min_len = options.len;
  report.max_len = options.len;
  report.population = options.samples;
  report.seed = options.seed;
  report.generator = "mt19937_64/seed_seq(seed,index)";
  return report;
}

DensityTable density_table(int k, int max_len, long long budget, int threads) {
  if (k < 2 || max_len < 1) {
    throw std::invalid_argument("density_table: need k >= 2 and max_len >= 1");
  }
  long long estimate = 0;
  for (int len = 1; len <= max_len; ++len) {
    estimate += count_canonical(k, len) * string_cost(len);
    if (estimate > budget) throw BudgetExceeded(estimate, budget);
  }

  DensityTable table;
  table.alphabet = k;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> strings;
    enumerate_canonical(k, len, [&](const std::string& s) { strings.push_back(s); });

    struct Partial {
      long long max_runs = -1;
      std::string runs_witness;
      Rational max_sum;
      bool sum_set = false;
      std::string sum_witness;
    };
    const int workers = std::max(1, threads);
    std::vector<Partial> partial(workers);
    auto analyze_range = [&](int worker_index, std::size_t lo, std::size_t hi) {
      Partial& p = partial[worker_index];
      for (std::size_t i = lo; i < hi; ++i) {
        const RunSet runs = len <= 64 ? enumerate_runs_oracle(strings[i])
                                      : enumerate_runs_fast(strings[i]);
        if (runs.size() > p.max_runs) {
          p.max_runs = runs.size();
          p.runs_witness = strings[i];
        }
        const Rational total = sum_of_exponents(runs);
        if (!p.sum_set || total > p.max_sum) {
          p.sum_set = true;
          p.max_sum = total;
          p.sum_witness = strings[i];
        }
      }
    };
    if (workers == 1) {
      analyze_range(0, 0, strings.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t per = (strings.size() + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        const std::size_t lo = std::min(strings.size(), per * t);
        const std::size_t hi = std::min(strings.size(), lo + per);
        pool.emplace_back(analyze_range, t, lo, hi);
      }
      for (auto& th : pool) th.join();
    }

    DensityRow row;
    row.n = len;
    long long best_runs = -1;
    for (const Partial& p : partial) {
      // Workers cover index-ordered slices; strict comparisons keep the
      // earliest witness.
      if (p.max_runs > best_runs) {
        best_runs = p.max_runs;
        row.runs_witness = p.runs_witness;
      }
    }
    row.max_runs = std::max<long long>(0, best_runs);
    Rational best_sum;
    bool sum_set = false;
    std::string sum_witness;
    for (const Partial& p : partial) {
      if (p.sum_set && (!sum_set || p.max_sum > best_sum)) {
        sum_set = true;
        best_sum = p.max_sum;
        sum_witness = p.sum_witness;
      }
    }
    row.max_sum_exp = best_sum.str();
    row.sum_exp_witness = sum_witness;
    if (k == 2 && row.max_runs > len) table.density_bound_holds = false;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace runlab

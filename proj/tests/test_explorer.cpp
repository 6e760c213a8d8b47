#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "runlab/exponents.hpp"
#include "runlab/explorer.hpp"
#include "runlab/runs.hpp"
#include "runlab/serialize.hpp"

using namespace runlab;

TEST_CASE("canonical form and soundness") {
  CHECK(canonical_form("bab") == "aba");
  CHECK(canonical_form("cacb") == "abac");
  CHECK(canonical_form("aaa") == "aaa");
  CHECK(is_canonical("aab"));
  CHECK_FALSE(is_canonical("ba"));
  // analysis results agree between a string and its canonical image
  for (int i = 0; i < 50; ++i) {
    const std::string w = random_string(4, 30 + i, 2222, i);
    const std::string c = canonical_form(w);
    CHECK(enumerate_runs_fast(w).size() == enumerate_runs_fast(c).size());
    CHECK(sum_of_exponents(enumerate_runs_fast(w)) == sum_of_exponents(enumerate_runs_fast(c)));
  }
}

TEST_CASE("canonical enumeration counts and contents") {
  std::vector<std::string> len2;
  enumerate_canonical(2, 2, [&](const std::string& s) { len2.push_back(s); });
  CHECK(len2 == std::vector<std::string>{"aa", "ab"});
  CHECK(enumerate_runs_oracle("aa").size() == 1);
  CHECK(enumerate_runs_oracle("ab").size() == 0);

  long long count = 0;
  enumerate_canonical(2, 10, [&](const std::string&) { ++count; });
  CHECK(count == 512);  // 2^(n-1) for binary
  CHECK(count_canonical(2, 10) == 512);
  CHECK(count_canonical(3, 3) == 5);   // aaa aab aba abb abc
  CHECK(count_canonical(3, 10) == 9842);
  CHECK(count_canonical(2, 1) == 1);

  // every enumerated string is canonical and unique
  std::set<std::string> seen;
  enumerate_canonical(3, 6, [&](const std::string& s) {
    CHECK(is_canonical(s));
    CHECK(seen.insert(s).second);
  });
  CHECK(static_cast<long long>(seen.size()) == count_canonical(3, 6));
}

TEST_CASE("random strings are deterministic per (seed, index)") {
  const std::string a = random_string(2, 64, 9, 3);
  CHECK(a == random_string(2, 64, 9, 3));
  CHECK(a != random_string(2, 64, 9, 4));  // overwhelmingly likely
  CHECK(a != random_string(2, 64, 10, 3));
  for (char c : random_string(4, 100, 5, 0)) {
    CHECK(c >= 'a');
    CHECK(c <= 'd');
  }
}

TEST_CASE("fibonacci words") {
  CHECK(fibonacci_word(1) == "b");
  CHECK(fibonacci_word(2) == "a");
  CHECK(fibonacci_word(3) == "ab");
  CHECK(fibonacci_word(4) == "aba");
  CHECK(fibonacci_word(5) == "abaab");
  CHECK(enumerate_runs_fast(fibonacci_word(2)).empty());
  CHECK_THROWS_AS(fibonacci_word(0), std::invalid_argument);
  CHECK_THROWS_AS(fibonacci_word(60, 1000), BudgetExceeded);
}

TEST_CASE("fibonacci run density stays below 1") {
  for (int m = 5; m <= 22; ++m) {
    const FibStats stats = fibonacci_stats(m);
    CHECK(stats.ratio < Rational(1));
    CHECK(stats.runs <= stats.length);
  }
  // frozen spot checks
  CHECK(fibonacci_stats(10).length == 55);
  CHECK(fibonacci_stats(10).runs == 39);
}

TEST_CASE("three-square scan clean on exhaustive binary strings") {
  for (int len = 1; len <= 14; ++len) {
    enumerate_canonical(2, len, [&](const std::string& s) {
      CHECK(three_square_scan(s).passed());
    });
  }
}

TEST_CASE("three-square scan finds chains in square-rich strings") {
  const AuditReport report = three_square_scan("aabaabaabaabaabaa");
  CHECK(report.passed());
  CHECK(report.counters.at("chains") > 0);
  // vacuously clean when fewer than three nested square prefixes exist
  const AuditReport tiny = three_square_scan("ab");
  CHECK(tiny.passed());
  CHECK(tiny.counters.count("chains") == 0);
}

TEST_CASE("density table fixtures for binary strings") {
  const DensityTable table = density_table(2, 13);
  REQUIRE(table.rows.size() == 13);
  const std::vector<long long> max_runs{0, 1, 1, 2, 2, 3, 4, 5, 5, 6, 7, 8, 8};
  const std::vector<std::string> max_sum{"0/1",  "2/1",  "3/1",  "4/1",  "5/1",
                                         "6/1",  "8/1",  "10/1", "11/1", "25/2",
                                         "29/2", "16/1", "521/30"};
  for (int i = 0; i < 13; ++i) {
    CHECK(table.rows[i].n == i + 1);
    CHECK(table.rows[i].max_runs == max_runs[i]);
    CHECK(table.rows[i].max_sum_exp == max_sum[i]);
  }
  CHECK(table.density_bound_holds);
  // max runs is monotone in n
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[i].max_runs >= table.rows[i - 1].max_runs);
  }
  // witnesses reproduce their statistics
  for (const auto& row : table.rows) {
    CHECK(enumerate_runs_oracle(row.runs_witness).size() == row.max_runs);
    CHECK(sum_of_exponents(enumerate_runs_oracle(row.sum_exp_witness)).str() ==
          row.max_sum_exp);
  }
}

TEST_CASE("density table respects its budget guard") {
  CHECK_THROWS_AS(density_table(2, 64, 1000), BudgetExceeded);
}

TEST_CASE("exhaustive sweep over binary strings up to length 12 is clean") {
  SweepOptions options;
  options.alphabet = 2;
  options.max_len = 12;
  const SweepReport report = exhaustive_sweep(options);
  CHECK(report.passed());
  CHECK(report.population == 4095);  // sum of 2^(n-1)
  CHECK(report.kind == "exhaustive");
  for (const auto& [name, tally] : report.audits) {
    CHECK(tally.strings_checked == 4095);
    CHECK(tally.failures == 0);
  }
  // the max-runs witness reproduces its ratio
  const RunSet witness_runs = enumerate_runs_oracle(report.max_runs_witness);
  CHECK(Rational(witness_runs.size(),
                 static_cast<long long>(report.max_runs_witness.size()))
            .str() == report.max_runs_ratio);
}

TEST_CASE("exhaustive sweep budget guard refuses big populations") {
  SweepOptions options;
  options.alphabet = 2;
  options.max_len = 40;
  CHECK_THROWS_AS(exhaustive_sweep(options), BudgetExceeded);
  options.max_len = 0;
  CHECK_THROWS_AS(exhaustive_sweep(options), std::invalid_argument);
  options.max_len = 8;
  options.alphabet = 1;
  CHECK_THROWS_AS(exhaustive_sweep(options), std::invalid_argument);
}

TEST_CASE("random sweep determinism and spot checks") {
  SweepOptions options;
  options.alphabet = 2;
  options.len = 256;
  options.samples = 200;
  options.seed = 42;
  options.spot_check_every = 50;
  const SweepReport a = random_sweep(options);
  const SweepReport b = random_sweep(options);
  CHECK(sweep_to_json(a) == sweep_to_json(b));
  CHECK(a.passed());
  CHECK(a.audits.count("spot-check") == 1);
  CHECK(a.audits.at("spot-check").strings_checked == 4);
  CHECK(a.audits.at("spot-check").failures == 0);

  options.seed = 43;
  CHECK(sweep_to_json(random_sweep(options)) != sweep_to_json(a));

  options.samples = 0;
  const SweepReport empty = random_sweep(options);
  CHECK(empty.population == 0);
  CHECK(empty.audits.empty());
}

TEST_CASE("multithreaded sweeps merge deterministically") {
  SweepOptions serial;
  serial.alphabet = 2;
  serial.max_len = 11;
  serial.threads = 1;
  SweepOptions parallel = serial;
  parallel.threads = 4;
  CHECK(sweep_to_json(exhaustive_sweep(serial)) == sweep_to_json(exhaustive_sweep(parallel)));
}

TEST_CASE("exhaustive sweeps account for the whole relabeling orbit") {
  SweepOptions options;
  options.alphabet = 2;
  options.max_len = 10;
  options.audits = {AuditId::density};
  const SweepReport report = exhaustive_sweep(options);
  // every binary canonical string stands for exactly 2 strings, so the
  // orbit total is sum of 2^n for n in [1, 10]
  CHECK(report.counters.at("orbit_total") == 2046);
  CHECK(report.population == 1023);
}

TEST_CASE("three-close audit holds on a large random population" * doctest::timeout(120)) {
  SweepOptions options;
  options.alphabet = 2;
  options.len = 512;
  options.samples = 100000;
  options.seed = 20080111;
  options.audits = {AuditId::three_close};
  options.threads = 2;
  options.budget = 60'000'000'000;
  options.spot_check_every = 10000;
  const SweepReport report = random_sweep(options);
  CHECK(report.passed());
  CHECK(report.audits.at("three-close").strings_checked == 100000);
  CHECK(report.audits.at("three-close").failures == 0);
}

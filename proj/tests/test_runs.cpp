#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "runlab/explorer.hpp"
#include "runlab/periods.hpp"
#include "runlab/runs.hpp"

using namespace runlab;

namespace {

Run find_run(const RunSet& runs, int start, int end) {
  for (const Run& r : runs.runs()) {
    if (r.start == start && r.end == end) return r;
  }
  REQUIRE(false);
  return {};
}

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

std::string swapped_alphabet(std::string s) {
  for (char& c : s) c = c == 'a' ? 'b' : (c == 'b' ? 'a' : c);
  return s;
}

}  // namespace

TEST_CASE("the six runs of abbababbaba") {
  const std::string w = "abbababbaba";
  const RunSet runs = enumerate_runs_oracle(w);
  REQUIRE(runs.size() == 6);
  // sorted by (start, period)
  const std::vector<Run> expected{
      {1, 11, 5}, {2, 3, 1}, {3, 7, 2}, {5, 10, 3}, {7, 8, 1}, {8, 11, 2},
  };
  CHECK(runs.runs() == expected);

  const Run r37 = find_run(runs, 3, 7);
  CHECK(r37.period == 2);
  CHECK(r37.exponent() == Rational(5, 2));
  CHECK(r37.center() == 5);
  CHECK(r37.square_end() == 6);
  CHECK(square_of(r37, w) == "baba");

  const Run whole = find_run(runs, 1, 11);
  CHECK(whole.period == 5);
  CHECK(whole.exponent() == Rational(11, 5));
}

TEST_CASE("runs of the case-i example string") {
  const std::string w = "baabababaababababaab";
  const RunSet runs = enumerate_runs_oracle(w);
  // the three runs of interest, identified by their squares
  const Run x = find_run(runs, 5, 14);
  CHECK(x.period == 5);
  CHECK(x.center() == 10);
  CHECK(square_of(x, w) == "ababaababa");
  const Run y = find_run(runs, 1, 16);
  CHECK(y.period == 7);
  CHECK(y.center() == 8);
  CHECK(y.square_end() == 14);
  CHECK(square_of(y, w) == "baabababaababa");
  const Run z = find_run(runs, 3, 20);
  CHECK(z.period == 9);
  CHECK(z.center() == 12);
  CHECK(square_of(z, w) == "abababaababababaab");
}

TEST_CASE("degenerate inputs") {
  CHECK(enumerate_runs_oracle("ab").empty());
  CHECK(enumerate_runs_oracle("a").empty());
  CHECK(enumerate_runs_fast("ab").empty());
  CHECK(enumerate_runs_fast("a").empty());
  CHECK_THROWS_AS(enumerate_runs_oracle(""), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_runs_fast(""), std::invalid_argument);

  const RunSet aa = enumerate_runs_oracle("aa");
  REQUIRE(aa.size() == 1);
  CHECK(aa[0] == Run{1, 2, 1});

  // a full-string run with exponent exactly 2 counts: the border extension
  // conditions are vacuous there
  const RunSet abab = enumerate_runs_oracle("abab");
  REQUIRE(abab.size() == 1);
  CHECK(abab[0] == Run{1, 4, 2});

  const RunSet aaa = enumerate_runs_fast("aaa");
  REQUIRE(aaa.size() == 1);
  CHECK(aaa[0] == Run{1, 3, 1});
  CHECK(aaa[0].exponent() == Rational(3));
}

TEST_CASE("(ab)^k has exactly one run of period 2 and exponent k") {
  for (int k = 2; k <= 40; ++k) {
    std::string w;
    for (int t = 0; t < k; ++t) w += "ab";
    const RunSet runs = enumerate_runs_fast(w);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0] == Run{1, 2 * k, 2});
    CHECK(runs[0].exponent() == Rational(k));
  }
}

TEST_CASE("oracle and fast enumerations agree exhaustively (binary up to 14)") {
  for (int len = 1; len <= 14; ++len) {
    enumerate_canonical(2, len, [&](const std::string& s) {
      CHECK(enumerate_runs_oracle(s) == enumerate_runs_fast(s));
    });
  }
}

TEST_CASE("oracle and fast agree on random strings") {
  std::mt19937_64 gen(5150);
  for (int i = 0; i < 300; ++i) {
    const int k = 2 + static_cast<int>(gen() % 3);
    const int len = 1 + static_cast<int>(gen() % 700);
    const std::string w = random_string(k, len, 31337, i);
    CHECK(enumerate_runs_oracle(w) == enumerate_runs_fast(w));
  }
}

TEST_CASE("every reported run satisfies the full definition") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 60; ++i) {
    const std::string w = random_string(2 + i % 3, 40 + static_cast<int>(gen() % 200), 4, i);
    const RunSet runs = enumerate_runs_fast(w);
    for (const Run& run : runs.runs()) {
      CHECK(is_valid_run(w, run));
      // the square is never left-extendable with the same period
      if (run.start > 1) CHECK(w[run.start - 2] != w[run.start + run.period - 2]);
      // the root is primitive
      CHECK(is_primitive(std::string_view(w).substr(run.start - 1, run.period)));
    }
  }
}

TEST_CASE("distinct runs with the same period never overlap by p or more") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 80; ++i) {
    const std::string w = random_string(2, 30 + static_cast<int>(gen() % 300), 555, i);
    const RunSet runs = enumerate_runs_fast(w);
    const auto& all = runs.runs();
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        if (all[b].start > all[a].end) break;
        if (all[a].period != all[b].period) continue;
        const int overlap = std::min(all[a].end, all[b].end) - all[b].start + 1;
        CHECK(overlap < all[a].period);
      }
    }
  }
}

TEST_CASE("run count is invariant under reversal and alphabet permutation") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 100; ++i) {
    const std::string w = random_string(2, 5 + static_cast<int>(gen() % 120), 808, i);
    const int count = enumerate_runs_fast(w).size();
    CHECK(enumerate_runs_fast(reversed(w)).size() == count);
    CHECK(enumerate_runs_fast(swapped_alphabet(w)).size() == count);
  }
}

TEST_CASE("RunSet views") {
  const RunSet runs = enumerate_runs_oracle("abbababbaba");
  // by_center is ordered by center
  int prev = 0;
  for (int32_t idx : runs.by_center()) {
    CHECK(runs[idx].center() >= prev);
    prev = runs[idx].center();
  }
  CHECK(runs.with_period(1).size() == 2);
  CHECK(runs.with_period(2).size() == 2);
  CHECK(runs.with_period(4).empty());
  // no two runs share an interval
  for (int a = 0; a < runs.size(); ++a) {
    for (int b = a + 1; b < runs.size(); ++b) {
      CHECK((runs[a].start != runs[b].start || runs[a].end != runs[b].end));
    }
  }
}

TEST_CASE("fast enumerator accepts a prebuilt index but rejects a mismatched one") {
  const std::string w = "abaababaabaab";
  const LceIndex idx(w);
  CHECK(enumerate_runs_fast(w, idx) == enumerate_runs_fast(w));
  const LceIndex other("abc");
  CHECK_THROWS_AS(enumerate_runs_fast(w, other), std::invalid_argument);
}

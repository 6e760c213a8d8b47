#include <benchmark/benchmark.h>

#include <string>

#include "runlab/exponents.hpp"
#include "runlab/explorer.hpp"
#include "runlab/lce.hpp"
#include "runlab/periods.hpp"
#include "runlab/runs.hpp"

namespace {

using namespace runlab;

std::string make_input(const std::string& kind, int n) {
  if (kind == "random2") return random_string(2, n, 1, 0);
  if (kind == "random4") return random_string(4, n, 1, 0);
  if (kind == "periodic") {
    std::string s;
    s.reserve(n);
    while (static_cast<int>(s.size()) < n) s += "ab";
    s.resize(n);
    return s;
  }
  // fibonacci prefix
  int m = 3;
  std::string w = fibonacci_word(m);
  while (static_cast<int>(w.size()) < n) w = fibonacci_word(++m);
  w.resize(n);
  return w;
}

void BM_SmallestPeriod(benchmark::State& state) {
  const std::string w = make_input("random2", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_period(w));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SmallestPeriod)->Range(1 << 10, 1 << 20);

void BM_BuildLce(benchmark::State& state) {
  const std::string w = make_input("random2", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LceIndex idx(w);
    benchmark::DoNotOptimize(idx.forward(1, 2));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildLce)->Range(1 << 10, 1 << 20);

void BM_LceQuery(benchmark::State& state) {
  const std::string w = make_input("random2", 1 << 18);
  const LceIndex idx(w);
  int i = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(idx.forward(i, (i * 7919) % idx.size() + 1));
    i = i % (idx.size() - 1) + 1;
  }
}
BENCHMARK(BM_LceQuery);

void BM_EnumerateFast(benchmark::State& state, const char* kind) {
  const std::string w = make_input(kind, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_runs_fast(w).size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_EnumerateFast, random2, "random2")->Range(1 << 10, 1 << 20);
BENCHMARK_CAPTURE(BM_EnumerateFast, random4, "random4")->Range(1 << 10, 1 << 20);
BENCHMARK_CAPTURE(BM_EnumerateFast, periodic, "periodic")->Range(1 << 10, 1 << 20);
BENCHMARK_CAPTURE(BM_EnumerateFast, fibonacci, "fibonacci")->Range(1 << 10, 1 << 20);

void BM_EnumerateOracle(benchmark::State& state) {
  const std::string w = make_input("random2", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_runs_oracle(w).size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnumerateOracle)->Range(1 << 6, 1 << 12);

void BM_SumOfExponents(benchmark::State& state) {
  const std::string w = make_input("random2", static_cast<int>(state.range(0)));
  const RunSet runs = enumerate_runs_fast(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_of_exponents(runs));
  }
}
BENCHMARK(BM_SumOfExponents)->Range(1 << 10, 1 << 18);

}  // namespace

BENCHMARK_MAIN();

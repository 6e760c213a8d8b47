#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "runlab/explorer.hpp"
#include "runlab/lce.hpp"

using namespace runlab;

namespace {

int lce_forward_naive(std::string_view w, int i, int j) {
  int len = 0;
  while (i - 1 + len < static_cast<int>(w.size()) && j - 1 + len < static_cast<int>(w.size()) &&
         w[i - 1 + len] == w[j - 1 + len]) {
    ++len;
  }
  return len;
}

int lce_backward_naive(std::string_view w, int i, int j) {
  int len = 0;
  while (i - 1 - len >= 0 && j - 1 - len >= 0 && w[i - 1 - len] == w[j - 1 - len]) ++len;
  return len;
}

}  // namespace

TEST_CASE("lce on known strings") {
  const LceIndex idx("abaab");
  CHECK(idx.forward(1, 4) == 2);
  CHECK(idx.forward(1, 1) == 5);
  CHECK(idx.forward(2, 5) == 1);
  const LceIndex aaaa("aaaa");
  CHECK(aaaa.backward(4, 2) == 2);
  CHECK(aaaa.forward(2, 3) == 2);
  CHECK_THROWS_AS(LceIndex(""), std::invalid_argument);
  CHECK_THROWS_AS(idx.forward(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(idx.backward(1, 6), std::invalid_argument);
}

TEST_CASE("lce agrees with symbol-by-symbol comparison on random triples") {
  std::mt19937_64 gen(424242);
  int triples = 0;
  while (triples < 10000) {
    const int len = 1 + static_cast<int>(gen() % 512);
    const int k = 2 + static_cast<int>(gen() % 3);
    const std::string w = random_string(k, len, 77, triples);
    const LceIndex idx(w);
    for (int t = 0; t < 20 && triples < 10000; ++t, ++triples) {
      const int i = 1 + static_cast<int>(gen() % len);
      const int j = 1 + static_cast<int>(gen() % len);
      CHECK(idx.forward(i, j) == lce_forward_naive(w, i, j));
      CHECK(idx.backward(i, j) == lce_backward_naive(w, i, j));
    }
  }
}

TEST_CASE("lce exhaustive over short binary strings") {
  for (int len = 1; len <= 10; ++len) {
    enumerate_canonical(2, len, [&](const std::string& s) {
      const LceIndex idx(s);
      for (int i = 1; i <= len; ++i) {
        for (int j = 1; j <= len; ++j) {
          CHECK(idx.forward(i, j) == lce_forward_naive(s, i, j));
          CHECK(idx.backward(i, j) == lce_backward_naive(s, i, j));
        }
      }
    });
  }
}

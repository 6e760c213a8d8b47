#include <doctest.h>

#include <random>
#include <vector>

#include "runlab/rational.hpp"

using runlab::Rational;

TEST_CASE("rational normalization and accessors") {
  Rational r(10, 4);
  CHECK(r.num() == 5);
  CHECK(r.den() == 2);
  CHECK(Rational(-10, 4).str() == "-5/2");
  CHECK(Rational(10, -4).str() == "-5/2");  // sign moves to the numerator
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(7).str() == "7/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(5, 2) - Rational(2) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(-Rational(5, 2) == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational ordering is exact on bucket boundaries") {
  // 3 * delta_i = 2 * delta_{i+1} exactly; the tiling identity must hold
  // without any epsilon.
  for (int i = 0; i < 40; ++i) {
    Rational delta_i(runlab::BigInt(1), 2);
    Rational ratio(3, 2);
    for (int t = 0; t < i; ++t) delta_i *= ratio;
    const Rational delta_next = delta_i * ratio;
    CHECK(Rational(3) * delta_i == Rational(2) * delta_next);
  }
  CHECK(Rational(5, 2) < Rational(51, 20));
  CHECK(Rational(5, 2) > Rational(49, 20));
  CHECK(Rational(2, 1) <= Rational(2, 1));
}

TEST_CASE("rational floor") {
  CHECK(Rational(7, 2).floor_ll() == 3);
  CHECK(Rational(-7, 2).floor_ll() == -4);
  CHECK(Rational(6, 2).floor_ll() == 3);
  CHECK(Rational(0).floor_ll() == 0);
}

TEST_CASE("rational parse round-trips str") {
  for (const char* text : {"5/2", "-7/4", "0/1", "123456789123456789123/2", "3/1"}) {
    CHECK(Rational::parse(text).str() == text);
  }
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("balanced sum equals left fold") {
  std::mt19937_64 gen(12345);
  std::vector<Rational> values;
  Rational fold;
  for (int i = 0; i < 200; ++i) {
    Rational v(static_cast<long long>(gen() % 2000) - 1000,
               static_cast<long long>(gen() % 50) + 1);
    fold += v;
    values.push_back(std::move(v));
  }
  CHECK(runlab::sum(values) == fold);
  CHECK(runlab::sum(std::span<const Rational>{}) == Rational(0));
}

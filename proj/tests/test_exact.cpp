// Copyright 2026 The gridstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "gridstate/error.hpp"
#include "gridstate/exact.hpp"

using namespace gridstate;

TEST_CASE("rational reduces and orders") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational overflow is reported") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  try {
    (void)(big * Rational(3));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("rational arithmetic matches doubles") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> d(-50, 50), q(1, 40);
  for (int i = 0; i < 500; ++i) {
    const Rational a(d(gen), q(gen)), b(d(gen), q(gen));
    CHECK((a + b).to_double() == doctest::Approx(a.to_double() + b.to_double()));
    CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()));
    CHECK((a - b).to_double() == doctest::Approx(a.to_double() - b.to_double()));
    if (!b.is_zero()) CHECK((a / b).to_double() == doctest::Approx(a.to_double() / b.to_double()));
  }
}

TEST_CASE("squarefree split") {
  CHECK(squarefree_split(12) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(squarefree_split(1) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK(squarefree_split(50) == std::pair<std::int64_t, std::int64_t>{5, 2});
  for (std::int64_t r = 1; r < 300; ++r) {
    const auto [k, s] = squarefree_split(r);
    CHECK(k * k * s == r);
    for (std::int64_t p = 2; p * p <= s; ++p) CHECK(s % (p * p) != 0);
  }
}

TEST_CASE("amplitude canonical form") {
  const Amplitude a(1, 1, 8);  // sqrt 8 = 2 sqrt 2
  CHECK(a.p() == 2);
  CHECK(a.q() == 1);
  CHECK(a.r() == 2);
  CHECK(a.value() == doctest::Approx(std::sqrt(8.0)));
  CHECK(a.squared() == Rational(8));
  CHECK(Amplitude(3, 6, 1) == Amplitude(1, 2, 1));
  CHECK(Amplitude().is_one());
}

TEST_CASE("radical numbers") {
  const RadicalNumber s2(Amplitude(1, 1, 2)), s3(Amplitude(1, 1, 3));
  CHECK((s2 * s2) == RadicalNumber(2));
  CHECK((s2 * s3).to_double() == doctest::Approx(std::sqrt(6.0)));
  CHECK((s2 - s2).is_zero());
  CHECK((s2 + s3 - s2) == s3);
  CHECK(!(s2 + s3).is_rational());
  CHECK((RadicalNumber(1) - s2).sign() < 0);
  CHECK((RadicalNumber(3) - s2 - s3).sign() < 0);
  CHECK((s2 + s3).abs() == s2 + s3);
}

// Copyright 2026 The shorphase Authors
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

#include <doctest.h>

#include <cmath>
#include <random>

#include "shorphase/postprocess.hpp"

using namespace shorphase;

namespace {

std::set<BigInt> big_set(std::initializer_list<const char*> xs) {
  std::set<BigInt> s;
  for (const char* x : xs) s.insert(BigInt(x));
  return s;
}

}  // namespace

TEST_CASE("gcd against a divisor scan") {
  for (std::uint64_t x = 0; x <= 60; ++x) {
    for (std::uint64_t y = 1; y <= 60; ++y) {
      std::uint64_t want = 1;
      for (std::uint64_t d = 1; d <= std::max(x, y); ++d) {
        if (x % d == 0 && y % d == 0) want = d;
      }
      REQUIRE(gcd(BigInt(x), BigInt(y)) == want);
      REQUIRE(gcd(BigInt(y), BigInt(x)) == want);
    }
  }
  CHECK(gcd(0, 1591) == 1591);
  CHECK(gcd(518, 1591) == 37);
  CHECK(gcd(516, 1591) == 43);
  CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(gcd(-4, 6), std::invalid_argument);
}

TEST_CASE("modpow against repeated multiplication") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint64_t a = 0; a < 12; ++a) {
      std::uint64_t acc = 1 % n;
      for (std::uint64_t e = 0; e <= 30; ++e) {
        REQUIRE(modpow(a, e, n) == acc);
        acc = acc * a % n;
      }
    }
  }
  CHECK(modpow(2, 28, 1591) == 345);
  CHECK(modpow(2, 126, 1591) == 517);
  CHECK(modpow(2, 252, 1591) == 1);
  CHECK_THROWS_AS(modpow(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(modpow(2, -1, 5), std::invalid_argument);
}

TEST_CASE("phase to candidate order") {
  CHECK(phase_to_l(0.03515625, 1591) == 56);
  CHECK(phase_to_l(0.4531679550956503, 1591) == 721);
  CHECK(phase_to_l(0.0, 1591) == 0);
  CHECK(phase_to_l(BigInt(72), BigInt(2048), BigInt(1591)) == 56);
  // Halves round up: 1/2 * 3 = 1.5.
  CHECK(phase_to_l(0.5, 3) == 2);
  CHECK(phase_to_l(BigInt(1), BigInt(2), BigInt(3)) == 2);
  CHECK_THROWS_AS(phase_to_l(-0.1, 15), std::invalid_argument);
  CHECK_THROWS_AS(phase_to_l(std::nan(""), 15), std::invalid_argument);

  std::mt19937_64 rng(30);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double phase = u(rng);
    const std::uint64_t N = rng() % 100'000'000 + 3;
    const BigInt l = phase_to_l(phase, N);
    CHECK(std::abs(phase * static_cast<double>(N) - l.convert_to<double>()) <= 0.5 + 1e-6);
  }
}

TEST_CASE("postprocess on 1591") {
  CHECK(postprocess(56, 2, 1591) == big_set({"1", "43"}));
  const auto odd = postprocess(267, 2, 1591);
  CHECK(odd.count(43) == 1);
  CHECK(odd.count(1) == 1);
  CHECK(postprocess(0, 2, 1591) == big_set({"1", "1591"}));
  CHECK(postprocess(252, 2, 1591) == big_set({"37", "43"}));

  const auto ev = evaluate_candidate(721, 2, 1591);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].exponent == 720);
  CHECK(ev[1].exponent == 722);
  CHECK(evaluate_candidate(56, 2, 1591).size() == 1);

  for (std::uint64_t l = 0; l < 600; ++l) {
    for (const auto& d : postprocess(l, 2, 1591)) REQUIRE(1591 % d == 0);
  }
}

TEST_CASE("big-integer run logs") {
  const BigInt N("237504336099404000");
  const BigInt l("59376084469856408");
  CHECK(postprocess(l, 3, N) == big_set({"2", "80"}));
  CHECK(phase_to_l(0.2500000018736728, N) == l);

  CHECK(phase_to_l(0.531250071929831, 1593389363) == 846488214);
  CHECK(postprocess(846488214, 4, 1593389363) == big_set({"1", "31981"}));
}

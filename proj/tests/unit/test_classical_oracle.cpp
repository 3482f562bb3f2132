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

#include <numeric>

#include "shorphase/classical_oracle.hpp"
#include "shorphase/errors.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/postprocess.hpp"

using namespace shorphase;

TEST_CASE("multiplicative order") {
  CHECK(oracle::multiplicative_order(2, 15) == 4u);
  CHECK(oracle::multiplicative_order(7, 15) == 4u);
  CHECK(oracle::multiplicative_order(2, 1591) == 252u);
  CHECK(oracle::multiplicative_order(2, 21) == 6u);
  CHECK_FALSE(oracle::multiplicative_order(3, 9).has_value());
  CHECK_FALSE(oracle::multiplicative_order(6, 15).has_value());
}

TEST_CASE("order is minimal") {
  for (std::uint64_t N = 3; N <= 200; ++N) {
    for (std::uint64_t a = 2; a < N; ++a) {
      const auto r = oracle::multiplicative_order(a, N);
      REQUIRE(r.has_value() == (std::gcd(a, N) == 1));
      if (!r) continue;
      std::uint64_t x = 1;
      for (std::uint64_t k = 1; k <= *r; ++k) {
        x = x * a % N;
        REQUIRE((x == 1) == (k == *r));
      }
    }
  }
}

TEST_CASE("trial factorization") {
  const auto f15 = oracle::trial_factor(15);
  CHECK(f15.divisors == std::vector<std::uint64_t>{1, 3, 5, 15});
  CHECK_FALSE(f15.is_prime());

  const auto f1591 = oracle::trial_factor(1591);
  CHECK(f1591.divisors == std::vector<std::uint64_t>{1, 37, 43, 1591});
  REQUIRE(f1591.prime_powers.size() == 2);
  CHECK(f1591.prime_powers[0] == std::pair<std::uint64_t, unsigned>{37, 1});

  CHECK(oracle::trial_factor(13).is_prime());
  CHECK(oracle::trial_factor(9).prime_powers ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}});
  CHECK(oracle::trial_factor(298500156599).divisors.size() == 12);
  CHECK_THROWS_AS(oracle::trial_factor(1), std::invalid_argument);
}

TEST_CASE("ideal phases") {
  const auto ph = oracle::ideal_phases(2, 1591);
  REQUIRE(ph.size() == 1);
  CHECK(ph[0] == doctest::Approx(252.0 / 1591));
  CHECK(postprocess(phase_to_l(ph[0], 1591), 2, 1591) == std::set<BigInt>{37, 43});
  CHECK_THROWS_AS(oracle::ideal_phases(3, 9), std::invalid_argument);
}

TEST_CASE("ladder sums") {
  const std::vector<std::uint64_t> b{1, 2, 3};
  CHECK(oracle::ladder_sum(b, 0, 2) == 0);
  CHECK(oracle::ladder_sum(b, 0b101, 2) == 0);
  CHECK(oracle::ladder_sum(b, 0b111, 3) == 6);
  CHECK(oracle::ladder_addends(circuit_params(1591, 2))[0] == 0);  // 2/1591 * 4 rounds to 0
}

TEST_CASE("analytic distribution agrees with the simulator") {
  for (std::uint64_t N = 3; N <= 61; N += 2) {
    for (std::uint64_t a = 2; a < std::min<std::uint64_t>(N, 8); ++a) {
      const auto spec = circuit_params(N, a);
      REQUIRE(spec.upper_bits <= 6);
      const auto sim = simulate_distribution(spec);
      const auto ref = oracle::analytic_distribution(spec);
      REQUIRE(sim.size() == ref.size());
      for (std::size_t m = 0; m < sim.size(); ++m) {
        REQUIRE(std::abs(sim[m] - ref[m]) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(oracle::analytic_distribution(circuit_params(65535, 2)),
                  ResourceError);
}

TEST_CASE("exact orders expose a divisor of every odd composite") {
  // Odd composites that are not prime powers: some coprime a has an order
  // whose post-processing yields a nontrivial divisor.
  for (std::uint64_t N = 9; N <= 3000; N += 2) {
    const auto f = oracle::trial_factor(N);
    if (f.prime_powers.size() < 2) continue;
    bool found = false;
    for (std::uint64_t a = 2; a < N && !found; ++a) {
      const auto r = oracle::multiplicative_order(a, N);
      if (!r) continue;
      for (const auto& d : postprocess(*r, a, N)) {
        if (d != 1 && d != N) found = true;
      }
    }
    CAPTURE(N);
    REQUIRE(found);
  }
}

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
#include <numbers>
#include <random>

#include "shorphase/classical_oracle.hpp"
#include "shorphase/errors.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/postprocess.hpp"

using namespace shorphase;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double circle_distance(double x, double y) {
  const double d = std::fmod(std::abs(x - y), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

TEST_CASE("register sizes") {
  const auto s = circuit_params(1591, 2);
  CHECK(s.upper_bits == 11);
  CHECK(s.lower_bits == 2);
  CHECK(s.q() == 2048);
  CHECK(s.width() == 13);
  CHECK(s.upper().first == 0);
  CHECK(s.lower().first == 11);

  const auto t = circuit_params(15, 2);
  CHECK(t.upper_bits == 5);
  CHECK(t.lower_bits == 2);
  CHECK(t.width() == 7);

  // 2^p > N + 1: N = 5 needs 2^3, N = 7 needs 2^4 since 2^3 = N + 1.
  CHECK(circuit_params(5, 2).upper_bits == 3);
  CHECK(circuit_params(7, 2).upper_bits == 4);
  // 2^n > a: a = 4 needs n = 3.
  CHECK(circuit_params(15, 4).lower_bits == 3);
  CHECK(circuit_params(15, 7).lower_bits == 3);
  CHECK(circuit_params(15, 8).lower_bits == 4);

  CHECK(circuit_params(1591, 2, 11).lower_bits == 11);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(circuit_params(16, 3), std::invalid_argument);
  CHECK_THROWS_AS(circuit_params(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(circuit_params(15, 1), std::invalid_argument);
  CHECK_THROWS_AS(circuit_params(15, 15), std::invalid_argument);
  CHECK_THROWS_AS(circuit_params(15, 2, 0), std::invalid_argument);
}

TEST_CASE("block coefficients") {
  CHECK(block_coefficient(0, 1591) == 1);
  CHECK(block_coefficient(11, 1591) == 457);
  CHECK(block_coefficient(28, 1591) == 345);

  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t N = (rng() % 1'000'000) * 2 + 3;
    std::uint64_t c = 1;
    for (unsigned j = 0; j <= 64; ++j) {
      REQUIRE(block_coefficient(j, N) == c);
      c = (2 * c) % N;
    }
  }
}

TEST_CASE("block angle identity") {
  const std::uint64_t N = 1591, a = 2;
  const double phi = phase_of(a, N);
  CHECK(phi == doctest::Approx(kTwoPi * 2 / 1591));
  const auto spec = circuit_params(N, a);
  const auto consts = phase_constants(spec);
  REQUIRE(consts.size() == spec.upper_bits);
  for (const auto& k : consts) {
    const double direct = std::fmod(std::ldexp(phi, static_cast<int>(k.block)), kTwoPi);
    CHECK(circle_distance(k.angle, direct) < 1e-9);
  }
  // Higher blocks: reduced angle against 2^j a mod N from modpow.
  for (unsigned j = 0; j <= 50; ++j) {
    const double via_c =
        kTwoPi * static_cast<double>((block_coefficient(j, N) * a) % N) / N;
    const BigInt r = modpow(BigInt(2), BigInt(j), BigInt(N)) * a % N;
    const double exact = kTwoPi * r.convert_to<double>() / N;
    CHECK(circle_distance(via_c, exact) < 1e-9);
    if (j <= 20) {
      const double direct = std::fmod(std::ldexp(phi, static_cast<int>(j)), kTwoPi);
      CHECK(circle_distance(via_c, direct) < 1e-9);
    }
  }
}

TEST_CASE("quantization") {
  CHECK(quantize_phase(std::numbers::pi, 3) == 4);
  CHECK(quantize_phase(kTwoPi * 2 / 1591, 11) == 3);
  CHECK(quantize_phase(0.0, 4) == 0);
  CHECK(quantize_phase(kTwoPi * 0.999, 3) == 0);  // wraps mod 2^n
  CHECK(quantize_phase(std::numbers::pi / 4, 2) == 1);  // 0.5 rounds up

  const auto consts = phase_constants(circuit_params(1591, 2));
  const auto oracle_b = oracle::ladder_addends(circuit_params(1591, 2));
  for (std::size_t j = 0; j < consts.size(); ++j) {
    CHECK(consts[j].quantized == oracle_b[j]);
    CHECK(consts[j].quantized < 4);
  }
}

TEST_CASE("Fourier adder adds its addend") {
  // n = 2, b = 1: |c=1>|y> -> |1>|y + 1 mod 4>.
  const QubitRange lower{1, 2};
  for (std::uint64_t y = 0; y < 4; ++y) {
    Circuit c(3);
    c.append(build_qft(2), 1);
    c.append(build_fourier_adder(3, 0, lower, 1));
    c.append(build_iqft(2), 1);
    auto s = StateVector::basis(3, 1 | (y << 1));
    execute(c, s);
    const std::uint64_t want = 1 | (((y + 1) % 4) << 1);
    CHECK(std::norm(s.amplitude(want)) == doctest::Approx(1.0));

    // Control |0>: nothing changes.
    auto z = StateVector::basis(3, y << 1);
    execute(c, z);
    CHECK(std::norm(z.amplitude(y << 1)) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(build_fourier_adder(3, 1, lower, 1), std::out_of_range);
}

TEST_CASE("ladder section matches modular sum exhaustively") {
  std::mt19937_64 rng(21);
  for (unsigned p = 1; p <= 4; ++p) {
    for (unsigned n = 1; n <= 4; ++n) {
      std::vector<std::uint64_t> addends(p);
      for (auto& b : addends) b = rng() % (std::uint64_t{1} << n);
      const auto c = build_ladder_section(p, n, addends);
      for (std::uint64_t l = 0; l < (std::uint64_t{1} << p); ++l) {
        auto s = StateVector::basis(p + n, l);
        execute(c, s);
        const std::uint64_t y = oracle::ladder_sum(addends, l, n);
        REQUIRE(std::norm(s.amplitude(l | (y << p))) > 1 - 1e-9);
      }
    }
  }
}

TEST_CASE("Shor circuit layout") {
  const auto spec = circuit_params(15, 2);
  const auto sc = build_shor_circuit(spec);
  CHECK(sc.circuit.width() == 7);
  CHECK(sc.upper.width == 5);
  CHECK(sc.lower.first == 5);
  CHECK(sc.lower.width == 2);

  const auto dist = simulate_distribution(spec);
  CHECK(dist.width == 5);
  CHECK(dist.size() == 32);
  CHECK(dist.total() == doctest::Approx(1.0));
}

TEST_CASE("oversized circuits are refused") {
  CHECK_THROWS_AS(build_shor_circuit(circuit_params(67108865, 2, 20)), ResourceError);
}

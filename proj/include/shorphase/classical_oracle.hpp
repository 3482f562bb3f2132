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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shorphase/phase_modexp.hpp"
#include "shorphase/state_vector.hpp"

// Brute-force ground truth. Nothing here calls the simulator or the circuit
// builders; it exists to check them.

namespace shorphase::oracle {

inline constexpr std::uint64_t kOrderIterationLimit = 100'000'000;

/// Least l >= 1 with a^l = 1 (mod N) by repeated multiplication; nullopt
/// when gcd(a, N) != 1. Throws ResourceError past kOrderIterationLimit.
std::optional<std::uint64_t> multiplicative_order(std::uint64_t base,
                                                  std::uint64_t modulus);

struct Factorization {
  std::uint64_t n = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;
  std::vector<std::uint64_t> divisors;  // ascending

  bool is_prime() const {
    return prime_powers.size() == 1 && prime_powers[0].second == 1;
  }
};

/// Trial division up to sqrt(N), then divisor enumeration.
Factorization trial_factor(std::uint64_t n);

/// {ord(a, N) / N}. Throws std::invalid_argument when gcd(a, N) != 1.
std::vector<double> ideal_phases(std::uint64_t base, std::uint64_t modulus);

/// Upper-register outcome distribution of the Shor circuit evaluated from
/// the closed-form state sum_l |l>|y(l)> and an explicit inverse DFT sum.
/// Cost is O(q^2); throws ResourceError for p > 14.
Distribution analytic_distribution(const CircuitSpec& spec);

/// Fixed-point ladder constants b_j recomputed from scratch.
std::vector<std::uint64_t> ladder_addends(const CircuitSpec& spec);

/// (sum over set bits j of l of addends[j]) mod 2^bits.
std::uint64_t ladder_sum(std::span<const std::uint64_t> addends,
                         std::uint64_t l, unsigned bits);

/// DFT matrix over 2^width points, column-major, entries w^{kj}/sqrt(q)
/// (or w^{-kj}/sqrt(q) when `conjugate`).
std::vector<std::complex<double>> dft_matrix(unsigned width,
                                             bool conjugate = false);

}  // namespace shorphase::oracle

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

#include "shorphase/classical_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shorphase/errors.hpp"

namespace shorphase::oracle {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128{a} * b % m);
}

}  // namespace

std::optional<std::uint64_t> multiplicative_order(std::uint64_t base,
                                                  std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("order needs N >= 2");
  const std::uint64_t a = base % modulus;
  if (std::gcd(a, modulus) != 1) return std::nullopt;
  std::uint64_t x = a;
  for (std::uint64_t l = 1; l <= kOrderIterationLimit; ++l) {
    if (x == 1) return l;
    x = mulmod(x, a, modulus);
  }
  throw ResourceError("order search for a = " + std::to_string(base) +
                      " mod " + std::to_string(modulus) + " exceeded " +
                      std::to_string(kOrderIterationLimit) + " iterations");
}

Factorization trial_factor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("trial_factor needs N >= 2");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; d += (d == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e > 0) f.prime_powers.emplace_back(d, e);
  }
  if (rest > 1) f.prime_powers.emplace_back(rest, 1);

  f.divisors = {1};
  for (const auto& [prime, exp] : f.prime_powers) {
    const std::size_t before = f.divisors.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < before; ++i) {
        f.divisors.push_back(f.divisors[i] * power);
      }
    }
  }
  std::sort(f.divisors.begin(), f.divisors.end());
  return f;
}

std::vector<double> ideal_phases(std::uint64_t base, std::uint64_t modulus) {
  const auto order = multiplicative_order(base, modulus);
  if (!order) {
    throw std::invalid_argument("a = " + std::to_string(base) +
                                " shares a factor with N = " +
                                std::to_string(modulus) + "; no order");
  }
  return {static_cast<double>(*order) / static_cast<double>(modulus)};
}

std::vector<std::uint64_t> ladder_addends(const CircuitSpec& spec) {
  const std::uint64_t N = spec.modulus;
  const unsigned n = spec.lower_bits;
  std::vector<std::uint64_t> out;
  std::uint64_t two_j = 1 % N;  // 2^j mod N
  for (unsigned j = 0; j < spec.upper_bits; ++j) {
    const std::uint64_t r = mulmod(two_j, spec.base % N, N);
    // Nearest integer to r * 2^n / N.
    const u128 scaled = u128{r} << n;
    u128 b = scaled / N;
    if ((scaled % N) * 2 >= N) ++b;
    out.push_back(static_cast<std::uint64_t>(b) &
                  ((std::uint64_t{1} << n) - 1));
    two_j = mulmod(two_j, 2, N);
  }
  return out;
}

std::uint64_t ladder_sum(std::span<const std::uint64_t> addends,
                         std::uint64_t l, unsigned bits) {
  std::uint64_t sum = 0;
  for (std::size_t j = 0; j < addends.size(); ++j) {
    if ((l >> j) & 1) sum += addends[j];
  }
  return sum & ((std::uint64_t{1} << bits) - 1);
}

Distribution analytic_distribution(const CircuitSpec& spec) {
  const unsigned p = spec.upper_bits;
  if (p == 0 || p > 14 || spec.lower_bits == 0 || spec.lower_bits > 40) {
    throw ResourceError("analytic distribution supports 1 <= p <= 14, got p = " +
                        std::to_string(p));
  }
  const std::uint64_t q = std::uint64_t{1} << p;
  const auto addends = ladder_addends(spec);

  // Final lower value for every upper basis state, grouped by value.
  std::vector<std::uint64_t> lower(q);
  for (std::uint64_t l = 0; l < q; ++l) {
    lower[l] = ladder_sum(addends, l, spec.lower_bits);
  }
  std::vector<std::uint64_t> order(q);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return lower[x] < lower[y]; });

  std::vector<std::complex<double>> twiddle(q);
  for (std::uint64_t k = 0; k < q; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(q);
    twiddle[k] = {std::cos(angle), std::sin(angle)};
  }

  Distribution dist;
  dist.width = p;
  dist.probabilities.assign(q, 0.0);
  const double inv_q = 1.0 / static_cast<double>(q);
  std::size_t begin = 0;
  while (begin < q) {
    std::size_t end = begin;
    while (end < q && lower[order[end]] == lower[order[begin]]) ++end;
    for (std::uint64_t m = 0; m < q; ++m) {
      std::complex<double> amp = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        amp += twiddle[(m * order[i]) & (q - 1)];
      }
      dist.probabilities[m] += std::norm(amp * inv_q);
    }
    begin = end;
  }
  return dist;
}

std::vector<std::complex<double>> dft_matrix(unsigned width, bool conjugate) {
  if (width == 0 || width > 12) {
    throw std::invalid_argument("dft_matrix supports widths 1..12");
  }
  const std::uint64_t q = std::uint64_t{1} << width;
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  const double sign = conjugate ? -1.0 : 1.0;
  std::vector<std::complex<double>> m(q * q);
  for (std::uint64_t col = 0; col < q; ++col) {
    for (std::uint64_t row = 0; row < q; ++row) {
      const double angle = sign * 2.0 * std::numbers::pi *
                           static_cast<double>((row * col) % q) /
                           static_cast<double>(q);
      m[col * q + row] = std::polar(norm, angle);
    }
  }
  return m;
}

}  // namespace shorphase::oracle

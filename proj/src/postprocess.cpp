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

#include "shorphase/postprocess.hpp"

#include <cmath>
#include <stdexcept>

namespace shorphase {

BigInt gcd(BigInt x, BigInt y) {
  if (x < 0 || y < 0) throw std::invalid_argument("gcd of negative value");
  if (x == 0 && y == 0) throw std::invalid_argument("gcd(0, 0) undefined");
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt modpow(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus) {
  if (modulus < 1) throw std::invalid_argument("modpow modulus must be >= 1");
  if (exponent < 0) throw std::invalid_argument("modpow exponent must be >= 0");
  if (modulus == 1) return 0;
  BigInt b = base % modulus;
  if (b < 0) b += modulus;
  BigInt result = 1;
  if (exponent == 0) return result;
  const auto top = static_cast<long>(boost::multiprecision::msb(exponent));
  for (long bit = top; bit >= 0; --bit) {
    result = result * result % modulus;
    if (boost::multiprecision::bit_test(exponent,
                                        static_cast<unsigned>(bit))) {
      result = result * b % modulus;
    }
  }
  return result;
}

BigInt phase_to_l(double phase, const BigInt& modulus) {
  if (!std::isfinite(phase) || phase < 0.0) {
    throw std::invalid_argument("phase must be finite and non-negative");
  }
  if (phase == 0.0) return 0;
  int exp2 = 0;
  const double frac = std::frexp(phase, &exp2);  // phase = frac * 2^exp2
  const auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, 53));
  const int shift = exp2 - 53;  // phase = mantissa * 2^shift exactly
  BigInt scaled = BigInt(mantissa) * modulus;
  if (shift >= 0) return scaled << shift;
  const auto down = static_cast<unsigned>(-shift);
  return (scaled + (BigInt(1) << (down - 1))) >> down;
}

BigInt phase_to_l(const BigInt& m, const BigInt& q, const BigInt& modulus) {
  if (q <= 0 || m < 0) throw std::invalid_argument("need m >= 0 and q > 0");
  return (2 * m * modulus + q) / (2 * q);
}

namespace {

CandidateEvaluation evaluate_even(const BigInt& exponent, const BigInt& base,
                                  const BigInt& modulus) {
  const BigInt x = modpow(base, exponent / 2, modulus);
  CandidateEvaluation ev;
  ev.exponent = exponent;
  ev.plus = gcd((x + 1) % modulus, modulus);
  ev.minus = gcd((x + modulus - 1) % modulus, modulus);
  return ev;
}

}  // namespace

std::vector<CandidateEvaluation> evaluate_candidate(const BigInt& l,
                                                    const BigInt& base,
                                                    const BigInt& modulus) {
  if (l < 0) throw std::invalid_argument("candidate order must be >= 0");
  if (modulus < 2) throw std::invalid_argument("N must be >= 2");
  if (boost::multiprecision::bit_test(l, 0)) {
    return {evaluate_even(l - 1, base, modulus),
            evaluate_even(l + 1, base, modulus)};
  }
  return {evaluate_even(l, base, modulus)};
}

std::set<BigInt> postprocess(const BigInt& l, const BigInt& base,
                             const BigInt& modulus) {
  std::set<BigInt> out;
  for (const auto& ev : evaluate_candidate(l, base, modulus)) {
    out.insert(ev.plus);
    out.insert(ev.minus);
  }
  return out;
}

}  // namespace shorphase

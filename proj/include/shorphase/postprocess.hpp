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

#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shorphase {

using BigInt = boost::multiprecision::cpp_int;

/// Euclid's algorithm. gcd(0, y) = y; gcd(0, 0) and negative inputs throw
/// std::invalid_argument.
BigInt gcd(BigInt x, BigInt y);

/// base^exponent mod modulus by left-to-right square-and-multiply.
/// modulus must be >= 1 and exponent >= 0.
BigInt modpow(const BigInt& base, const BigInt& exponent,
              const BigInt& modulus);

/// Nearest integer to phase * N, halves rounding up. The double is expanded
/// to its exact dyadic value first, so the result is exact for any N.
/// phase must be finite and >= 0.
BigInt phase_to_l(double phase, const BigInt& modulus);

/// Nearest integer to (m / q) * N, computed in integers.
BigInt phase_to_l(const BigInt& m, const BigInt& q, const BigInt& modulus);

/// One even exponent tried during post-processing. With x = a^{e/2} mod N:
/// plus = gcd(x + 1, N) and minus = gcd(x - 1, N), residues taken mod N and
/// gcd(0, N) = N.
struct CandidateEvaluation {
  BigInt exponent;
  BigInt plus;
  BigInt minus;

  friend bool operator==(const CandidateEvaluation&,
                         const CandidateEvaluation&) = default;
};

/// The even exponents examined for candidate order l: l itself when even,
/// otherwise l - 1 and l + 1.
std::vector<CandidateEvaluation> evaluate_candidate(const BigInt& l,
                                                    const BigInt& base,
                                                    const BigInt& modulus);

/// Union of all gcds from evaluate_candidate. Every element divides N.
std::set<BigInt> postprocess(const BigInt& l, const BigInt& base,
                             const BigInt& modulus);

}  // namespace shorphase

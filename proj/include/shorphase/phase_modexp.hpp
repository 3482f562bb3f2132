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
#include <optional>
#include <span>
#include <vector>

#include "shorphase/circuit.hpp"
#include "shorphase/state_vector.hpp"

namespace shorphase {

/// Layout of the phase-based Shor circuit for one (N, a) instance.
///
/// The upper register (p qubits, q = 2^p basis states) holds the exponent
/// l and occupies qubits [0, p). The lower register (n qubits) accumulates
/// the n-bit fixed-point phase l * phi_a / 2pi and occupies [p, p + n).
struct CircuitSpec {
  std::uint64_t modulus = 0;  // N
  std::uint64_t base = 0;     // a
  unsigned upper_bits = 0;    // p
  unsigned lower_bits = 0;    // n

  std::uint64_t q() const { return std::uint64_t{1} << upper_bits; }
  unsigned width() const { return upper_bits + lower_bits; }
  QubitRange upper() const { return {0, upper_bits}; }
  QubitRange lower() const { return {upper_bits, lower_bits}; }
};

/// Per-block constants for the block controlled by upper qubit j.
struct PhaseConstant {
  unsigned block = 0;            // j
  std::uint64_t coefficient = 0; // c_j = 2^j mod N
  double angle = 0.0;            // c_j * phi_a mod 2pi, in [0, 2pi)
  std::uint64_t quantized = 0;   // b_j in [0, 2^n)
};

/// Smallest p with 2^p > N + 1 and smallest n with 2^n > a (or
/// `lower_bits_override`). Requires odd N >= 3 and 2 <= a <= N - 1.
CircuitSpec circuit_params(std::uint64_t modulus, std::uint64_t base,
                           std::optional<unsigned> lower_bits_override = {});

/// 2 pi a / N reduced to [0, 2pi).
double phase_of(std::uint64_t base, std::uint64_t modulus);

/// 2^j mod N by repeated modular doubling.
std::uint64_t block_coefficient(unsigned block, std::uint64_t modulus);

/// round(phi / 2pi * 2^n) mod 2^n, ties rounding up.
std::uint64_t quantize_phase(double phi, unsigned bits);

/// Constants for blocks 0 .. p-1. b_j is computed from the exact residue
/// (c_j * a) mod N, never from a previously rounded value.
std::vector<PhaseConstant> phase_constants(const CircuitSpec& spec);

/// Controlled Fourier-basis adder: with the lower register in the Fourier
/// basis, adds `addend` mod 2^lower_width when `control` is |1>. Lower qubit
/// t (weight 2^t) gets CP(2 pi addend / 2^{n-t}).
Circuit build_fourier_adder(unsigned width, unsigned control,
                            QubitRange lower, std::uint64_t addend);

/// The block for upper qubit j: build_fourier_adder with b_j.
Circuit build_controlled_block(unsigned block, const CircuitSpec& spec);

/// QFT on the lower register, one controlled adder per upper qubit j with
/// addends[j], then one IQFT on the lower register. Leaves |l>|0> as
/// |l>|sum_j l_j addends[j] mod 2^n>.
Circuit build_ladder_section(unsigned upper_bits, unsigned lower_bits,
                             std::span<const std::uint64_t> addends);

/// build_ladder_section with the b_j of `spec`.
Circuit build_modexp_section(const CircuitSpec& spec);

struct ShorCircuit {
  Circuit circuit;
  QubitRange upper;
  QubitRange lower;
};

/// H on every upper qubit, build_modexp_section, IQFT on the upper register.
ShorCircuit build_shor_circuit(const CircuitSpec& spec);

/// Exact upper-register distribution of the simulated Shor circuit.
Distribution simulate_distribution(const CircuitSpec& spec);

}  // namespace shorphase

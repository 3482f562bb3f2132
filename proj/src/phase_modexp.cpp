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

#include "shorphase/phase_modexp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "shorphase/errors.hpp"

namespace shorphase {

namespace {

using u128 = unsigned __int128;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

unsigned bits_exceeding(std::uint64_t value) {
  // Smallest k with 2^k > value.
  unsigned k = 0;
  while (k < 64 && (std::uint64_t{1} << k) <= value) ++k;
  return k;
}

}  // namespace

CircuitSpec circuit_params(std::uint64_t modulus, std::uint64_t base,
                           std::optional<unsigned> lower_bits_override) {
  if (modulus < 3) {
    throw std::invalid_argument("N must be >= 3, got " +
                                std::to_string(modulus));
  }
  if (modulus % 2 == 0) {
    throw std::invalid_argument("N must be odd, got " +
                                std::to_string(modulus));
  }
  if (base < 2 || base >= modulus) {
    throw std::invalid_argument("a must lie in [2, N-1], got " +
                                std::to_string(base));
  }
  if (modulus >= (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("N too large for a circuit layout");
  }
  CircuitSpec spec;
  spec.modulus = modulus;
  spec.base = base;
  spec.upper_bits = bits_exceeding(modulus + 1);
  spec.lower_bits = bits_exceeding(base);
  if (lower_bits_override) {
    if (*lower_bits_override == 0 || *lower_bits_override > 62) {
      throw std::invalid_argument("lower register width must be in [1, 62]");
    }
    spec.lower_bits = *lower_bits_override;
  }
  return spec;
}

double phase_of(std::uint64_t base, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("N must be positive");
  const double frac =
      static_cast<double>(base % modulus) / static_cast<double>(modulus);
  return canonical_angle(kTwoPi * frac);
}

std::uint64_t block_coefficient(unsigned block, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("N must be positive");
  std::uint64_t c = 1 % modulus;
  for (unsigned j = 0; j < block; ++j) {
    c = static_cast<std::uint64_t>((u128{c} << 1) % modulus);
  }
  return c;
}

std::uint64_t quantize_phase(double phi, unsigned bits) {
  if (bits == 0 || bits > 62) {
    throw std::invalid_argument("quantization width must be in [1, 62]");
  }
  const double scale = std::ldexp(1.0, static_cast<int>(bits));
  const double x = canonical_angle(phi) / kTwoPi * scale;
  const auto r = static_cast<std::uint64_t>(std::floor(x + 0.5));
  return r & ((std::uint64_t{1} << bits) - 1);
}

std::vector<PhaseConstant> phase_constants(const CircuitSpec& spec) {
  const std::uint64_t N = spec.modulus;
  const unsigned n = spec.lower_bits;
  std::vector<PhaseConstant> out;
  out.reserve(spec.upper_bits);
  std::uint64_t c = 1 % N;
  for (unsigned j = 0; j < spec.upper_bits; ++j) {
    PhaseConstant pc;
    pc.block = j;
    pc.coefficient = c;
    const std::uint64_t residue =
        static_cast<std::uint64_t>(u128{c} * spec.base % N);
    pc.angle = canonical_angle(kTwoPi * static_cast<double>(residue) /
                               static_cast<double>(N));
    // round(residue * 2^n / N) mod 2^n; N odd so no exact ties.
    const u128 num = (u128{residue} << (n + 1)) + N;
    pc.quantized = static_cast<std::uint64_t>(num / (u128{N} << 1)) &
                   ((std::uint64_t{1} << n) - 1);
    out.push_back(pc);
    c = static_cast<std::uint64_t>((u128{c} << 1) % N);
  }
  return out;
}

Circuit build_fourier_adder(unsigned width, unsigned control,
                            QubitRange lower, std::uint64_t addend) {
  if (lower.width == 0 || lower.first + lower.width > width) {
    throw std::out_of_range("lower register outside circuit");
  }
  if (control >= width ||
      (control >= lower.first && control < lower.first + lower.width)) {
    throw std::out_of_range("control qubit must be outside the lower register");
  }
  Circuit c(width);
  const unsigned n = lower.width;
  const std::uint64_t mask =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t b = addend & mask;
  for (unsigned t = 0; t < n; ++t) {
    // 2 pi b / 2^{n-t}; only the low (n-t) bits of b matter mod 2pi.
    const unsigned shift = n - t;
    const std::uint64_t low = b & ((std::uint64_t{1} << shift) - 1);
    const double alpha =
        kTwoPi * std::ldexp(static_cast<double>(low), -static_cast<int>(shift));
    c.add(Gate::cphase(control, lower.first + t, alpha));
  }
  return c;
}

Circuit build_controlled_block(unsigned block, const CircuitSpec& spec) {
  if (block >= spec.upper_bits) {
    throw std::out_of_range("block " + std::to_string(block) +
                            " out of range for p = " +
                            std::to_string(spec.upper_bits));
  }
  const auto constants = phase_constants(spec);
  return build_fourier_adder(spec.width(), block, spec.lower(),
                             constants[block].quantized);
}

Circuit build_ladder_section(unsigned upper_bits, unsigned lower_bits,
                             std::span<const std::uint64_t> addends) {
  if (upper_bits == 0 || lower_bits == 0) {
    throw std::invalid_argument("both registers need at least one qubit");
  }
  if (addends.size() != upper_bits) {
    throw std::invalid_argument("need one addend per upper qubit");
  }
  const unsigned width = upper_bits + lower_bits;
  const QubitRange lower{upper_bits, lower_bits};
  Circuit c(width);
  c.append(build_qft(lower_bits), upper_bits);
  for (unsigned j = 0; j < upper_bits; ++j) {
    c.append(build_fourier_adder(width, j, lower, addends[j]));
  }
  c.append(build_iqft(lower_bits), upper_bits);
  return c;
}

Circuit build_modexp_section(const CircuitSpec& spec) {
  std::vector<std::uint64_t> addends;
  for (const auto& pc : phase_constants(spec)) addends.push_back(pc.quantized);
  return build_ladder_section(spec.upper_bits, spec.lower_bits, addends);
}

ShorCircuit build_shor_circuit(const CircuitSpec& spec) {
  if (spec.width() > max_qubits()) {
    throw ResourceError("N = " + std::to_string(spec.modulus) +
                        ", a = " + std::to_string(spec.base) + " needs " +
                        std::to_string(spec.width()) +
                        " qubits; simulator cap is " +
                        std::to_string(max_qubits()));
  }
  ShorCircuit out{Circuit(spec.width()), spec.upper(), spec.lower()};
  for (unsigned j = 0; j < spec.upper_bits; ++j) out.circuit.add(Gate::h(j));
  out.circuit.append(build_modexp_section(spec));
  out.circuit.append(build_iqft(spec.upper_bits), 0);
  return out;
}

Distribution simulate_distribution(const CircuitSpec& spec) {
  const ShorCircuit sc = build_shor_circuit(spec);
  StateVector s(sc.circuit.width());
  execute(sc.circuit, s);
  return exact_probabilities(s, sc.upper);
}

}  // namespace shorphase

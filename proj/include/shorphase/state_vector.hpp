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
#include <map>
#include <span>
#include <vector>

namespace shorphase {

using Amplitude = std::complex<double>;

/// Qubit i carries weight 2^i in every outcome integer (little-endian).
/// All registers, distributions and samples in this library follow it.

inline constexpr unsigned kDefaultMaxQubits = 26;

/// Simulator qubit cap: SHORPHASE_MAX_QUBITS when set, else 26.
unsigned max_qubits();

/// Thread budget for amplitude loops. Results never depend on it.
void set_max_threads(int threads);
int max_threads();

/// Contiguous register [first, first + width).
struct QubitRange {
  unsigned first = 0;
  unsigned width = 0;
};

/// Outcome distribution over a register of `width` qubits, indexed by
/// outcome integer.
struct Distribution {
  unsigned width = 0;
  std::vector<double> probabilities;

  double total() const;
  std::size_t size() const { return probabilities.size(); }
  double operator[](std::uint64_t outcome) const {
    return probabilities.at(outcome);
  }
};

class StateVector {
 public:
  /// |0...0> over `num_qubits` qubits. Throws ResourceError above the cap.
  explicit StateVector(unsigned num_qubits);

  /// Computational basis state |index>.
  static StateVector basis(unsigned num_qubits, std::uint64_t index);

  /// Takes ownership of explicit amplitudes; length must be a power of two
  /// and the norm 1 within 1e-9.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& amplitude(std::uint64_t index) const {
    return amplitudes_.at(index);
  }

  void apply_h(unsigned qubit);
  void apply_x(unsigned qubit);
  /// diag(1, e^{i alpha}) on `qubit`.
  void apply_phase(unsigned qubit, double alpha);
  /// Multiplies every basis amplitude with both bits set by e^{i alpha}.
  void apply_cphase(unsigned control, unsigned target, double alpha);
  void apply_swap(unsigned first, unsigned second);

  double norm_squared() const;

 private:
  StateVector() = default;
  void check_qubit(unsigned qubit) const;

  unsigned num_qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

/// Convenience alias for StateVector(num_qubits).
StateVector new_state(unsigned num_qubits);

/// Marginal distribution of `reg`, summing |amplitude|^2 over the other
/// qubits.
Distribution exact_probabilities(const StateVector& state, QubitRange reg);

/// Draws `shots` outcomes from `dist` by inverse-CDF sampling with a
/// mt19937_64 seeded by `seed`. The sequence is a pure function of the
/// arguments.
std::vector<std::uint64_t> sample_outcomes(const Distribution& dist,
                                           std::uint64_t shots,
                                           std::uint64_t seed);

std::map<std::uint64_t, std::uint64_t> sample_counts(const Distribution& dist,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed);

std::map<std::uint64_t, std::uint64_t> sample_counts(const StateVector& state,
                                                     QubitRange reg,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed);

/// Total-variation distance between `dist` and the empirical distribution
/// of `counts`.
double total_variation(const Distribution& dist,
                       const std::map<std::uint64_t, std::uint64_t>& counts);

}  // namespace shorphase

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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shorphase/state_vector.hpp"

namespace shorphase {

enum class GateKind { H, X, Phase, CPhase, Swap };

/// Maps any angle to [0, 2pi).
double canonical_angle(double alpha);

/// One gate. Indices are distinct; `angle` is canonical and only meaningful
/// for Phase and CPhase. Construct through the factories.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<unsigned, 2> qubits{0, 0};
  double angle = 0.0;

  static Gate h(unsigned q);
  static Gate x(unsigned q);
  static Gate phase(unsigned q, double alpha);
  static Gate cphase(unsigned control, unsigned target, double alpha);
  static Gate swap(unsigned a, unsigned b);

  unsigned arity() const;
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Equal kinds and qubits, angles within `tol` on the circle.
bool approx_equal(const Gate& lhs, const Gate& rhs, double tol = 1e-12);

std::string_view kind_name(GateKind kind);

struct CircuitStats {
  unsigned width = 0;
  std::size_t gate_count = 0;
  std::size_t depth = 0;
};

/// Ordered gate list over `width` qubits.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(unsigned width);

  unsigned width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  /// Appends `gate`; throws std::out_of_range if an index is >= width.
  Circuit& add(const Gate& gate);
  /// Appends all gates of `other` with qubit i relabeled to offset + i.
  Circuit& append(const Circuit& other, unsigned offset = 0);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned width_ = 0;
  std::vector<Gate> gates_;
};

bool approx_equal(const Circuit& lhs, const Circuit& rhs, double tol = 1e-12);

/// Circuit whose unitary is the DFT with entries w^{kj} / sqrt(q),
/// w = e^{2 pi i / q}, q = 2^width, including the terminal bit-reversal
/// swaps.
Circuit build_qft(unsigned width);

/// inverse(build_qft(width)).
Circuit build_iqft(unsigned width);

/// Gates reversed, each replaced by its inverse.
Circuit inverse(const Circuit& circuit);

/// Applies the gates of `circuit` to `state` in order.
void execute(const Circuit& circuit, StateVector& state);

/// Runs `circuit` on |0...0>.
StateVector execute(const Circuit& circuit);

CircuitStats stats(const Circuit& circuit);

/// Line-based listing, first line `qubits <width>`, then one gate per line:
///   H q[0]
///   X q[3]
///   P q[2] alpha=1.5707963267948966
///   CP q[0] q[4] alpha=0.78539816339744828
///   SWAP q[0] q[4]
/// Angles use the shortest decimal that round-trips the double.
std::string to_text(const Circuit& circuit);

/// Inverse of to_text. Throws std::invalid_argument with the line number on
/// malformed input.
Circuit parse_circuit(std::string_view text);

/// Dense unitary of `circuit`, column-major: element (row r, column c) at
/// c * dim + r, built by executing every basis state.
std::vector<std::complex<double>> circuit_matrix(const Circuit& circuit);

}  // namespace shorphase

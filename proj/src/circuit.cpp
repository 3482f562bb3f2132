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

#include "shorphase/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace shorphase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_distinct(unsigned a, unsigned b, const char* what) {
  if (a == b) {
    throw std::invalid_argument(std::string(what) +
                                " needs two distinct qubits");
  }
}

std::string format_angle(double alpha) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, alpha);
  return std::string(buf, res.ptr);
}

}  // namespace

double canonical_angle(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("angle not finite");
  double r = std::fmod(alpha, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Gate Gate::h(unsigned q) { return Gate{GateKind::H, {q, q}, 0.0}; }

Gate Gate::x(unsigned q) { return Gate{GateKind::X, {q, q}, 0.0}; }

Gate Gate::phase(unsigned q, double alpha) {
  return Gate{GateKind::Phase, {q, q}, canonical_angle(alpha)};
}

Gate Gate::cphase(unsigned control, unsigned target, double alpha) {
  require_distinct(control, target, "CP");
  return Gate{GateKind::CPhase, {control, target}, canonical_angle(alpha)};
}

Gate Gate::swap(unsigned a, unsigned b) {
  require_distinct(a, b, "SWAP");
  return Gate{GateKind::Swap, {a, b}, 0.0};
}

unsigned Gate::arity() const {
  return kind == GateKind::CPhase || kind == GateKind::Swap ? 2 : 1;
}

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::Phase:
      return Gate::phase(qubits[0], -angle);
    case GateKind::CPhase:
      return Gate::cphase(qubits[0], qubits[1], -angle);
    default:
      return *this;
  }
}

bool approx_equal(const Gate& lhs, const Gate& rhs, double tol) {
  if (lhs.kind != rhs.kind || lhs.qubits != rhs.qubits) return false;
  const double d = std::abs(lhs.angle - rhs.angle);
  return std::min(d, kTwoPi - d) <= tol;
}

std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::Phase:
      return "P";
    case GateKind::CPhase:
      return "CP";
    case GateKind::Swap:
      return "SWAP";
  }
  return "?";
}

Circuit::Circuit(unsigned width) : width_(width) {}

Circuit& Circuit::add(const Gate& gate) {
  for (unsigned i = 0; i < gate.arity(); ++i) {
    if (gate.qubits[i] >= width_) {
      throw std::out_of_range("gate qubit " + std::to_string(gate.qubits[i]) +
                              " outside circuit width " +
                              std::to_string(width_));
    }
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other, unsigned offset) {
  if (other.width() + offset > width_) {
    throw std::out_of_range("appended circuit does not fit");
  }
  for (Gate g : other.gates()) {
    g.qubits[0] += offset;
    g.qubits[1] += offset;
    gates_.push_back(g);
  }
  return *this;
}

bool approx_equal(const Circuit& lhs, const Circuit& rhs, double tol) {
  if (lhs.width() != rhs.width() || lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!approx_equal(lhs.gates()[i], rhs.gates()[i], tol)) return false;
  }
  return true;
}

Circuit build_qft(unsigned width) {
  if (width == 0) throw std::invalid_argument("QFT width must be >= 1");
  Circuit c(width);
  // Highest qubit first; each qubit collects phases from the untouched lower
  // qubits, leaving output bit (width-1-i) on qubit i.
  for (unsigned i = width; i-- > 0;) {
    c.add(Gate::h(i));
    for (unsigned t = i; t-- > 0;) {
      c.add(Gate::cphase(t, i, std::ldexp(std::numbers::pi, -int(i - t))));
    }
  }
  for (unsigned i = 0; i < width / 2; ++i) {
    c.add(Gate::swap(i, width - 1 - i));
  }
  return c;
}

Circuit build_iqft(unsigned width) { return inverse(build_qft(width)); }

Circuit inverse(const Circuit& circuit) {
  Circuit out(circuit.width());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.add(it->inverse());
  }
  return out;
}

void execute(const Circuit& circuit, StateVector& state) {
  if (circuit.width() != state.num_qubits()) {
    throw std::invalid_argument(
        "circuit width " + std::to_string(circuit.width()) +
        " does not match state width " + std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::H:
        state.apply_h(g.qubits[0]);
        break;
      case GateKind::X:
        state.apply_x(g.qubits[0]);
        break;
      case GateKind::Phase:
        state.apply_phase(g.qubits[0], g.angle);
        break;
      case GateKind::CPhase:
        state.apply_cphase(g.qubits[0], g.qubits[1], g.angle);
        break;
      case GateKind::Swap:
        state.apply_swap(g.qubits[0], g.qubits[1]);
        break;
    }
  }
}

StateVector execute(const Circuit& circuit) {
  StateVector s(circuit.width());
  execute(circuit, s);
  return s;
}

CircuitStats stats(const Circuit& circuit) {
  CircuitStats st;
  st.width = circuit.width();
  st.gate_count = circuit.size();
  std::vector<std::size_t> level(circuit.width(), 0);
  for (const Gate& g : circuit.gates()) {
    std::size_t d = level[g.qubits[0]];
    if (g.arity() == 2) d = std::max(d, level[g.qubits[1]]);
    ++d;
    level[g.qubits[0]] = d;
    if (g.arity() == 2) level[g.qubits[1]] = d;
    st.depth = std::max(st.depth, d);
  }
  return st;
}

std::string to_text(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.width()) + "\n";
  for (const Gate& g : circuit.gates()) {
    out += kind_name(g.kind);
    out += " q[" + std::to_string(g.qubits[0]) + "]";
    if (g.arity() == 2) out += " q[" + std::to_string(g.qubits[1]) + "]";
    if (g.kind == GateKind::Phase || g.kind == GateKind::CPhase) {
      out += " alpha=" + format_angle(g.angle);
    }
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw std::invalid_argument("circuit text line " + std::to_string(line) +
                              ": " + why);
}

unsigned parse_qubit(const std::string& token, std::size_t line) {
  if (token.size() < 4 || token.rfind("q[", 0) != 0 || token.back() != ']') {
    parse_fail(line, "expected q[<index>], got '" + token + "'");
  }
  unsigned v = 0;
  const char* first = token.data() + 2;
  const char* last = token.data() + token.size() - 1;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    parse_fail(line, "bad qubit index '" + token + "'");
  }
  return v;
}

double parse_alpha(const std::string& token, std::size_t line) {
  if (token.rfind("alpha=", 0) != 0) {
    parse_fail(line, "expected alpha=<radians>, got '" + token + "'");
  }
  double v = 0.0;
  const char* first = token.data() + 6;
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    parse_fail(line, "bad angle '" + token + "'");
  }
  return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit c;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!have_header) {
      unsigned w = 0;
      if (tok.size() != 2 || tok[0] != "qubits") {
        parse_fail(line_no, "expected 'qubits <width>' header");
      }
      const auto res =
          std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), w);
      if (res.ec != std::errc{} || res.ptr != tok[1].data() + tok[1].size()) {
        parse_fail(line_no, "bad width '" + tok[1] + "'");
      }
      c = Circuit(w);
      have_header = true;
      continue;
    }
    const std::string& kind = tok[0];
    auto expect = [&](std::size_t n) {
      if (tok.size() != n) {
        parse_fail(line_no, kind + " takes " + std::to_string(n - 1) +
                                " operands");
      }
    };
    try {
      if (kind == "H") {
        expect(2);
        c.add(Gate::h(parse_qubit(tok[1], line_no)));
      } else if (kind == "X") {
        expect(2);
        c.add(Gate::x(parse_qubit(tok[1], line_no)));
      } else if (kind == "P") {
        expect(3);
        c.add(Gate::phase(parse_qubit(tok[1], line_no),
                          parse_alpha(tok[2], line_no)));
      } else if (kind == "CP") {
        expect(4);
        c.add(Gate::cphase(parse_qubit(tok[1], line_no),
                           parse_qubit(tok[2], line_no),
                           parse_alpha(tok[3], line_no)));
      } else if (kind == "SWAP") {
        expect(3);
        c.add(Gate::swap(parse_qubit(tok[1], line_no),
                         parse_qubit(tok[2], line_no)));
      } else {
        parse_fail(line_no, "unknown gate '" + kind + "'");
      }
    } catch (const std::out_of_range& e) {
      parse_fail(line_no, e.what());
    }
  }
  if (!have_header) parse_fail(line_no, "missing 'qubits <width>' header");
  return c;
}

std::vector<std::complex<double>> circuit_matrix(const Circuit& circuit) {
  if (circuit.width() == 0 || circuit.width() > 12) {
    throw std::invalid_argument("circuit_matrix supports widths 1..12");
  }
  const std::size_t dim = std::size_t{1} << circuit.width();
  std::vector<std::complex<double>> m(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(circuit.width(), col);
    execute(circuit, s);
    std::copy(s.amplitudes().begin(), s.amplitudes().end(),
              m.begin() + static_cast<std::ptrdiff_t>(col * dim));
  }
  return m;
}

}  // namespace shorphase

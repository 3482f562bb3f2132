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

#include "shorphase/state_vector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "shorphase/errors.hpp"
#include "shorphase/random.hpp"

#ifdef SHORPHASE_HAS_OPENMP
#include <omp.h>
#endif

namespace shorphase {

namespace {

constexpr double kNormTolerance = 1e-9;
// Below this many amplitudes the thread fork costs more than the loop.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

std::atomic<int> g_max_threads{0};

int thread_count(std::size_t work) {
#ifdef SHORPHASE_HAS_OPENMP
  if (work < kParallelThreshold) return 1;
  const int requested = g_max_threads.load();
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)work;
  return 1;
#endif
}

// Inserts a zero bit at position `bit` of `value`.
inline std::uint64_t insert_zero(std::uint64_t value, unsigned bit) {
  const std::uint64_t low = value & ((std::uint64_t{1} << bit) - 1);
  return ((value >> bit) << (bit + 1)) | low;
}

}  // namespace

unsigned max_qubits() {
  if (const char* env = std::getenv("SHORPHASE_MAX_QUBITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 40) {
      return static_cast<unsigned>(v);
    }
  }
  return kDefaultMaxQubits;
}

void set_max_threads(int threads) { g_max_threads.store(std::max(threads, 0)); }

int max_threads() {
#ifdef SHORPHASE_HAS_OPENMP
  const int requested = g_max_threads.load();
  return requested > 0 ? requested : omp_get_max_threads();
#else
  return 1;
#endif
}

double Distribution::total() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) {
    throw std::invalid_argument("state needs at least one qubit");
  }
  const unsigned cap = max_qubits();
  if (num_qubits > cap) {
    // 2^k amplitudes; report as a decimal count.
    const long double count = std::ldexp(1.0L, static_cast<int>(num_qubits));
    throw ResourceError(
        "state of " + std::to_string(num_qubits) + " qubits needs " +
        std::to_string(static_cast<unsigned long long>(count)) +
        " amplitudes; simulator cap is " + std::to_string(cap) + " qubits");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.size()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " out of range");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  if (k > max_qubits()) {
    throw ResourceError("state of " + std::to_string(k) +
                        " qubits exceeds the simulator cap");
  }
  StateVector s;
  s.num_qubits_ = k;
  s.amplitudes_ = std::move(amplitudes);
  if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("amplitudes are not unit norm");
  }
  return s;
}

void StateVector::check_qubit(unsigned qubit) const {
  if (qubit >= num_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(num_qubits_) +
                            "-qubit state");
  }
}

void StateVector::apply_h(unsigned qubit) {
  check_qubit(qubit);
  const double r = 1.0 / std::sqrt(2.0);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const auto pairs = static_cast<std::int64_t>(amplitudes_.size() / 2);
  Amplitude* amp = amplitudes_.data();
#pragma omp parallel for num_threads(thread_count(amplitudes_.size())) \
    schedule(static)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), qubit);
    const std::uint64_t i1 = i0 | stride;
    const Amplitude a = amp[i0];
    const Amplitude b = amp[i1];
    amp[i0] = (a + b) * r;
    amp[i1] = (a - b) * r;
  }
}

void StateVector::apply_x(unsigned qubit) {
  check_qubit(qubit);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const auto pairs = static_cast<std::int64_t>(amplitudes_.size() / 2);
  Amplitude* amp = amplitudes_.data();
#pragma omp parallel for num_threads(thread_count(amplitudes_.size())) \
    schedule(static)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), qubit);
    std::swap(amp[i0], amp[i0 | stride]);
  }
}

void StateVector::apply_phase(unsigned qubit, double alpha) {
  check_qubit(qubit);
  const Amplitude factor = std::polar(1.0, alpha);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const auto pairs = static_cast<std::int64_t>(amplitudes_.size() / 2);
  Amplitude* amp = amplitudes_.data();
#pragma omp parallel for num_threads(thread_count(amplitudes_.size())) \
    schedule(static)
  for (std::int64_t k = 0; k < pairs; ++k) {
    amp[insert_zero(static_cast<std::uint64_t>(k), qubit) | stride] *= factor;
  }
}

void StateVector::apply_cphase(unsigned control, unsigned target,
                               double alpha) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) {
    throw std::invalid_argument("cphase control and target must differ");
  }
  const Amplitude factor = std::polar(1.0, alpha);
  const unsigned lo = std::min(control, target);
  const unsigned hi = std::max(control, target);
  const std::uint64_t mask =
      (std::uint64_t{1} << control) | (std::uint64_t{1} << target);
  const auto quads = static_cast<std::int64_t>(amplitudes_.size() / 4);
  Amplitude* amp = amplitudes_.data();
#pragma omp parallel for num_threads(thread_count(amplitudes_.size())) \
    schedule(static)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t base =
        insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
    amp[base | mask] *= factor;
  }
}

void StateVector::apply_swap(unsigned first, unsigned second) {
  check_qubit(first);
  check_qubit(second);
  if (first == second) {
    throw std::invalid_argument("swap qubits must differ");
  }
  const unsigned lo = std::min(first, second);
  const unsigned hi = std::max(first, second);
  const std::uint64_t lo_bit = std::uint64_t{1} << lo;
  const std::uint64_t hi_bit = std::uint64_t{1} << hi;
  const auto quads = static_cast<std::int64_t>(amplitudes_.size() / 4);
  Amplitude* amp = amplitudes_.data();
#pragma omp parallel for num_threads(thread_count(amplitudes_.size())) \
    schedule(static)
  for (std::int64_t k = 0; k < quads; ++k) {
    const std::uint64_t base =
        insert_zero(insert_zero(static_cast<std::uint64_t>(k), lo), hi);
    std::swap(amp[base | lo_bit], amp[base | hi_bit]);
  }
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

StateVector new_state(unsigned num_qubits) { return StateVector(num_qubits); }

Distribution exact_probabilities(const StateVector& state, QubitRange reg) {
  if (reg.width == 0) {
    throw std::invalid_argument("register must not be empty");
  }
  if (reg.first + reg.width > state.num_qubits()) {
    throw std::out_of_range("register [" + std::to_string(reg.first) + ", " +
                            std::to_string(reg.first + reg.width) +
                            ") exceeds state width " +
                            std::to_string(state.num_qubits()));
  }
  Distribution dist;
  dist.width = reg.width;
  dist.probabilities.assign(std::size_t{1} << reg.width, 0.0);
  const std::uint64_t mask = (std::uint64_t{1} << reg.width) - 1;
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    dist.probabilities[(i >> reg.first) & mask] += std::norm(amps[i]);
  }
  return dist;
}

std::vector<std::uint64_t> sample_outcomes(const Distribution& dist,
                                           std::uint64_t shots,
                                           std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (dist.probabilities.empty()) {
    throw std::invalid_argument("cannot sample an empty distribution");
  }
  std::vector<double> cdf(dist.probabilities.size());
  std::partial_sum(dist.probabilities.begin(), dist.probabilities.end(),
                   cdf.begin());
  const double total = cdf.back();
  if (!(total > 0.0)) {
    throw std::invalid_argument("distribution has zero mass");
  }
  // Last outcome with positive mass; guards the u ~ total rounding edge.
  std::size_t last = cdf.size() - 1;
  while (last > 0 && dist.probabilities[last] <= 0.0) --last;

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform_unit(rng) * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    out.push_back(std::min(idx, last));
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const Distribution& dist,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto m : sample_outcomes(dist, shots, seed)) ++counts[m];
  return counts;
}

std::map<std::uint64_t, std::uint64_t> sample_counts(const StateVector& state,
                                                     QubitRange reg,
                                                     std::uint64_t shots,
                                                     std::uint64_t seed) {
  return sample_counts(exact_probabilities(state, reg), shots, seed);
}

double total_variation(const Distribution& dist,
                       const std::map<std::uint64_t, std::uint64_t>& counts) {
  std::uint64_t shots = 0;
  for (const auto& [m, c] : counts) shots += c;
  if (shots == 0) throw std::invalid_argument("no samples");
  double tv = 0.0;
  for (std::size_t m = 0; m < dist.probabilities.size(); ++m) {
    const auto it = counts.find(m);
    const double empirical =
        it == counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
    tv += std::abs(empirical - dist.probabilities[m]);
  }
  for (const auto& [m, c] : counts) {
    if (m >= dist.probabilities.size()) tv += static_cast<double>(c) / shots;
  }
  return 0.5 * tv;
}

}  // namespace shorphase

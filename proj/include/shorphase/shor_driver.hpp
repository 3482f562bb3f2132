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
#include <set>
#include <string>
#include <vector>

#include "shorphase/postprocess.hpp"

namespace shorphase {

enum class Backend { Simulator, Injector };

std::string to_string(Backend backend);
/// "sim" / "simulator" / "injector".
Backend parse_backend(const std::string& text);

/// When to stop issuing further runs. Checked after each run.
struct StopPolicy {
  enum class Kind { FirstNontrivial, TargetCount, Exhaust };
  Kind kind = Kind::FirstNontrivial;
  unsigned target = 1;  // TargetCount only

  /// "first", "count:<k>" or "exhaust".
  static StopPolicy parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const StopPolicy&, const StopPolicy&) = default;
};

struct RunConfig {
  std::uint64_t modulus = 0;             // N
  std::optional<std::uint64_t> base;     // fixed a, else random per run
  std::uint64_t shots = 150;
  unsigned runs = 1;                     // maximum number of runs
  std::uint64_t seed = 0;
  StopPolicy policy;
  Backend backend = Backend::Simulator;
  bool gcd_shortcut = false;
  std::optional<unsigned> lower_bits;    // overrides n
  unsigned jobs = 1;                     // concurrent runs; output unaffected
};

/// One distinct phase of the pool chi for a run. `phase` = m / q; the
/// simulator reports q = 2^p, the injector q = N.
struct PhaseSample {
  unsigned run = 0;
  std::uint64_t index = 0;  // position in the run's pool, by first arrival
  std::uint64_t base = 0;
  std::uint64_t m = 0;
  std::uint64_t q = 1;
  std::uint64_t count = 0;  // shots that produced this phase
  double phase = 0.0;
};

struct DivisorRecord {
  PhaseSample sample;
  std::uint64_t l = 0;
  std::vector<CandidateEvaluation> evaluations;
  std::set<std::uint64_t> divisors;

  std::set<std::uint64_t> cofactors(std::uint64_t modulus) const;
};

struct RunInfo {
  unsigned run = 0;
  std::uint64_t base = 0;
  // Circuit layout for (N, a); zero when the run ended at the gcd shortcut.
  unsigned upper_bits = 0;
  unsigned lower_bits = 0;
  std::optional<std::uint64_t> shortcut_divisor;
  std::string note;
};

struct FactorizationReport {
  RunConfig config;
  std::vector<RunInfo> runs;
  std::vector<DivisorRecord> records;  // ordered by (run, sample index)
  std::set<std::uint64_t> divisors;    // phi
  std::vector<std::string> diagnostics;
  unsigned max_qubits_used = 0;
  double runtime_ms = 0.0;

  std::set<std::uint64_t> nontrivial_divisors() const;
  bool nontrivial_found() const { return !nontrivial_divisors().empty(); }
};

/// Validates `config`; throws std::invalid_argument on even N, N < 3,
/// zero shots or runs, or a fixed base outside [2, N-1].
void validate(const RunConfig& config);

/// The phase-based order-finding loop. Run r draws its base and its
/// sampling seed from mt19937_64(seed + r), so the report does not depend
/// on `jobs`. Throws ResourceError when a run's circuit exceeds the qubit
/// cap.
FactorizationReport run(const RunConfig& config);

}  // namespace shorphase

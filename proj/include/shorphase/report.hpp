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
#include <string>
#include <vector>

#include <json.hpp>

#include "shorphase/shor_driver.hpp"
#include "shorphase/state_vector.hpp"

namespace shorphase::report {

inline constexpr int kSchemaVersion = 1;

/// Phases and other reals are written with 17 significant digits.
std::string format_decimal(double value);

struct ConfigEcho {
  std::uint64_t modulus = 0;
  std::string base_policy;  // "fixed" or "random"
  std::optional<std::uint64_t> base;
  std::uint64_t shots = 0;
  unsigned runs = 0;
  std::uint64_t seed = 0;
  std::string policy;
  std::string backend;
  bool gcd_shortcut = false;
  std::optional<unsigned> lower_bits_override;
  std::optional<unsigned> upper_bits;    // p
  std::optional<unsigned> lower_bits;    // n, known when a is fixed
  std::optional<unsigned> total_qubits;  // p + n, known when a is fixed

  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct RunEntry {
  unsigned run = 0;
  std::uint64_t base = 0;
  unsigned upper_bits = 0;
  unsigned lower_bits = 0;
  std::optional<std::uint64_t> shortcut_divisor;
  std::string note;

  friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

struct Evaluation {
  std::uint64_t exponent = 0;
  std::uint64_t d1 = 0;  // gcd(a^{e/2} + 1, N)
  std::uint64_t d2 = 0;  // gcd(a^{e/2} - 1, N)

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

struct Row {
  unsigned run = 0;
  std::uint64_t sample = 0;
  std::uint64_t base = 0;
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  std::uint64_t count = 0;
  std::string phase;  // decimal of m / q
  std::uint64_t l = 0;
  std::vector<Evaluation> evaluations;
  std::vector<std::uint64_t> divisors;
  std::vector<std::uint64_t> cofactors;

  friend bool operator==(const Row&, const Row&) = default;
};

struct ReportDocument {
  int schema_version = kSchemaVersion;
  ConfigEcho config;
  std::vector<RunEntry> runs;
  std::vector<Row> rows;
  std::vector<std::uint64_t> divisors;
  std::vector<std::uint64_t> nontrivial_divisors;
  std::vector<std::string> diagnostics;
  std::optional<double> wall_clock_ms;

  friend bool operator==(const ReportDocument&,
                         const ReportDocument&) = default;
};

/// Builds the document. Wall-clock time is only included on request since
/// it would break byte-identical reports.
ReportDocument make_document(const FactorizationReport& report,
                             bool include_timing);

nlohmann::json to_json(const ReportDocument& doc);
/// Throws std::invalid_argument on a missing schema version or bad field.
ReportDocument from_json(const nlohmann::json& j);

std::string serialize(const ReportDocument& doc);
ReportDocument parse(const std::string& text);

/// `run,a,phase,l,d1,d2,n_over_d1,n_over_d2`, one line per even exponent
/// evaluated (two lines for an odd l).
std::string rows_csv(const ReportDocument& doc);

/// One compact log line per evaluation:
/// `<run> - l= <l> nb qubits: <k> rep= <run> a= <a> phi= <phase> d1 d2 N/d1 N/d2`
std::vector<std::string> run_log_lines(const ReportDocument& doc);

/// `m,phase,probability`, rows sorted by m.
std::string distribution_csv(const Distribution& dist);

}  // namespace shorphase::report

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
#include <filesystem>
#include <string>
#include <vector>

// Replay and oracle checks behind `shorphase verify`.

namespace shorphase::verify {

struct Outcome {
  bool ok = true;
  std::vector<std::string> lines;  // one per case, failures prefixed FAIL
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_error = 0.0;  // qft / ladder only
};

struct Table1Row {
  std::size_t line = 0;
  std::uint64_t n = 0;
  std::string status;  // "verified" or "erratum"
  std::size_t listed_count = 0;
  std::vector<std::uint64_t> divisors;
};

struct Table3Row {
  std::size_t line = 0;
  std::uint64_t n = 0;
  std::uint64_t base = 0;
  double phase = 0.0;
  std::string phase_text;
  std::uint64_t l = 0;
  std::uint64_t d1 = 0, d2 = 0;
  std::uint64_t n_over_d1 = 0, n_over_d2 = 0;
};

/// Compiled-in fixture directory, overridable by SHORPHASE_FIXTURE_DIR.
std::filesystem::path default_fixture_dir();

/// Throws std::runtime_error naming the file and line on any parse problem.
std::vector<Table1Row> load_table1(const std::filesystem::path& path);
std::vector<Table3Row> load_table3(const std::filesystem::path& path);

/// Rows marked "verified" must match trial division exactly; "erratum" rows
/// are reported but never fail.
Outcome check_table1(const std::vector<Table1Row>& rows);

/// Each phase must reproduce its l and unordered divisor set.
Outcome check_table3(const std::vector<Table3Row>& rows);

/// Exhaustive ladder arithmetic over 1 <= p, n <= max_bits and every basis
/// control l.
Outcome check_ladder(unsigned max_bits = 4, double tolerance = 1e-9);

/// Built QFT vs DFT matrix and IQFT vs its conjugate transpose, widths
/// 1..max_width.
Outcome check_qft(unsigned max_width = 5, double tolerance = 1e-10);

}  // namespace shorphase::verify

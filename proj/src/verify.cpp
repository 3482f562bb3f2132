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

#include "shorphase/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shorphase/circuit.hpp"
#include "shorphase/classical_oracle.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/postprocess.hpp"
#include "shorphase/state_vector.hpp"

#ifndef SHORPHASE_FIXTURE_DIR
#define SHORPHASE_FIXTURE_DIR "data/fixtures"
#endif

namespace shorphase::verify {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void bad(const std::filesystem::path& path, std::size_t line,
                      const std::string& why) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           why);
}

std::uint64_t to_u64(const std::string& text, const std::filesystem::path& path,
                     std::size_t line) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} ||
      res.ptr != text.data() + text.size()) {
    bad(path, line, "expected an integer, got '" + text + "'");
  }
  return v;
}

// Data lines of a CSV fixture: skips blank and '#' lines and the header.
std::vector<std::pair<std::size_t, std::vector<std::string>>> read_csv(
    const std::filesystem::path& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::string raw;
  std::size_t line = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '#' || raw == "\r") continue;
    if (!seen_header) {
      if (raw.rfind(header, 0) != 0) {
        bad(path, line, "expected header '" + header + "'");
      }
      seen_header = true;
      continue;
    }
    rows.emplace_back(line, split(raw, ','));
  }
  if (!seen_header) bad(path, line, "missing header");
  return rows;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

void record(Outcome& o, bool pass, const std::string& line) {
  ++o.cases;
  if (!pass) {
    ++o.failures;
    o.ok = false;
    o.lines.push_back("FAIL " + line);
  } else {
    o.lines.push_back("ok   " + line);
  }
}

}  // namespace

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("SHORPHASE_FIXTURE_DIR")) return env;
  return SHORPHASE_FIXTURE_DIR;
}

std::vector<Table1Row> load_table1(const std::filesystem::path& path) {
  std::vector<Table1Row> out;
  for (const auto& [line, cells] : read_csv(path, "N,status,count,divisors")) {
    if (cells.size() != 4) bad(path, line, "expected 4 columns");
    Table1Row row;
    row.line = line;
    row.n = to_u64(cells[0], path, line);
    row.status = cells[1];
    if (row.status != "verified" && row.status != "erratum") {
      bad(path, line, "status must be 'verified' or 'erratum'");
    }
    row.listed_count = to_u64(cells[2], path, line);
    for (const auto& d : split(cells[3], ';')) {
      row.divisors.push_back(to_u64(d, path, line));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Table3Row> load_table3(const std::filesystem::path& path) {
  std::vector<Table3Row> out;
  for (const auto& [line, cells] :
       read_csv(path, "N,a,phase,l,d1,d2,n_over_d1,n_over_d2")) {
    if (cells.size() != 8) bad(path, line, "expected 8 columns");
    Table3Row row;
    row.line = line;
    row.n = to_u64(cells[0], path, line);
    row.base = to_u64(cells[1], path, line);
    row.phase_text = cells[2];
    const auto res = std::from_chars(
        cells[2].data(), cells[2].data() + cells[2].size(), row.phase);
    if (res.ec != std::errc{} || res.ptr != cells[2].data() + cells[2].size()) {
      bad(path, line, "bad phase '" + cells[2] + "'");
    }
    row.l = to_u64(cells[3], path, line);
    row.d1 = to_u64(cells[4], path, line);
    row.d2 = to_u64(cells[5], path, line);
    row.n_over_d1 = to_u64(cells[6], path, line);
    row.n_over_d2 = to_u64(cells[7], path, line);
    out.push_back(row);
  }
  return out;
}

Outcome check_table1(const std::vector<Table1Row>& rows) {
  Outcome o;
  for (const auto& row : rows) {
    const std::string where =
        "line " + std::to_string(row.line) + " N=" + std::to_string(row.n);
    if (row.n < 2) {
      record(o, false, where + ": N < 2");
      continue;
    }
    const auto f = oracle::trial_factor(row.n);
    const std::set<std::uint64_t> listed(row.divisors.begin(),
                                         row.divisors.end());
    const std::set<std::uint64_t> computed(f.divisors.begin(),
                                           f.divisors.end());
    const bool match = listed == computed && row.listed_count == f.divisors.size() &&
                       row.divisors.size() == f.divisors.size();
    if (row.status == "erratum") {
      o.lines.push_back(
          std::string(match ? "note " : "errata ") + where + ": listed " +
          std::to_string(row.listed_count) + " divisors " +
          join(row.divisors) + ", trial division gives " +
          std::to_string(f.divisors.size()) + " " + join(f.divisors));
      continue;
    }
    record(o, match,
           where + ": " + std::to_string(f.divisors.size()) + " divisors" +
               (match ? "" : ", listed " + join(row.divisors) +
                                 " (count " + std::to_string(row.listed_count) +
                                 "), computed " + join(f.divisors)));
  }
  return o;
}

Outcome check_table3(const std::vector<Table3Row>& rows) {
  Outcome o;
  for (const auto& row : rows) {
    const std::string where = "line " + std::to_string(row.line) +
                              " phase=" + row.phase_text;
    if (row.n < 3 || row.d1 == 0 || row.d2 == 0) {
      record(o, false, where + ": invalid N or divisor");
      continue;
    }
    const BigInt N = row.n;
    const BigInt l = phase_to_l(row.phase, N);
    std::set<std::uint64_t> got;
    for (const auto& d : postprocess(l, row.base, N)) {
      got.insert(d.convert_to<std::uint64_t>());
    }
    const std::set<std::uint64_t> want{row.d1, row.d2};
    const bool cofactors_ok =
        row.n / row.d1 == row.n_over_d1 && row.n / row.d2 == row.n_over_d2;
    const bool ok = l == row.l && got == want && cofactors_ok;
    std::string detail = where + ": l=" + l.str();
    if (l != row.l) detail += " (expected " + std::to_string(row.l) + ")";
    detail += " divisors " + join({got.begin(), got.end()});
    if (got != want) detail += " (expected " + join({want.begin(), want.end()}) + ")";
    if (!cofactors_ok) detail += " cofactor columns inconsistent";
    record(o, ok, detail);
  }
  return o;
}

Outcome check_ladder(unsigned max_bits, double tolerance) {
  Outcome o;
  for (unsigned p = 1; p <= max_bits; ++p) {
    for (unsigned n = 1; n <= max_bits; ++n) {
      // Addend sets: all zero, seeded random, and every valid (N, a) layout
      // with this p (n overridden).
      std::vector<std::vector<std::uint64_t>> sets;
      sets.emplace_back(p, 0);
      std::mt19937_64 rng(1000 * p + n);
      for (int k = 0; k < 4; ++k) {
        std::vector<std::uint64_t> b(p);
        for (auto& x : b) x = rng() & ((std::uint64_t{1} << n) - 1);
        sets.push_back(std::move(b));
      }
      for (std::uint64_t N = 3; N + 1 < (std::uint64_t{1} << p); N += 2) {
        if ((std::uint64_t{1} << (p - 1)) > N + 1) continue;
        for (std::uint64_t a = 2; a < N; ++a) {
          const CircuitSpec spec = circuit_params(N, a, n);
          std::vector<std::uint64_t> b;
          for (const auto& pc : phase_constants(spec)) b.push_back(pc.quantized);
          if (b != oracle::ladder_addends(spec)) {
            record(o, false, "N=" + std::to_string(N) + " a=" +
                                 std::to_string(a) + " n=" + std::to_string(n) +
                                 ": b_j disagree with oracle");
          }
          sets.push_back(std::move(b));
        }
      }

      std::size_t failures_before = o.failures;
      std::size_t checked = 0;
      for (const auto& b : sets) {
        const Circuit section = build_ladder_section(p, n, b);
        for (std::uint64_t l = 0; l < (std::uint64_t{1} << p); ++l) {
          StateVector s = StateVector::basis(p + n, l);
          execute(section, s);
          const std::uint64_t want = oracle::ladder_sum(b, l, n);
          const double prob_lower = exact_probabilities(s, {p, n})[want];
          const double prob_upper = exact_probabilities(s, {0, p})[l];
          const double err =
              std::max(1.0 - prob_lower, 1.0 - prob_upper);
          o.max_error = std::max(o.max_error, err);
          ++checked;
          if (err > tolerance) {
            record(o, false,
                   "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                       " l=" + std::to_string(l) + " b=" + join(b) +
                       ": P(lower=" + std::to_string(want) +
                       ")=" + std::to_string(prob_lower));
          }
        }
      }
      if (o.failures == failures_before) {
        record(o, true,
               "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " +
                   std::to_string(sets.size()) + " addend sets, " +
                   std::to_string(checked) + " controls");
      }
    }
  }
  return o;
}

Outcome check_qft(unsigned max_width, double tolerance) {
  Outcome o;
  for (unsigned w = 1; w <= max_width; ++w) {
    const auto built = circuit_matrix(build_qft(w));
    const auto built_inv = circuit_matrix(build_iqft(w));
    const auto dft = oracle::dft_matrix(w);
    const auto dft_conj = oracle::dft_matrix(w, true);
    double err = 0.0;
    double err_inv = 0.0;
    for (std::size_t i = 0; i < dft.size(); ++i) {
      err = std::max(err, std::abs(built[i] - dft[i]));
      err_inv = std::max(err_inv, std::abs(built_inv[i] - dft_conj[i]));
    }
    o.max_error = std::max({o.max_error, err, err_inv});
    std::ostringstream line;
    line << "width " << w << ": max |QFT - DFT| = " << err
         << ", max |IQFT - DFT^H| = " << err_inv;
    record(o, err < tolerance && err_inv < tolerance, line.str());
  }
  return o;
}

}  // namespace shorphase::verify

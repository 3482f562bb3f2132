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

#include "shorphase/report.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "shorphase/phase_modexp.hpp"

namespace shorphase::report {

using nlohmann::json;

namespace {

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

std::vector<std::uint64_t> to_vector(const std::set<std::uint64_t>& s) {
  return {s.begin(), s.end()};
}

}  // namespace

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

ReportDocument make_document(const FactorizationReport& report,
                             bool include_timing) {
  const RunConfig& cfg = report.config;
  ReportDocument doc;
  ConfigEcho& c = doc.config;
  c.modulus = cfg.modulus;
  c.base_policy = cfg.base ? "fixed" : "random";
  c.base = cfg.base;
  c.shots = cfg.shots;
  c.runs = cfg.runs;
  c.seed = cfg.seed;
  c.policy = cfg.policy.to_string();
  c.backend = to_string(cfg.backend);
  c.gcd_shortcut = cfg.gcd_shortcut;
  c.lower_bits_override = cfg.lower_bits;
  if (cfg.modulus >= 3 && cfg.modulus % 2 == 1) {
    const CircuitSpec spec =
        circuit_params(cfg.modulus, cfg.base.value_or(2), cfg.lower_bits);
    c.upper_bits = spec.upper_bits;
    if (cfg.base) {
      c.lower_bits = spec.lower_bits;
      c.total_qubits = spec.width();
    }
  }

  for (const RunInfo& r : report.runs) {
    doc.runs.push_back(RunEntry{r.run, r.base, r.upper_bits, r.lower_bits,
                                r.shortcut_divisor, r.note});
  }
  for (const DivisorRecord& rec : report.records) {
    Row row;
    row.run = rec.sample.run;
    row.sample = rec.sample.index;
    row.base = rec.sample.base;
    row.m = rec.sample.m;
    row.q = rec.sample.q;
    row.count = rec.sample.count;
    row.phase = format_decimal(rec.sample.phase);
    row.l = rec.l;
    for (const auto& ev : rec.evaluations) {
      row.evaluations.push_back(
          Evaluation{ev.exponent.convert_to<std::uint64_t>(),
                     ev.plus.convert_to<std::uint64_t>(),
                     ev.minus.convert_to<std::uint64_t>()});
    }
    row.divisors = to_vector(rec.divisors);
    row.cofactors = to_vector(rec.cofactors(cfg.modulus));
    doc.rows.push_back(std::move(row));
  }
  doc.divisors = to_vector(report.divisors);
  doc.nontrivial_divisors = to_vector(report.nontrivial_divisors());
  doc.diagnostics = report.diagnostics;
  if (include_timing) doc.wall_clock_ms = report.runtime_ms;
  return doc;
}

json to_json(const ReportDocument& doc) {
  const ConfigEcho& c = doc.config;
  json config = {
      {"N", c.modulus},
      {"a_policy", c.base_policy},
      {"a", optional_json(c.base)},
      {"shots", c.shots},
      {"runs", c.runs},
      {"seed", c.seed},
      {"policy", c.policy},
      {"backend", c.backend},
      {"gcd_shortcut", c.gcd_shortcut},
      {"lower_bits_override", optional_json(c.lower_bits_override)},
      {"p", optional_json(c.upper_bits)},
      {"n", optional_json(c.lower_bits)},
      {"total_qubits", optional_json(c.total_qubits)},
  };
  json runs = json::array();
  for (const RunEntry& r : doc.runs) {
    runs.push_back({{"run", r.run},
                    {"a", r.base},
                    {"p", r.upper_bits},
                    {"n", r.lower_bits},
                    {"shortcut_divisor", optional_json(r.shortcut_divisor)},
                    {"note", r.note}});
  }
  json rows = json::array();
  for (const Row& row : doc.rows) {
    json evals = json::array();
    for (const Evaluation& e : row.evaluations) {
      evals.push_back({{"exponent", e.exponent}, {"d1", e.d1}, {"d2", e.d2}});
    }
    rows.push_back({{"run", row.run},
                    {"sample", row.sample},
                    {"a", row.base},
                    {"m", row.m},
                    {"q", row.q},
                    {"count", row.count},
                    {"phase", row.phase},
                    {"l", row.l},
                    {"evaluations", evals},
                    {"divisors", row.divisors},
                    {"cofactors", row.cofactors}});
  }
  return {{"schema_version", doc.schema_version},
          {"config", config},
          {"runs", runs},
          {"rows", rows},
          {"divisors", doc.divisors},
          {"nontrivial_divisors", doc.nontrivial_divisors},
          {"diagnostics", doc.diagnostics},
          {"wall_clock_ms", optional_json(doc.wall_clock_ms)}};
}

ReportDocument from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema version " +
                                  std::to_string(doc.schema_version));
    }
    const json& c = j.at("config");
    ConfigEcho& cfg = doc.config;
    cfg.modulus = c.at("N").get<std::uint64_t>();
    cfg.base_policy = c.at("a_policy").get<std::string>();
    cfg.base = optional_from<std::uint64_t>(c, "a");
    cfg.shots = c.at("shots").get<std::uint64_t>();
    cfg.runs = c.at("runs").get<unsigned>();
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.policy = c.at("policy").get<std::string>();
    cfg.backend = c.at("backend").get<std::string>();
    cfg.gcd_shortcut = c.at("gcd_shortcut").get<bool>();
    cfg.lower_bits_override = optional_from<unsigned>(c, "lower_bits_override");
    cfg.upper_bits = optional_from<unsigned>(c, "p");
    cfg.lower_bits = optional_from<unsigned>(c, "n");
    cfg.total_qubits = optional_from<unsigned>(c, "total_qubits");

    for (const json& r : j.at("runs")) {
      doc.runs.push_back(RunEntry{
          r.at("run").get<unsigned>(), r.at("a").get<std::uint64_t>(),
          r.at("p").get<unsigned>(), r.at("n").get<unsigned>(),
          optional_from<std::uint64_t>(r, "shortcut_divisor"),
          r.at("note").get<std::string>()});
    }
    for (const json& r : j.at("rows")) {
      Row row;
      row.run = r.at("run").get<unsigned>();
      row.sample = r.at("sample").get<std::uint64_t>();
      row.base = r.at("a").get<std::uint64_t>();
      row.m = r.at("m").get<std::uint64_t>();
      row.q = r.at("q").get<std::uint64_t>();
      row.count = r.at("count").get<std::uint64_t>();
      row.phase = r.at("phase").get<std::string>();
      row.l = r.at("l").get<std::uint64_t>();
      for (const json& e : r.at("evaluations")) {
        row.evaluations.push_back(Evaluation{e.at("exponent").get<std::uint64_t>(),
                                             e.at("d1").get<std::uint64_t>(),
                                             e.at("d2").get<std::uint64_t>()});
      }
      row.divisors = r.at("divisors").get<std::vector<std::uint64_t>>();
      row.cofactors = r.at("cofactors").get<std::vector<std::uint64_t>>();
      doc.rows.push_back(std::move(row));
    }
    doc.divisors = j.at("divisors").get<std::vector<std::uint64_t>>();
    doc.nontrivial_divisors =
        j.at("nontrivial_divisors").get<std::vector<std::uint64_t>>();
    doc.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    doc.wall_clock_ms = optional_from<double>(j, "wall_clock_ms");
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const ReportDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

ReportDocument parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report is not JSON: ") + e.what());
  }
  return from_json(j);
}

std::string rows_csv(const ReportDocument& doc) {
  const std::uint64_t N = doc.config.modulus;
  std::string out = "run,a,phase,l,d1,d2,n_over_d1,n_over_d2\n";
  for (const Row& row : doc.rows) {
    for (const Evaluation& e : row.evaluations) {
      out += std::to_string(row.run) + ',' + std::to_string(row.base) + ',' +
             row.phase + ',' + std::to_string(row.l) + ',' +
             std::to_string(e.d1) + ',' + std::to_string(e.d2) + ',' +
             std::to_string(N / e.d1) + ',' + std::to_string(N / e.d2) + '\n';
    }
  }
  return out;
}

std::vector<std::string> run_log_lines(const ReportDocument& doc) {
  const std::uint64_t N = doc.config.modulus;
  std::vector<std::string> lines;
  for (const Row& row : doc.rows) {
    unsigned qubits = 0;
    for (const RunEntry& r : doc.runs) {
      if (r.run == row.run) qubits = r.upper_bits + r.lower_bits;
    }
    const std::string rep = std::to_string(row.run + 1);
    const double phase = static_cast<double>(row.m) / static_cast<double>(row.q);
    for (const Evaluation& e : row.evaluations) {
      lines.push_back(rep + " - l= " + std::to_string(row.l) +
                      " nb qubits: " + std::to_string(qubits) + " rep= " + rep +
                      " a= " + std::to_string(row.base) +
                      " phi= " + shortest(phase) + " " + std::to_string(e.d1) +
                      " " + std::to_string(e.d2) + " " +
                      std::to_string(N / e.d1) + " " + std::to_string(N / e.d2));
    }
  }
  return lines;
}

std::string distribution_csv(const Distribution& dist) {
  std::string out = "m,phase,probability\n";
  const double q = static_cast<double>(dist.size());
  for (std::size_t m = 0; m < dist.size(); ++m) {
    out += std::to_string(m) + ',' + format_decimal(static_cast<double>(m) / q) +
           ',' + format_decimal(dist.probabilities[m]) + '\n';
  }
  return out;
}

}  // namespace shorphase::report

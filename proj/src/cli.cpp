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

#include "shorphase/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "shorphase/classical_oracle.hpp"
#include "shorphase/errors.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/report.hpp"
#include "shorphase/shor_driver.hpp"
#include "shorphase/verify.hpp"

namespace shorphase::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_modulus(const std::string& text) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} ||
      res.ptr != text.data() + text.size()) {
    throw UsageError("cannot parse N = '" + text +
                     "' as a non-negative 64-bit integer");
  }
  return v;
}

void write_file(const std::string& path, const std::string& content,
                std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
  if (!f) throw UsageError("error writing " + path);
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

struct FactorArgs {
  std::string modulus;
  std::optional<std::uint64_t> base;
  std::uint64_t shots = 150;
  unsigned runs = 1;
  std::uint64_t seed = 0;
  std::string policy = "first";
  std::string backend = "sim";
  std::optional<unsigned> lower_bits;
  bool gcd_shortcut = false;
  unsigned jobs = 1;
  std::string report_path;
  std::string rows_path;
  std::string circuit_path;
  std::string dist_path;
  bool run_log = false;
  bool timing = false;
};

int cmd_factor(const FactorArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.modulus = parse_modulus(a.modulus);
  cfg.base = a.base;
  cfg.shots = a.shots;
  cfg.runs = a.runs;
  cfg.seed = a.seed;
  cfg.policy = StopPolicy::parse(a.policy);
  cfg.backend = parse_backend(a.backend);
  cfg.lower_bits = a.lower_bits;
  cfg.gcd_shortcut = a.gcd_shortcut;
  cfg.jobs = a.jobs;

  const FactorizationReport result = shorphase::run(cfg);
  const report::ReportDocument doc = report::make_document(result, a.timing);

  for (const auto& d : doc.diagnostics) err << "note: " << d << '\n';
  if (a.run_log) {
    for (const auto& line : report::run_log_lines(doc)) out << line << '\n';
  }
  if (!a.report_path.empty()) {
    write_file(a.report_path, report::serialize(doc), out);
  }
  if (!a.rows_path.empty()) {
    write_file(a.rows_path, report::rows_csv(doc), out);
  }
  if ((!a.circuit_path.empty() || !a.dist_path.empty()) && !doc.runs.empty()) {
    const CircuitSpec spec =
        circuit_params(cfg.modulus, doc.runs.front().base, cfg.lower_bits);
    if (!a.circuit_path.empty()) {
      write_file(a.circuit_path, to_text(build_shor_circuit(spec).circuit),
                 out);
    }
    if (!a.dist_path.empty()) {
      write_file(a.dist_path,
                 report::distribution_csv(simulate_distribution(spec)), out);
    }
  }
  if (a.report_path != "-") {
    out << "N = " << cfg.modulus << ", runs = " << doc.runs.size()
        << ", phases = " << doc.rows.size() << '\n'
        << "divisors: " << join(doc.divisors) << '\n'
        << "nontrivial: "
        << (doc.nontrivial_divisors.empty() ? "none"
                                            : join(doc.nontrivial_divisors))
        << '\n';
  }
  return result.nontrivial_found() ? kExitFound : kExitNoDivisor;
}

struct DistArgs {
  std::string modulus;
  std::uint64_t base = 0;
  std::optional<unsigned> lower_bits;
  std::string out_path;
  bool analytic = false;
};

int cmd_dist(const DistArgs& a, std::ostream& out) {
  const CircuitSpec spec =
      circuit_params(parse_modulus(a.modulus), a.base, a.lower_bits);
  const Distribution dist = a.analytic ? oracle::analytic_distribution(spec)
                                       : simulate_distribution(spec);
  write_file(a.out_path.empty() ? "-" : a.out_path,
             report::distribution_csv(dist), out);
  return 0;
}

struct VerifyArgs {
  std::string target;
  std::string fixture;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto fixture = [&](const char* name) {
    return a.fixture.empty() ? verify::default_fixture_dir() / name
                             : std::filesystem::path(a.fixture);
  };
  verify::Outcome o;
  if (a.target == "table1") {
    o = verify::check_table1(verify::load_table1(fixture("table1.csv")));
  } else if (a.target == "table3") {
    o = verify::check_table3(verify::load_table3(fixture("table3.csv")));
  } else if (a.target == "ladder") {
    o = verify::check_ladder();
  } else if (a.target == "qft") {
    o = verify::check_qft();
  } else {
    throw UsageError("unknown verify target '" + a.target +
                     "' (table1 | table3 | ladder | qft)");
  }
  for (const auto& line : o.lines) out << line << '\n';
  if (a.target == "qft" || a.target == "ladder") {
    out << "max error: " << o.max_error << '\n';
  }
  out << a.target << ": " << (o.cases - o.failures) << "/" << o.cases
      << " passed\n";
  return o.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Phase-based Shor factoring: simulate, sample, post-process",
               "shorphase"};
  app.require_subcommand(1);

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "Run the factoring loop on N");
  factor->add_option("N", fa.modulus, "Odd integer to factor")->required();
  factor->add_option("-a,--a", fa.base, "Fixed base a (default: random)");
  factor->add_option("--shots", fa.shots, "Samples per run")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  factor->add_option("--runs", fa.runs, "Maximum number of runs")
      ->check(CLI::Range(1u, 1'000'000u));
  factor->add_option("--seed", fa.seed, "RNG seed");
  factor->add_option("--policy", fa.policy, "first | count:<k> | exhaust");
  factor->add_option("--backend", fa.backend, "sim | injector");
  factor->add_option("--lower-bits", fa.lower_bits,
                     "Override the lower register width n");
  factor->add_flag("--gcd-shortcut", fa.gcd_shortcut,
                   "Record gcd(a, N) directly when it exceeds 1");
  factor->add_option("--jobs", fa.jobs, "Runs executed concurrently")
      ->check(CLI::Range(1u, 256u));
  factor->add_option("--report", fa.report_path, "JSON report path ('-' = stdout)");
  factor->add_option("--rows", fa.rows_path, "Per-phase CSV path");
  factor->add_option("--dump-circuit", fa.circuit_path,
                     "Gate listing of the first run's circuit");
  factor->add_option("--emit-dist", fa.dist_path,
                     "Exact distribution CSV of the first run's circuit");
  factor->add_flag("--paper-log", fa.run_log, "Print one log line per phase");
  factor->add_flag("--timing", fa.timing, "Include wall-clock ms in the report");

  DistArgs da;
  auto* dist = app.add_subcommand("dist", "Exact upper-register distribution");
  dist->add_option("N", da.modulus, "Odd integer")->required();
  dist->add_option("-a,--a", da.base, "Base a")->required();
  dist->add_option("--lower-bits", da.lower_bits, "Override n");
  dist->add_option("--out", da.out_path, "CSV path (default stdout)");
  dist->add_flag("--analytic", da.analytic,
                 "Use the closed-form oracle instead of the simulator");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Replay reference fixtures and oracle checks");
  ver->add_option("target", va.target, "table1 | table3 | ladder | qft")
      ->required();
  ver->add_option("--fixture", va.fixture, "Fixture CSV (table1/table3)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (factor->parsed()) return cmd_factor(fa, out, err);
    if (dist->parsed()) return cmd_dist(da, out);
    if (ver->parsed()) return cmd_verify(va, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace shorphase::cli

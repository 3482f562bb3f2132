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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shorphase/circuit.hpp"
#include "shorphase/classical_oracle.hpp"
#include "shorphase/cli.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/postprocess.hpp"
#include "shorphase/report.hpp"
#include "shorphase/shor_driver.hpp"
#include "shorphase/verify.hpp"

using namespace shorphase;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* name;
  double budget_s;
  std::function<Verdict()> check;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

StateVector random_state(unsigned k, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> amps(std::size_t{1} << k);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector::from_amplitudes(std::move(amps));
}

Verdict qft() {
  const double tol = 1e-10;
  const auto o = verify::check_qft(5, tol);
  double err = o.max_error;
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned w = 1 + trial % 5;
    const auto orig = random_state(w, rng);
    auto s = orig;
    execute(build_qft(w), s);
    execute(build_iqft(w), s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      err = std::max(err, std::abs(s.amplitude(i) - orig.amplitude(i)));
    }
  }
  return {o.ok && err <= tol, "max error " + fmt("%.2e", err) + " <= 1e-10, p=1..5, 100 random states"};
}

Verdict ladder() {
  const auto o = verify::check_ladder(4, 1e-9);
  return {o.ok, std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) +
                    " layouts, max error " + fmt("%.2e", o.max_error) + " <= 1e-9"};
}

Verdict recurrence() {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  std::mt19937_64 rng(17);
  std::size_t bad = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    // Moduli below 2^17 keep c_j * phi_a well inside double precision.
    const std::uint64_t N = 2 * (rng() % 65536) + 3;
    const std::uint64_t a = 2 + rng() % (N - 2);
    const double phi = phase_of(a, N);
    std::uint64_t c = 1;
    for (unsigned j = 0; j <= 64; ++j) {
      if (block_coefficient(j, N) != c) ++bad;
      // c_j phi_a against 2^j phi_a, both reduced mod 2pi.
      const double lhs = std::fmod(static_cast<double>(c) * phi, kTwoPi);
      const BigInt r = modpow(BigInt(2), BigInt(j), BigInt(N)) * a % N;
      const double rhs = kTwoPi * r.convert_to<double>() / static_cast<double>(N);
      const double d = std::abs(lhs - rhs);
      worst = std::max(worst, std::min(d, kTwoPi - d));
      c = (2 * c) % N;
    }
  }
  return {bad == 0 && worst <= 1e-9,
          std::to_string(bad) + " coefficient mismatches over 100 N, j<=64; angle error " +
              fmt("%.2e", worst) + " <= 1e-9"};
}

Verdict table3() {
  const auto o = verify::check_table3(
      verify::load_table3(verify::default_fixture_dir() / "table3.csv"));
  return {o.ok && o.cases == 15,
          std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + " rows replayed"};
}

Verdict table1() {
  const auto o = verify::check_table1(
      verify::load_table1(verify::default_fixture_dir() / "table1.csv"));
  std::size_t errata = 0;
  for (const auto& l : o.lines) errata += l.find("errata") != std::string::npos;
  return {o.ok, std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) +
                    " rows match trial division, " + std::to_string(errata) + " erratum noted"};
}

Verdict injector() {
  auto factor = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    args.insert(args.end(), {"--backend", "injector", "--report", "-"});
    const int code = cli::run(args, out, err);
    return std::make_pair(code, code == cli::kExitUsage ? report::ReportDocument{}
                                                        : report::parse(out.str()));
  };
  const auto [c1, d1] = factor({"factor", "1591", "--a", "2"});
  const auto [c2, d2] = factor({"factor", "15", "--a", "2"});
  bool ok1 = c1 == 0;
  for (std::uint64_t d : {37, 43}) {
    ok1 = ok1 && std::count(d1.divisors.begin(), d1.divisors.end(), d) == 1;
  }
  const bool ok2 = c2 == 0 && d2.nontrivial_divisors == std::vector<std::uint64_t>{3, 5};
  return {ok1 && ok2, std::string("1591 -> {37,43} ") + (ok1 ? "yes" : "no") +
                          ", 15 -> {3,5} " + (ok2 ? "yes" : "no")};
}

Verdict sim_vs_analytic() {
  double worst = 0.0, worst_tv = 0.0;
  for (auto [N, a] : {std::pair<std::uint64_t, std::uint64_t>{15, 2}, {15, 7}, {21, 2}}) {
    const auto spec = circuit_params(N, a);
    const auto sim = simulate_distribution(spec);
    const auto ref = oracle::analytic_distribution(spec);
    for (std::size_t m = 0; m < sim.size(); ++m) {
      worst = std::max(worst, std::abs(sim[m] - ref[m]));
    }
    worst_tv = std::max(worst_tv, total_variation(ref, sample_counts(sim, 10000, N * 31 + a)));
  }
  return {worst <= 1e-8 && worst_tv <= 0.05,
          "max |sim - analytic| " + fmt("%.2e", worst) + " <= 1e-8, TV@1e4 " +
              fmt("%.4f", worst_tv) + " <= 0.05"};
}

Verdict oracle_suite() {
  std::size_t checked = 0, bad = 0;
  // Orders are minimal, and exact orders expose a divisor of every odd
  // composite that is not a prime power.
  for (std::uint64_t N = 9; N <= 3000; N += 2) {
    const auto f = oracle::trial_factor(N);
    if (f.prime_powers.size() < 2) continue;
    ++checked;
    bool found = false;
    for (std::uint64_t a = 2; a < N && !found; ++a) {
      const auto r = oracle::multiplicative_order(a, N);
      if (!r) continue;
      if (modpow(a, *r, N) != 1) ++bad;
      for (const auto& d : postprocess(*r, a, N)) {
        if (N % d.convert_to<std::uint64_t>() != 0) ++bad;
        if (d != 1 && d != N) found = true;
      }
    }
    if (!found) ++bad;
  }
  const bool known = oracle::multiplicative_order(2, 1591) == 252u &&
                     oracle::multiplicative_order(2, 15) == 4u &&
                     !oracle::multiplicative_order(3, 9) &&
                     oracle::trial_factor(1591).divisors ==
                         std::vector<std::uint64_t>{1, 37, 43, 1591};
  return {bad == 0 && known, std::to_string(checked) + " odd composites <= 3000, " +
                                 std::to_string(bad) + " violations"};
}

Verdict determinism() {
  auto report_text = [](const char* jobs) {
    std::ostringstream out, err;
    cli::run({"factor", "21", "--shots", "80", "--runs", "6", "--seed", "11", "--policy",
              "exhaust", "--jobs", jobs, "--report", "-"},
             out, err);
    return out.str();
  };
  const auto a = report_text("1"), b = report_text("1"), c = report_text("4");
  const bool ok = !a.empty() && a == b && a == c;
  return {ok, std::string("repeat ") + (a == b ? "identical" : "differs") + ", jobs 1 vs 4 " +
                  (a == c ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "QFT/IQFT matrices and round trip", 5, qft},
      {"AC2", "Fourier-adder ladder arithmetic", 30, ladder},
      {"AC3", "block recurrence and angle identity", 5, recurrence},
      {"AC4", "N=1591 phase table replay", 1, table3},
      {"AC5", "factor-count table", 30, table1},
      {"AC6", "ideal-phase injector through the CLI", 1, injector},
      {"AC7", "simulator vs closed-form distribution", 10, sim_vs_analytic},
      {"AC8", "classical oracle suite", 60, oracle_suite},
      {"AC9", "deterministic reports", 10, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s <= c.budget_s;
    const bool pass = v.ok && in_time;
    failures += !pass;
    std::printf("%s %s %s: %s (%.3f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name, v.detail.c_str(), s, c.budget_s);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

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

#include "shorphase/shor_driver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "shorphase/classical_oracle.hpp"
#include "shorphase/errors.hpp"
#include "shorphase/phase_modexp.hpp"
#include "shorphase/random.hpp"
#include "shorphase/state_vector.hpp"

namespace shorphase {

namespace {

// Largest N the driver will trial-factor for diagnostics and exhaustion.
constexpr std::uint64_t kFactorableLimit = 1'000'000'000'000ULL;

struct RunResult {
  RunInfo info;
  std::vector<DivisorRecord> records;
  std::vector<std::string> diagnostics;
  unsigned qubits = 0;
};

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

DivisorRecord make_record(const PhaseSample& sample, std::uint64_t modulus) {
  DivisorRecord rec;
  rec.sample = sample;
  const BigInt N = modulus;
  rec.l = to_u64(phase_to_l(BigInt(sample.m), BigInt(sample.q), N));
  rec.evaluations = evaluate_candidate(rec.l, sample.base, N);
  for (const auto& ev : rec.evaluations) {
    for (const BigInt* d : {&ev.plus, &ev.minus}) {
      const std::uint64_t v = to_u64(*d);
      if (v == 0 || modulus % v != 0) {
        throw std::logic_error("post-processing produced non-divisor " +
                               std::to_string(v));
      }
      rec.divisors.insert(v);
    }
  }
  return rec;
}

// Collapses a shot sequence into the run's phase pool, first arrival order.
std::vector<PhaseSample> pool_from_outcomes(
    const std::vector<std::uint64_t>& outcomes, unsigned run,
    std::uint64_t base, std::uint64_t q) {
  std::vector<PhaseSample> pool;
  std::map<std::uint64_t, std::size_t> index_of;
  for (std::uint64_t m : outcomes) {
    auto [it, inserted] = index_of.try_emplace(m, pool.size());
    if (inserted) {
      PhaseSample s;
      s.run = run;
      s.index = pool.size();
      s.base = base;
      s.m = m;
      s.q = q;
      s.phase = static_cast<double>(m) / static_cast<double>(q);
      pool.push_back(s);
    }
    ++pool[it->second].count;
  }
  return pool;
}

RunResult execute_run(const RunConfig& config, unsigned run) {
  const std::uint64_t N = config.modulus;
  std::mt19937_64 rng(config.seed + run);
  RunResult out;
  out.info.run = run;
  out.info.base =
      config.base ? *config.base : 2 + uniform_below(rng, N - 2);
  const std::uint64_t sample_seed = rng();
  const std::uint64_t a = out.info.base;

  const std::uint64_t g = std::gcd(a, N);
  if (config.gcd_shortcut && g > 1) {
    out.info.shortcut_divisor = g;
    out.info.note = "gcd(a, N) > 1";
    return out;
  }

  const CircuitSpec spec = circuit_params(N, a, config.lower_bits);
  out.info.upper_bits = spec.upper_bits;
  out.info.lower_bits = spec.lower_bits;

  std::vector<PhaseSample> pool;
  if (config.backend == Backend::Simulator) {
    out.qubits = spec.width();
    const Distribution dist = simulate_distribution(spec);
    pool = pool_from_outcomes(sample_outcomes(dist, config.shots, sample_seed),
                              run, a, spec.q());
  } else {
    if (g > 1) {
      out.info.note = "no order: gcd(a, N) > 1";
      out.diagnostics.push_back("run " + std::to_string(run) + ": a = " +
                                std::to_string(a) +
                                " shares a factor with N; injector skipped");
      return out;
    }
    const std::uint64_t order = *oracle::multiplicative_order(a, N);
    // The injector pool holds the single exact phase ord / N.
    PhaseSample s;
    s.run = run;
    s.base = a;
    s.m = order;
    s.q = N;
    s.count = config.shots;
    s.phase = oracle::ideal_phases(a, N).front();
    pool.push_back(s);
  }
  for (const auto& s : pool) out.records.push_back(make_record(s, N));
  return out;
}

bool policy_satisfied(const StopPolicy& policy,
                      const std::set<std::uint64_t>& divisors,
                      std::uint64_t modulus,
                      const std::optional<std::size_t>& all_nontrivial) {
  std::size_t nontrivial = 0;
  for (auto d : divisors) {
    if (d != 1 && d != modulus) ++nontrivial;
  }
  switch (policy.kind) {
    case StopPolicy::Kind::FirstNontrivial:
      return nontrivial >= 1;
    case StopPolicy::Kind::TargetCount:
      return nontrivial >= policy.target;
    case StopPolicy::Kind::Exhaust:
      return all_nontrivial && nontrivial >= *all_nontrivial;
  }
  return false;
}

}  // namespace

std::string to_string(Backend backend) {
  return backend == Backend::Simulator ? "sim" : "injector";
}

Backend parse_backend(const std::string& text) {
  if (text == "sim" || text == "simulator") return Backend::Simulator;
  if (text == "injector") return Backend::Injector;
  throw std::invalid_argument("unknown backend '" + text + "'");
}

StopPolicy StopPolicy::parse(const std::string& text) {
  StopPolicy p;
  if (text == "first") return p;
  if (text == "exhaust") {
    p.kind = Kind::Exhaust;
    return p;
  }
  if (text.rfind("count:", 0) == 0) {
    const std::string k = text.substr(6);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == k.size() && !k.empty() && v >= 1 && v <= 1'000'000) {
      p.kind = Kind::TargetCount;
      p.target = static_cast<unsigned>(v);
      return p;
    }
  }
  throw std::invalid_argument("unknown policy '" + text +
                              "' (first | count:<k> | exhaust)");
}

std::string StopPolicy::to_string() const {
  switch (kind) {
    case Kind::FirstNontrivial:
      return "first";
    case Kind::TargetCount:
      return "count:" + std::to_string(target);
    case Kind::Exhaust:
      return "exhaust";
  }
  return "?";
}

std::set<std::uint64_t> DivisorRecord::cofactors(std::uint64_t modulus) const {
  std::set<std::uint64_t> out;
  for (auto d : divisors) out.insert(modulus / d);
  return out;
}

std::set<std::uint64_t> FactorizationReport::nontrivial_divisors() const {
  std::set<std::uint64_t> out;
  for (auto d : divisors) {
    if (d != 1 && d != config.modulus) out.insert(d);
  }
  return out;
}

void validate(const RunConfig& config) {
  const std::uint64_t N = config.modulus;
  if (N < 3) {
    throw std::invalid_argument("N must be >= 3, got " + std::to_string(N));
  }
  if (N % 2 == 0) {
    throw std::invalid_argument("N = " + std::to_string(N) +
                                " is even; 2 is a divisor, nothing to run");
  }
  if (config.shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (config.runs == 0) throw std::invalid_argument("runs must be >= 1");
  if (config.base && (*config.base < 2 || *config.base >= N)) {
    throw std::invalid_argument("a must lie in [2, N-1], got " +
                                std::to_string(*config.base));
  }
}

FactorizationReport run(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t N = config.modulus;

  FactorizationReport report;
  report.config = config;

  std::optional<std::size_t> all_nontrivial;
  if (N <= kFactorableLimit) {
    const auto f = oracle::trial_factor(N);
    if (f.is_prime()) {
      report.diagnostics.push_back("N = " + std::to_string(N) +
                                   " is prime; no nontrivial divisor exists");
    }
    all_nontrivial = f.divisors.size() - 2;
  }

  const unsigned jobs = std::max(1u, config.jobs);
  bool done = false;
  for (unsigned first = 0; first < config.runs && !done; first += jobs) {
    const unsigned last = std::min(config.runs, first + jobs);
    std::vector<RunResult> batch;
    if (jobs == 1) {
      batch.push_back(execute_run(config, first));
    } else {
      std::vector<std::future<RunResult>> futures;
      for (unsigned r = first; r < last; ++r) {
        futures.push_back(
            std::async(std::launch::async, execute_run, std::cref(config), r));
      }
      for (auto& f : futures) batch.push_back(f.get());
    }
    // Merge strictly in run order so the report is independent of `jobs`.
    for (auto& res : batch) {
      report.runs.push_back(res.info);
      if (res.info.shortcut_divisor) {
        report.divisors.insert(*res.info.shortcut_divisor);
      }
      for (auto& rec : res.records) {
        report.divisors.insert(rec.divisors.begin(), rec.divisors.end());
        report.records.push_back(std::move(rec));
      }
      report.diagnostics.insert(report.diagnostics.end(),
                                res.diagnostics.begin(),
                                res.diagnostics.end());
      report.max_qubits_used = std::max(report.max_qubits_used, res.qubits);
      if (policy_satisfied(config.policy, report.divisors, N,
                           all_nontrivial)) {
        done = true;
        break;
      }
    }
  }

  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace shorphase

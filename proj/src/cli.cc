// Copyright 2026 The Authors.
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

#include "stosub/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "stosub/continuous_greedy.h"
#include "stosub/errors.h"
#include "stosub/exact_oracle.h"
#include "stosub/io.h"
#include "stosub/linear_program.h"
#include "stosub/policy.h"

namespace stosub {
namespace {

std::string Fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string OutPath(const RunConfig& config, const std::string& name) {
  return (std::filesystem::path(config.out_dir) / name).string();
}

void EnsureOutDir(const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw FormatError("cannot create " + config.out_dir + ": " + ec.message());
}

bool ConfigOk(const RunConfig& config, std::ostream& err) {
  const auto problems = config.Problems();
  for (const auto& p : problems) err << "config: " << p << '\n';
  return problems.empty();
}

// Loads and validates; returns an exit code on failure.
std::optional<int> LoadValid(const std::string& path, Problem& problem,
                             std::ostream& err) {
  try {
    problem = LoadProblem(path);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  }
  const auto violations = Validate(problem.instance);
  if (!violations.empty()) {
    for (const auto& v : violations) err << "invalid: " << v << '\n';
    return kExitDomainFailure;
  }
  return std::nullopt;
}

GreedyOptions OptionsFor(const RunConfig& config) {
  GreedyOptions options;
  options.stopping_time = std::min(config.beta, 0.25);
  options.steps = config.steps;
  options.gradient_samples = config.gradient_samples;
  options.seed = DeriveSeed(config.seed, "solve");
  options.workers = config.workers;
  return options;
}

std::string CertificationCsv(const CertificationReport& report) {
  std::ostringstream os;
  os << kCertificationCsvHeader << '\n';
  for (const RowCheck& row : report.rows) {
    os << row.name << ',' << Fmt(row.lhs) << ',' << Fmt(row.bound) << ','
       << Fmt(row.margin()) << ',' << (row.ok ? 1 : 0) << '\n';
  }
  return os.str();
}

// Smallest per-item keep frequency with data; 1 when no item ever contended.
double MinGamma(const std::vector<ProbabilityEstimate>& gamma) {
  double best = 1.0;
  for (const auto& g : gamma) {
    if (g.sufficient()) best = std::min(best, g.value);
  }
  return best;
}

}  // namespace

std::vector<std::string> RunConfig::Problems() const {
  std::vector<std::string> problems;
  if (!(beta > 0.0 && beta <= 1.0)) problems.push_back("beta must lie in (0, 1]");
  if (steps < 1) problems.push_back("steps must be >= 1");
  if (gradient_samples < 2) problems.push_back("grad-samples must be >= 2");
  if (runs < 2) problems.push_back("runs must be >= 2");
  if (workers < 1) problems.push_back("workers must be >= 1");
  return problems;
}

double CertifiedRatio(double beta, double gamma) {
  return (1.0 - std::min(2.0 * beta, 0.5)) * gamma *
         (1.0 - std::exp(-std::min(beta, 0.25)));
}

int CmdValidate(const std::string& instance_path, std::ostream& out,
                std::ostream& err) {
  Problem problem;
  try {
    problem = LoadProblem(instance_path);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  }
  const Instance& instance = problem.instance;
  std::vector<std::string> violations = Validate(instance);
  if (violations.empty()) {
    const auto& f = problem.utility;
    if (f(StateVector(static_cast<std::size_t>(instance.n))) < 0.0) {
      violations.push_back("utility is negative at the zero vector");
    }
    if (LatticeSize(instance.n, instance.max_state) <= kLatticeEnumerationLimit) {
      const MonotoneCheck mono = CheckMonotone(f, instance.n, instance.max_state);
      if (!mono.ok) {
        std::ostringstream msg;
        msg << "utility is not monotone: f" << mono.witness->first << " > f"
            << mono.witness->second;
        violations.push_back(msg.str());
      }
      const SubmodularCheck sub =
          CheckLatticeSubmodular(f, instance.n, instance.max_state);
      if (!sub.ok) {
        std::ostringstream msg;
        msg << "utility is not lattice submodular: u=" << sub.witness->u
            << " v=" << sub.witness->v << " s=" << sub.witness->state
            << " i=" << sub.witness->item + 1;
        violations.push_back(msg.str());
      }
    } else {
      out << "note: lattice too large for exhaustive utility checks\n";
    }
  }
  for (const auto& v : violations) out << "violation: " << v << '\n';
  if (!violations.empty()) return kExitDomainFailure;
  out << "ok: " << instance.n << " items, B=" << instance.max_state
      << ", budget=" << instance.budget << '\n';
  return kExitOk;
}

int CmdSolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!ConfigOk(config, err)) return kExitIoFailure;
  Problem problem;
  if (auto code = LoadValid(config.instance_path, problem, err)) return *code;
  const Instance& instance = problem.instance;
  if (!instance.outer.HasCompactPolytope()) {
    err << "error: the outer constraint has no compact polytope; the "
           "continuous phase needs a cardinality or partition constraint\n";
    return kExitDomainFailure;
  }
  const GreedyOptions options = OptionsFor(config);
  TimeIndexedSolution solution;
  try {
    solution = RunContinuousGreedy(instance, problem.utility, options);
  } catch (const LpError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  }
  solution.meta.seed = config.seed;
  const CertificationReport report =
      Certify(instance, solution, options.stopping_time);
  try {
    EnsureOutDir(config);
    SaveSolution(solution, OutPath(config, "solution.json"));
    WriteTextFile(OutPath(config, "certification.csv"), CertificationCsv(report));
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  }
  out << "l=" << Fmt(options.stopping_time) << " T=" << options.steps
      << " marginals=[";
  for (int i = 0; i < instance.n; ++i) {
    out << (i ? "," : "") << Fmt(solution.marginals[i]);
  }
  out << "]\n";
  for (const auto& issue : report.issues) err << "certification: " << issue << '\n';
  out << (report.ok ? "certified" : "NOT certified") << " at scale "
      << Fmt(report.scale) << '\n';
  return report.ok ? kExitOk : kExitDomainFailure;
}

int CmdSimulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!ConfigOk(config, err)) return kExitIoFailure;
  Problem problem;
  if (auto code = LoadValid(config.instance_path, problem, err)) return *code;
  TimeIndexedSolution solution;
  try {
    solution = LoadSolution(config.solution_path, problem.instance);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  }
  const BalancedCrs crs{config.crs, config.beta};
  try {
    const InnerOuterPolicy policy(problem.instance, problem.utility, crs,
                                  solution);
    const Instance& instance = policy.instance();
    const std::uint64_t seed = DeriveSeed(config.seed, "simulate");
    const FavgEstimate favg =
        EstimateFavg(policy, config.runs, DeriveSeed(seed, "favg"), config.workers);
    const auto gamma = EstimateGamma(crs, instance, solution.marginals,
                                     config.runs, DeriveSeed(seed, "gamma"),
                                     config.workers);

    std::ostringstream summary;
    summary << kSummaryCsvHeader << '\n'
            << Fmt(favg.value) << ',' << Fmt(favg.standard_error) << ','
            << favg.runs << ',' << favg.inner_violations << ','
            << favg.outer_violations << ',' << favg.adaptivity_violations
            << '\n';

    std::ostringstream gamma_csv;
    gamma_csv << kGammaCsvHeader << '\n';
    for (int i = 0; i < instance.n; ++i) {
      gamma_csv << i + 1 << ',';
      if (gamma[i].sufficient()) {
        gamma_csv << Fmt(gamma[i].value) << ',' << Fmt(gamma[i].standard_error);
      } else {
        gamma_csv << "NA,NA";
      }
      gamma_csv << ',' << gamma[i].trials << ',' << Fmt(crs.DocumentedGamma())
                << '\n';
    }

    std::ostringstream alpha_csv;
    alpha_csv << kAlphaCsvHeader << '\n';
    for (CrsMapping mapping : {CrsMapping::kA, CrsMapping::kB, CrsMapping::kC}) {
      const AlphaTable table =
          EstimateAlpha(mapping, instance, crs, solution, config.runs,
                        DeriveSeed(seed, MappingName(mapping)), config.workers);
      for (int i = 0; i < instance.n; ++i) {
        for (int j = 1; j <= instance.max_state; ++j) {
          const ProbabilityEstimate& e = table.keep[i][j - 1];
          alpha_csv << i + 1 << ',' << j << ',' << MappingName(mapping) << ',';
          if (e.sufficient()) {
            alpha_csv << Fmt(e.value) << ',' << Fmt(e.standard_error);
          } else {
            alpha_csv << "NA,NA";
          }
          alpha_csv << ',' << e.trials << '\n';
        }
      }
    }

    EnsureOutDir(config);
    WriteTextFile(OutPath(config, "summary.csv"), summary.str());
    WriteTextFile(OutPath(config, "gamma.csv"), gamma_csv.str());
    WriteTextFile(OutPath(config, "alpha.csv"), alpha_csv.str());

    out << "f_avg=" << Fmt(favg.value) << " se=" << Fmt(favg.standard_error)
        << " runs=" << favg.runs << " inner_violations=" << favg.inner_violations
        << " outer_violations=" << favg.outer_violations << '\n';
    const bool clean = favg.inner_violations == 0 &&
                       favg.outer_violations == 0 &&
                       favg.adaptivity_violations == 0;
    return clean ? kExitOk : kExitDomainFailure;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  }
}

int CmdRatio(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!ConfigOk(config, err)) return kExitIoFailure;
  Problem problem;
  if (auto code = LoadValid(config.instance_path, problem, err)) return *code;
  const Instance& instance = problem.instance;
  try {
    const OptimalPolicy opt = OptimalAdaptiveValue(instance, problem.utility);
    const GreedyOptions options = OptionsFor(config);
    const TimeIndexedSolution solution =
        RunContinuousGreedy(instance, problem.utility, options);
    const BalancedCrs crs{config.crs, config.beta};
    const InnerOuterPolicy policy(instance, problem.utility, crs, solution);
    const std::uint64_t seed = DeriveSeed(config.seed, "ratio");
    const double gamma = MinGamma(
        EstimateGamma(crs, instance, solution.marginals, config.runs,
                      DeriveSeed(seed, "gamma"), config.workers));
    const FavgEstimate favg = EstimateFavg(policy, config.runs,
                                           DeriveSeed(seed, "favg"),
                                           config.workers);
    const double ratio = CertifiedRatio(config.beta, gamma);
    const double threshold = ratio * opt.value - 3.0 * favg.standard_error;
    const bool pass = favg.value >= threshold;
    out << (pass ? "PASS" : "FAIL") << " f_avg=" << Fmt(favg.value)
        << " se=" << Fmt(favg.standard_error) << " opt=" << Fmt(opt.value)
        << " f_avg/opt="
        << (opt.value > 0.0 ? Fmt(favg.value / opt.value) : std::string("NA"))
        << " gamma_hat=" << Fmt(gamma) << " certified_ratio=" << Fmt(ratio)
        << " threshold=" << Fmt(threshold) << '\n';
    return pass ? kExitOk : kExitDomainFailure;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitDomainFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  } catch (const LpError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  }
}

}  // namespace stosub

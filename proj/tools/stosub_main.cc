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

// Command-line front end: validate, solve, simulate, ratio.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "stosub/cli.h"

int main(int argc, char** argv) {
  CLI::App app{"Adaptive stochastic submodular maximization under inner and "
               "outer constraints"};
  app.require_subcommand(1);

  stosub::RunConfig config;
  const std::map<std::string, stosub::CrsKind> crs_names{
      {"priority", stosub::CrsKind::kRandomPriority},
      {"identity", stosub::CrsKind::kIdentity}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--instance", config.instance_path, "Instance JSON file")
        ->required();
    cmd->add_option("--beta", config.beta, "CRS scale beta in (0, 1]");
    cmd->add_option("--steps", config.steps, "Continuous greedy steps T");
    cmd->add_option("--grad-samples", config.gradient_samples,
                    "Monte Carlo samples per gradient estimate");
    cmd->add_option("--crs", config.crs, "Contention resolution scheme")
        ->transform(CLI::CheckedTransformer(crs_names, CLI::ignore_case));
    cmd->add_option("--runs", config.runs, "Simulation runs / CRS trials");
    cmd->add_option("--seed", config.seed, "Master seed");
    cmd->add_option("--workers", config.workers, "Worker threads");
    cmd->add_option("--out", config.out_dir, "Output directory");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("--instance", config.instance_path, "Instance JSON file")
      ->required();

  CLI::App* solve = app.add_subcommand(
      "solve", "Run the continuous phase and certify the fractional solution");
  add_common(solve);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Simulate the adaptive policy from a solution file");
  add_common(simulate);
  simulate->add_option("--solution", config.solution_path, "Solution JSON file")
      ->required();

  CLI::App* ratio = app.add_subcommand(
      "ratio", "Compare the policy against the exact adaptive optimum");
  add_common(ratio);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? stosub::kExitOk : stosub::kExitIoFailure;
  }

  if (*validate) return stosub::CmdValidate(config.instance_path, std::cout, std::cerr);
  if (*solve) return stosub::CmdSolve(config, std::cout, std::cerr);
  if (*simulate) return stosub::CmdSimulate(config, std::cout, std::cerr);
  if (*ratio) return stosub::CmdRatio(config, std::cout, std::cerr);
  return stosub::kExitIoFailure;
}

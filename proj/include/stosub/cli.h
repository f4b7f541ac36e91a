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

#ifndef STOSUB_CLI_H_
#define STOSUB_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "stosub/crs.h"

namespace stosub {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitIoFailure = 2;

struct RunConfig {
  std::string instance_path;
  std::string solution_path;  // simulate only
  double beta = 0.25;
  int steps = 50;
  std::int64_t gradient_samples = 10'000;
  CrsKind crs = CrsKind::kRandomPriority;
  std::int64_t runs = 100'000;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out_dir = ".";

  // Empty when beta is in (0, 1] and every count is >= 1.
  std::vector<std::string> Problems() const;
};

// Each command writes human-readable progress to `out` and diagnostics to
// `err`, and returns one of the exit codes above.
int CmdValidate(const std::string& instance_path, std::ostream& out,
                std::ostream& err);

// Writes <out>/solution.json and <out>/certification.csv.
int CmdSolve(const RunConfig& config, std::ostream& out, std::ostream& err);

// Writes <out>/summary.csv, <out>/gamma.csv and <out>/alpha.csv.
int CmdSimulate(const RunConfig& config, std::ostream& out, std::ostream& err);

// Prints one verdict line comparing the simulated value with the exact
// optimum and the certified ratio.
int CmdRatio(const RunConfig& config, std::ostream& out, std::ostream& err);

// CSV headers; pinned by golden-file tests.
inline constexpr const char* kCertificationCsvHeader = "row,lhs,bound,margin,ok";
inline constexpr const char* kSummaryCsvHeader =
    "f_avg,standard_error,runs,inner_violations,outer_violations,"
    "adaptivity_violations";
inline constexpr const char* kGammaCsvHeader =
    "item,gamma,standard_error,trials,target";
inline constexpr const char* kAlphaCsvHeader =
    "item,state,mapping,alpha,standard_error,trials";

// The certified ratio (1 - min{2 beta, 1/2}) * gamma * (1 - e^-min{beta, 1/4}).
double CertifiedRatio(double beta, double gamma);

}  // namespace stosub

#endif  // STOSUB_CLI_H_

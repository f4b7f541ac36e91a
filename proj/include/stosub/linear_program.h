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

#ifndef STOSUB_LINEAR_PROGRAM_H_
#define STOSUB_LINEAR_PROGRAM_H_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stosub {

// maximize  objective . x
// s.t.      rows[r] . x <= bounds[r]   for every r
//           0 <= x_j <= 1              for every j
//
// Row coefficients and bounds are nonnegative, so x = 0 is always feasible
// and the box keeps the problem bounded.
struct LinearProgram {
  int num_variables = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> bounds;
  std::vector<std::string> row_names;  // optional, for dumps and diagnostics

  void AddRow(std::vector<double> coefficients, double bound,
              std::string name = {});
};

struct LpSolution {
  std::vector<double> values;
  double objective = 0.0;
  int iterations = 0;
};

class LpError : public std::runtime_error {
 public:
  explicit LpError(const std::string& what) : std::runtime_error(what) {}
};

// Dense bounded-variable primal simplex with Bland's rule. Returns a basic
// optimal solution. Throws std::invalid_argument on a malformed program and
// LpError if the pivot loop stalls or the result fails its feasibility check.
LpSolution SolveLp(const LinearProgram& lp);

// Plain-text dump: one line for the objective, then one line per row.
void DumpLp(const LinearProgram& lp, std::ostream& os);

}  // namespace stosub

#endif  // STOSUB_LINEAR_PROGRAM_H_

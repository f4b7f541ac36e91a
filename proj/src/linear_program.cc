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

#include "stosub/linear_program.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace stosub {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
constexpr double kFeasibilityTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckShape(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.num_variables);
  if (lp.num_variables < 0 || lp.objective.size() != n) {
    throw std::invalid_argument("objective length must equal num_variables");
  }
  if (lp.rows.size() != lp.bounds.size()) {
    throw std::invalid_argument("one bound per row is required");
  }
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    if (lp.rows[r].size() != n) {
      throw std::invalid_argument("row " + std::to_string(r) +
                                  " has the wrong length");
    }
    if (!(lp.bounds[r] >= 0.0) || !std::isfinite(lp.bounds[r])) {
      throw std::invalid_argument("row bounds must be finite and >= 0");
    }
    for (double a : lp.rows[r]) {
      if (!(a >= 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("row coefficients must be finite and >= 0");
      }
    }
  }
}

}  // namespace

void LinearProgram::AddRow(std::vector<double> coefficients, double bound,
                           std::string name) {
  rows.push_back(std::move(coefficients));
  bounds.push_back(bound);
  row_names.push_back(std::move(name));
}

LpSolution SolveLp(const LinearProgram& lp) {
  CheckShape(lp);
  const int n = lp.num_variables;
  const int m = static_cast<int>(lp.rows.size());
  const int total = n + m;  // structurals, then one slack per row

  std::vector<double> upper(total, kInf);
  std::fill(upper.begin(), upper.begin() + n, 1.0);
  std::vector<double> cost(total, 0.0);
  std::copy(lp.objective.begin(), lp.objective.end(), cost.begin());

  // tableau[r] = (B^-1 A)_r over all columns; slack basis initially.
  std::vector<std::vector<double>> tableau(m, std::vector<double>(total, 0.0));
  std::vector<int> basis(m);
  std::vector<double> beta(lp.bounds);
  for (int r = 0; r < m; ++r) {
    std::copy(lp.rows[r].begin(), lp.rows[r].end(), tableau[r].begin());
    tableau[r][n + r] = 1.0;
    basis[r] = n + r;
  }
  std::vector<char> is_basic(total, 0);
  for (int r = 0; r < m; ++r) is_basic[n + r] = 1;
  std::vector<char> at_upper(total, 0);
  std::vector<double> reduced(cost);  // slack costs are zero

  const int max_iterations = 50 * (total + 10) * (total + 10);
  int iterations = 0;
  for (;; ++iterations) {
    if (iterations > max_iterations) {
      std::ostringstream msg;
      msg << "simplex stalled after " << iterations << " pivots (" << n
          << " variables, " << m << " rows)";
      throw LpError(msg.str());
    }
    // Bland: least-index improving column.
    int entering = -1;
    for (int j = 0; j < total; ++j) {
      if (is_basic[j]) continue;
      if ((!at_upper[j] && reduced[j] > kCostTol) ||
          (at_upper[j] && reduced[j] < -kCostTol)) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    const double dir = at_upper[entering] ? -1.0 : 1.0;
    double step = upper[entering];
    int leaving_row = -1;
    bool leaving_to_upper = false;
    for (int r = 0; r < m; ++r) {
      const double delta = tableau[r][entering] * dir;
      double limit = kInf;
      bool to_upper = false;
      if (delta > kPivotTol) {
        limit = std::max(0.0, beta[r]) / delta;
      } else if (delta < -kPivotTol && upper[basis[r]] < kInf) {
        limit = std::max(0.0, upper[basis[r]] - beta[r]) / -delta;
        to_upper = true;
      } else {
        continue;
      }
      // Ties go to the least variable index (Bland); a bound flip of the
      // entering column competes with its own index.
      const int incumbent = leaving_row < 0 ? entering : basis[leaving_row];
      if (limit < step - kPivotTol ||
          (limit <= step + kPivotTol && basis[r] < incumbent)) {
        step = std::min(step, limit);
        leaving_row = r;
        leaving_to_upper = to_upper;
      } else if (limit < step) {
        step = limit;
      }
    }
    if (step == kInf) throw LpError("unbounded direction in a boxed program");

    for (int r = 0; r < m; ++r) beta[r] -= tableau[r][entering] * dir * step;

    if (leaving_row < 0) {
      at_upper[entering] = !at_upper[entering];
      continue;
    }

    const double entering_value =
        (at_upper[entering] ? upper[entering] : 0.0) + dir * step;
    const int leaving = basis[leaving_row];
    is_basic[leaving] = 0;
    at_upper[leaving] = leaving_to_upper ? 1 : 0;
    is_basic[entering] = 1;
    at_upper[entering] = 0;
    basis[leaving_row] = entering;
    beta[leaving_row] = entering_value;

    std::vector<double>& pivot_row = tableau[leaving_row];
    const double pivot = pivot_row[entering];
    for (double& a : pivot_row) a /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leaving_row) continue;
      const double factor = tableau[r][entering];
      if (factor == 0.0) continue;
      for (int j = 0; j < total; ++j) tableau[r][j] -= factor * pivot_row[j];
      tableau[r][entering] = 0.0;
    }
    const double factor = reduced[entering];
    for (int j = 0; j < total; ++j) reduced[j] -= factor * pivot_row[j];
    reduced[entering] = 0.0;
  }

  std::vector<double> x(total, 0.0);
  for (int j = 0; j < total; ++j) {
    if (!is_basic[j] && at_upper[j]) x[j] = upper[j];
  }
  for (int r = 0; r < m; ++r) x[basis[r]] = beta[r];

  LpSolution solution;
  solution.iterations = iterations;
  solution.values.assign(x.begin(), x.begin() + n);
  for (double& v : solution.values) {
    if (v < -kFeasibilityTol || v > 1.0 + kFeasibilityTol) {
      throw LpError("simplex produced a variable outside [0,1]: " +
                    std::to_string(v));
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  for (int r = 0; r < m; ++r) {
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) lhs += lp.rows[r][j] * solution.values[j];
    if (lhs > lp.bounds[r] + kFeasibilityTol) {
      std::ostringstream msg;
      msg << "simplex result violates row " << r;
      if (r < static_cast<int>(lp.row_names.size()) && !lp.row_names[r].empty())
        msg << " (" << lp.row_names[r] << ")";
      msg << ": " << lhs << " > " << lp.bounds[r];
      throw LpError(msg.str());
    }
  }
  for (int j = 0; j < n; ++j) {
    solution.objective += lp.objective[j] * solution.values[j];
  }
  return solution;
}

void DumpLp(const LinearProgram& lp, std::ostream& os) {
  os << "max";
  for (double c : lp.objective) os << ' ' << c;
  os << '\n';
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    os << (r < lp.row_names.size() && !lp.row_names[r].empty()
               ? lp.row_names[r]
               : "r" + std::to_string(r));
    for (double a : lp.rows[r]) os << ' ' << a;
    os << " <= " << lp.bounds[r] << '\n';
  }
}

}  // namespace stosub

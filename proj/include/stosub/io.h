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

#ifndef STOSUB_IO_H_
#define STOSUB_IO_H_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "stosub/continuous_greedy.h"
#include "stosub/lattice.h"
#include "stosub/stochastic_model.h"

namespace stosub {

// Malformed or unreadable input files.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// An instance together with its utility, as stored in an instance file:
//
//   {"n":2, "B":2, "budget":5,
//    "items":[{"probs":[0.5,0.5], "costs":[1,2]}, ...],
//    "outer":{"kind":"cardinality","k":2},
//    "utility":{"family":"modular","params":{"weights":[1,1]}}}
//
// Item ids in "outer" are 1-based. Outer kinds: cardinality {k}, partition
// {blocks, caps}, explicit {maximal}. Utility families: modular {weights},
// concave {weights, g: "min"|"sqrt", theta}, coverage {multipliers, lists,
// element_weights} with 0-based element ids.
struct Problem {
  Instance instance;
  UtilityOracle utility = UtilityOracle::Modular({});
};

// Throw FormatError on structural problems. Semantic checks are left to
// Validate().
Problem ProblemFromJson(const nlohmann::json& doc);
nlohmann::json ProblemToJson(const Problem& problem);

Problem LoadProblem(const std::string& path);
void SaveProblem(const Problem& problem, const std::string& path);

// {"meta":{"l":..,"T":..,"seed":..,"gradient_samples":..},
//  "x":[{"i":1,"t":1,"value":..}, ...]}; zero entries are omitted.
nlohmann::json SolutionToJson(const TimeIndexedSolution& solution);
TimeIndexedSolution SolutionFromJson(const nlohmann::json& doc,
                                     const Instance& instance);

TimeIndexedSolution LoadSolution(const std::string& path,
                                 const Instance& instance);
void SaveSolution(const TimeIndexedSolution& solution, const std::string& path);

nlohmann::json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& contents);

}  // namespace stosub

#endif  // STOSUB_IO_H_

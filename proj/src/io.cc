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

#include "stosub/io.h"

#include <fstream>
#include <sstream>

namespace stosub {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

template <typename T>
T As(const json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field \"") + what + "\": " + e.what());
  }
}

int AsInt(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw FormatError(std::string("field \"") + what + "\" must be an integer");
  }
  return value.get<int>();
}

std::vector<std::vector<int>> ItemLists(const json& value, const char* what) {
  auto lists = As<std::vector<std::vector<int>>>(value, what);
  for (auto& list : lists) {
    for (int& i : list) --i;
  }
  return lists;
}

json OneBasedLists(const std::vector<std::vector<int>>& lists) {
  json out = json::array();
  for (const auto& list : lists) {
    json row = json::array();
    for (int i : list) row.push_back(i + 1);
    out.push_back(row);
  }
  return out;
}

OuterConstraint OuterFromJson(const json& doc) {
  const auto kind = As<std::string>(Field(doc, "kind"), "outer.kind");
  if (kind == "cardinality") {
    return OuterConstraint::Cardinality(AsInt(Field(doc, "k"), "outer.k"));
  }
  if (kind == "partition") {
    return OuterConstraint::Partition(
        ItemLists(Field(doc, "blocks"), "outer.blocks"),
        As<std::vector<int>>(Field(doc, "caps"), "outer.caps"));
  }
  if (kind == "explicit") {
    return OuterConstraint::Explicit(
        ItemLists(Field(doc, "maximal"), "outer.maximal"));
  }
  throw FormatError("unknown outer kind \"" + kind + "\"");
}

json OuterToJson(const OuterConstraint& outer) {
  switch (outer.kind()) {
    case OuterKind::kCardinality:
      return {{"kind", "cardinality"}, {"k", outer.k()}};
    case OuterKind::kPartition:
      return {{"kind", "partition"},
              {"blocks", OneBasedLists(outer.blocks())},
              {"caps", outer.caps()}};
    case OuterKind::kExplicit:
      return {{"kind", "explicit"},
              {"maximal", OneBasedLists(outer.maximal_sets())}};
  }
  return {};
}

UtilityOracle UtilityFromJson(const json& doc) {
  const auto family = As<std::string>(Field(doc, "family"), "utility.family");
  const json& params = Field(doc, "params");
  try {
    if (family == "modular") {
      return UtilityOracle::Modular(
          As<std::vector<double>>(Field(params, "weights"), "weights"));
    }
    if (family == "concave") {
      const auto g = As<std::string>(Field(params, "g"), "g");
      if (g != "min" && g != "sqrt") {
        throw FormatError("concave utility needs g = \"min\" or \"sqrt\"");
      }
      const double theta =
          params.contains("theta") ? As<double>(params.at("theta"), "theta")
                                   : 1.0;
      return UtilityOracle::ConcaveOverModular(
          As<std::vector<double>>(Field(params, "weights"), "weights"),
          g == "min" ? ConcaveShape::kMin : ConcaveShape::kSqrt, theta);
    }
    if (family == "coverage") {
      return UtilityOracle::Coverage(
          As<std::vector<int>>(Field(params, "multipliers"), "multipliers"),
          As<std::vector<std::vector<int>>>(Field(params, "lists"), "lists"),
          As<std::vector<double>>(Field(params, "element_weights"),
                                  "element_weights"));
    }
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("utility: ") + e.what());
  }
  throw FormatError("unknown utility family \"" + family + "\"");
}

json UtilityToJson(const UtilityOracle& f) {
  struct Visitor {
    json operator()(const ModularParams& p) const {
      return {{"family", "modular"}, {"params", {{"weights", p.weights}}}};
    }
    json operator()(const ConcaveParams& p) const {
      return {{"family", "concave"},
              {"params",
               {{"weights", p.weights},
                {"g", p.shape == ConcaveShape::kMin ? "min" : "sqrt"},
                {"theta", p.theta}}}};
    }
    json operator()(const CoverageParams& p) const {
      return {{"family", "coverage"},
              {"params",
               {{"multipliers", p.multipliers},
                {"lists", p.lists},
                {"element_weights", p.element_weights}}}};
    }
    json operator()(const CustomParams& p) const {
      throw FormatError("custom utility \"" + p.name + "\" is not serializable");
    }
  };
  return std::visit(Visitor{}, f.params());
}

}  // namespace

Problem ProblemFromJson(const json& doc) {
  if (!doc.is_object()) throw FormatError("instance must be a JSON object");
  Problem problem;
  Instance& instance = problem.instance;
  instance.n = AsInt(Field(doc, "n"), "n");
  instance.max_state = AsInt(Field(doc, "B"), "B");
  instance.budget = AsInt(Field(doc, "budget"), "budget");
  const json& items = Field(doc, "items");
  if (!items.is_array()) throw FormatError("field \"items\" must be an array");
  for (const json& item : items) {
    instance.items.push_back(
        {As<std::vector<double>>(Field(item, "probs"), "probs"),
         As<std::vector<int>>(Field(item, "costs"), "costs")});
  }
  instance.outer = OuterFromJson(Field(doc, "outer"));
  problem.utility = UtilityFromJson(Field(doc, "utility"));
  if (auto arity = problem.utility.arity();
      arity && static_cast<int>(*arity) != instance.n) {
    throw FormatError("utility parameters describe " + std::to_string(*arity) +
                      " items but n = " + std::to_string(instance.n));
  }
  return problem;
}

json ProblemToJson(const Problem& problem) {
  const Instance& instance = problem.instance;
  json items = json::array();
  for (const ItemModel& item : instance.items) {
    items.push_back({{"probs", item.probs}, {"costs", item.costs}});
  }
  return {{"n", instance.n},
          {"B", instance.max_state},
          {"budget", instance.budget},
          {"items", items},
          {"outer", OuterToJson(instance.outer)},
          {"utility", UtilityToJson(problem.utility)}};
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << contents;
  if (!out) throw FormatError("write failed for " + path);
}

Problem LoadProblem(const std::string& path) {
  return ProblemFromJson(ReadJsonFile(path));
}

void SaveProblem(const Problem& problem, const std::string& path) {
  WriteTextFile(path, ProblemToJson(problem).dump(2) + "\n");
}

json SolutionToJson(const TimeIndexedSolution& solution) {
  json entries = json::array();
  for (std::size_t i = 0; i < solution.x.size(); ++i) {
    for (std::size_t t = 0; t < solution.x[i].size(); ++t) {
      if (solution.x[i][t] == 0.0) continue;
      entries.push_back(
          {{"i", i + 1}, {"t", t + 1}, {"value", solution.x[i][t]}});
    }
  }
  const SolutionMeta& meta = solution.meta;
  return {{"meta",
           {{"l", meta.stopping_time},
            {"T", meta.steps},
            {"seed", meta.seed},
            {"gradient_samples", meta.gradient_samples}}},
          {"x", entries}};
}

TimeIndexedSolution SolutionFromJson(const json& doc,
                                     const Instance& instance) {
  TimeIndexedSolution sol = TimeIndexedSolution::Zero(instance);
  const json& meta = Field(doc, "meta");
  sol.meta.stopping_time = As<double>(Field(meta, "l"), "meta.l");
  sol.meta.steps = AsInt(Field(meta, "T"), "meta.T");
  sol.meta.seed = As<std::uint64_t>(Field(meta, "seed"), "meta.seed");
  if (meta.contains("gradient_samples")) {
    sol.meta.gradient_samples =
        As<std::int64_t>(meta.at("gradient_samples"), "meta.gradient_samples");
  }
  for (const json& entry : Field(doc, "x")) {
    const int i = AsInt(Field(entry, "i"), "x.i");
    const int t = AsInt(Field(entry, "t"), "x.t");
    if (i < 1 || i > instance.n || t < 1 || t > instance.SlotCount(i - 1)) {
      throw FormatError("solution entry (i=" + std::to_string(i) + ", t=" +
                        std::to_string(t) + ") is outside the slot range");
    }
    sol.x[i - 1][t - 1] = As<double>(Field(entry, "value"), "x.value");
  }
  sol.RecomputeMarginals();
  return sol;
}

TimeIndexedSolution LoadSolution(const std::string& path,
                                 const Instance& instance) {
  return SolutionFromJson(ReadJsonFile(path), instance);
}

void SaveSolution(const TimeIndexedSolution& solution,
                  const std::string& path) {
  WriteTextFile(path, SolutionToJson(solution).dump(2) + "\n");
}

}  // namespace stosub

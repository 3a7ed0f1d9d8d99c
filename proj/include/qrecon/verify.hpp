// Copyright 2026 The qrecon Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrecon/io.hpp"

namespace qrecon::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  io::Json metrics;      ///< deterministic numbers backing the verdict
  double seconds = 0.0;  ///< wall time; not part of any report
};

CriterionResult clique_census();
CriterionResult pentagon_equalities(std::uint64_t seed);
CriterionResult pure_state_norm(std::uint64_t seed);
CriterionResult pentagon_sum_identity(std::uint64_t seed);
CriterionResult generators();
CriterionResult evolution_equivalence(std::uint64_t seed);
CriterionResult born_rule(std::uint64_t seed);
CriterionResult logic();
CriterionResult complementarity_inequalities(std::uint64_t seed);
CriterionResult monogamy(std::uint64_t seed);
CriterionResult interrogation(std::uint64_t seed);

/// Criteria 1 through 11.
std::vector<CriterionResult> run_checks(std::uint64_t seed);

/// Criteria 1 through 11 plus criterion 12, which reruns 1 through 11 and
/// compares the serialized reports byte for byte.
std::vector<CriterionResult> run_all(std::uint64_t seed);

io::Json to_json(const std::vector<CriterionResult>& results);

/// "[PASS]  1 clique census (0.012 s)"
std::string summary_line(const CriterionResult& result);

}  // namespace qrecon::verify

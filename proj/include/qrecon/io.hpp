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

#include <string>
#include <vector>

#include "json.hpp"
#include "qrecon/charges.hpp"
#include "qrecon/dynamics.hpp"
#include "qrecon/graph.hpp"
#include "qrecon/interrogation.hpp"
#include "qrecon/logic.hpp"
#include "qrecon/state.hpp"

namespace qrecon::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits; round-trips every double.
std::string format_double(double x);

Json to_json(const BlochState& s);
BlochState bloch_from_json(const Json& doc);
std::string states_to_csv(const std::vector<BlochState>& states);

/// {n, data: [[re, im], ...]} in row-major order.
Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& doc);

/// {n, entries: [[i, j, value]]} with i < j; the (j, i) partner is implied.
Json to_json(const EvolutionGenerator& g);
EvolutionGenerator generator_from_json(const Json& doc);

/// {n, cliques: [{size, members}], counts_by_size}
Json clique_census(int n, const std::vector<ComplementaritySet>& cliques);

/// {state_id, charges, sum_identity_residual, violations}
Json charge_report(std::size_t state_id, const ChargeReport& report, double tolerance);

Json to_json(const std::vector<ParityConstraint>& table);
Json to_json(const InterrogationRecord& record);
Json to_json(const TomographyEstimate& estimate);
std::string convergence_csv(const ConvergenceReport& report);

}  // namespace qrecon::io

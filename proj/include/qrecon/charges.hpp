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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qrecon/graph.hpp"
#include "qrecon/state.hpp"

namespace qrecon {

/// Informational charge: sum of r_i^2 over the set, in bits.
double charge(const std::vector<QuestionIndex>& members, const BlochState& s);
inline double charge(const ComplementaritySet& set, const BlochState& s) { return charge(set.members, s); }

struct ChargeReport {
  std::array<double, 6> charges{};  ///< I(Pent_a), a = 1..6
  double total_information = 0.0;  ///< I_2(r) = |r|^2
  double sum_identity_residual = 0.0;  ///< sum_a I(Pent_a) - 2 I
  bool pure = false;
  /// |I(Pent_a) - 1| per pentagon; only for pure states.
  std::optional<std::array<double, 6>> pentagon_residuals;
};

/// Six pentagon charges of a two-qubit state; throws WrongN otherwise.
ChargeReport pentagon_report(const BlochState& s);

struct CliqueCharge {
  std::size_t clique = 0;  ///< position in the canonical clique list
  double charge = 0.0;
  double margin = 0.0;  ///< 1 - charge
};

struct ComplementarityAudit {
  std::vector<CliqueCharge> entries;
  std::vector<std::size_t> violations;  ///< cliques with charge > 1 + tolerance
  double max_charge = 0.0;
};

ComplementarityAudit complementarity_audit(const BlochState& s, const std::vector<ComplementaritySet>& cliques,
                                           double tolerance = tol::kPurity);
ComplementarityAudit complementarity_audit(const BlochState& s, double tolerance = tol::kPurity);

/// Bell pair on qubits A, B (r_11 = r_22 = 1, r_33 = -1) times a random
/// pure qubit C.
struct MonogamyReport {
  BlochState state;
  BlochState c_state;  ///< reduced single-qubit Bloch vector of C
  struct Cross {
    QuestionIndex question;
    double r;          ///< raw Bloch component
    double connected;  ///< r_q - r_{q_AB} r_{q_C}; what C shares with A or B
  };
  /// Every q with a non-zero C site and a non-zero A or B site.
  std::vector<Cross> cross_correlations;
  double max_cross_abs = 0.0;       ///< max |connected|
  double max_one_party_abs = 0.0;   ///< max |r| where exactly one of A, B is asked
  std::array<double, 3> ab_correlations{};  ///< r_110, r_220, r_330
  double c_charge = 0.0;  ///< r_001^2 + r_002^2 + r_003^2
  double c_aligned = 0.0;  ///< |r . n_C| along C's own Bloch direction
};

MonogamyReport monogamy_demo(std::uint64_t seed);

}  // namespace qrecon

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
#include <string>
#include <vector>

#include "qrecon/question.hpp"

namespace qrecon {

/// 1 iff p == q.
constexpr bool eval_xnor(bool p, bool q) { return p == q; }

/// Truth values for the six individual two-qubit questions Q_1..Q_3 ("10",
/// "20", "30") and Q'_1..Q'_3 ("01", "02", "03").
struct TruthAssignment {
  std::array<bool, 3> first{};
  std::array<bool, 3> second{};

  /// Value of any two-qubit question; correlations are Q_ij = Q_i <-> Q'_j.
  bool value(const QuestionIndex& q) const;
  /// Assignment number k in [0, 64): bit 5-i is Q_i, bit 2-j is Q'_j.
  static TruthAssignment from_bits(unsigned k);
};

/// Asserts c = a <-> b (Even) or c = not(a <-> b) (Odd).
struct ParityConstraint {
  QuestionIndex a;
  QuestionIndex b;
  QuestionIndex c;
  CorrelationParity parity;
};

struct IdentityRow {
  std::array<bool, 4> values{};  ///< Q_1, Q'_1, Q_2, Q'_2
  bool lhs = false;
  bool rhs = false;
  bool holds() const { return lhs == rhs; }
};

struct IdentityCheck {
  std::vector<IdentityRow> rows;
  bool all_hold() const;
};

/// (Q1<->Q'1)<->(Q2<->Q'2) == (Q1<->Q'2)<->(Q2<->Q'1) over all 16 assignments.
IdentityCheck classical_identity_check();

/**
 * Number of the 64 assignments to the individual questions that satisfy
 * every constraint. Throws MalformedConstraint for constraints that are not
 * two-qubit compatible triangles.
 */
int hidden_variable_search(const std::vector<ParityConstraint>& constraints);

/// Parity of every compatible triangle among the 15 two-qubit questions,
/// each listed once with a < b < c in linear order.
std::vector<ParityConstraint> correlation_table();

/// The same triangles with every parity forced to Even.
std::vector<ParityConstraint> all_even(std::vector<ParityConstraint> table);

/// Triangle edges coloured red (odd) / green (even).
std::string correlation_table_dot(const std::vector<ParityConstraint>& table);

}  // namespace qrecon

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

#include "qrecon/logic.hpp"

#include <algorithm>
#include <sstream>

namespace qrecon {

bool TruthAssignment::value(const QuestionIndex& q) const {
  if (q.n() != 2) throw Error(ErrorCode::MalformedConstraint, "question " + q.str() + " is not a two-qubit question");
  const int i = q[0], j = q[1];
  if (j == 0) return first[static_cast<std::size_t>(i - 1)];
  if (i == 0) return second[static_cast<std::size_t>(j - 1)];
  return eval_xnor(first[static_cast<std::size_t>(i - 1)], second[static_cast<std::size_t>(j - 1)]);
}

TruthAssignment TruthAssignment::from_bits(unsigned k) {
  TruthAssignment t;
  for (std::size_t i = 0; i < 3; ++i) {
    t.first[i] = (k >> (5 - i)) & 1u;
    t.second[i] = (k >> (2 - i)) & 1u;
  }
  return t;
}

bool IdentityCheck::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.holds(); });
}

IdentityCheck classical_identity_check() {
  IdentityCheck check;
  for (unsigned k = 0; k < 16; ++k) {
    IdentityRow row;
    for (std::size_t b = 0; b < 4; ++b) row.values[b] = (k >> (3 - b)) & 1u;
    const bool q1 = row.values[0], p1 = row.values[1], q2 = row.values[2], p2 = row.values[3];
    row.lhs = eval_xnor(eval_xnor(q1, p1), eval_xnor(q2, p2));
    row.rhs = eval_xnor(eval_xnor(q1, p2), eval_xnor(q2, p1));
    check.rows.push_back(row);
  }
  return check;
}

int hidden_variable_search(const std::vector<ParityConstraint>& constraints) {
  for (const auto& c : constraints) {
    if (c.a.n() != 2 || c.b.n() != 2 || c.c.n() != 2)
      throw Error(ErrorCode::MalformedConstraint, "constraint on non two-qubit questions");
    if (c.a == c.b || !is_compatible(c.a, c.b) || xnor_compose(c.a, c.b).index != c.c)
      throw Error(ErrorCode::MalformedConstraint,
                  "(" + c.a.str() + ", " + c.b.str() + ", " + c.c.str() + ") is not a compatible triangle");
  }
  int satisfying = 0;
  for (unsigned k = 0; k < 64; ++k) {
    const auto t = TruthAssignment::from_bits(k);
    const bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const ParityConstraint& c) {
      const bool x = eval_xnor(t.value(c.a), t.value(c.b));
      return t.value(c.c) == (c.parity == CorrelationParity::Even ? x : !x);
    });
    satisfying += ok ? 1 : 0;
  }
  return satisfying;
}

std::vector<ParityConstraint> correlation_table() {
  const auto questions = all_questions(2);
  std::vector<ParityConstraint> table;
  for (std::size_t i = 0; i < questions.size(); ++i)
    for (std::size_t j = i + 1; j < questions.size(); ++j) {
      if (!is_compatible(questions[i], questions[j])) continue;
      const auto composed = xnor_compose(questions[i], questions[j]);
      if (composed.index < questions[j]) continue;  // triangle already listed
      table.push_back({questions[i], questions[j], composed.index, composed.parity});
    }
  return table;
}

std::vector<ParityConstraint> all_even(std::vector<ParityConstraint> table) {
  for (auto& c : table) c.parity = CorrelationParity::Even;
  return table;
}

std::string correlation_table_dot(const std::vector<ParityConstraint>& table) {
  std::ostringstream out;
  out << "graph correlations {\n";
  for (const auto& q : all_questions(2)) out << "  \"" << q.str() << "\";\n";
  for (const auto& t : table) {
    const char* colour = t.parity == CorrelationParity::Odd ? "red" : "green";
    const std::array<std::pair<const QuestionIndex*, const QuestionIndex*>, 3> edges{
        {{&t.a, &t.b}, {&t.b, &t.c}, {&t.a, &t.c}}};
    for (auto [u, v] : edges)
      out << "  \"" << u->str() << "\" -- \"" << v->str() << "\" [color=" << colour << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qrecon

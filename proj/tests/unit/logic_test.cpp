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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "qrecon/logic.hpp"

namespace {

using namespace qrecon;

QuestionIndex Q(const char* digits) { return QuestionIndex::parse(digits); }

// Independent count: six individual truth values, correlations derived as
// XNOR of the two sites.
int count_assignments(const std::vector<ParityConstraint>& constraints) {
  int count = 0;
  for (int first = 0; first < 8; ++first)
    for (int second = 0; second < 8; ++second) {
      auto value = [&](const QuestionIndex& q) {
        const bool a = q[0] ? (first >> (q[0] - 1) & 1) : false;
        const bool b = q[1] ? (second >> (q[1] - 1) & 1) : false;
        if (q[1] == 0) return a;
        if (q[0] == 0) return b;
        return a == b;
      };
      bool ok = true;
      for (const auto& c : constraints) {
        const bool same = value(c.a) == value(c.b);
        ok = ok && (value(c.c) == (c.parity == CorrelationParity::Even ? same : !same));
      }
      count += ok ? 1 : 0;
    }
  return count;
}

const ParityConstraint& find_triangle(const std::vector<ParityConstraint>& table, const char* a, const char* b,
                                      const char* c) {
  std::array<QuestionIndex, 3> want{Q(a), Q(b), Q(c)};
  std::sort(want.begin(), want.end());
  for (const auto& t : table)
    if (t.a == want[0] && t.b == want[1] && t.c == want[2]) return t;
  throw std::runtime_error("triangle not in table");
}

TEST(EvalXnor, TruthTable) {
  EXPECT_TRUE(eval_xnor(true, true));
  EXPECT_FALSE(eval_xnor(false, true));
  EXPECT_FALSE(eval_xnor(true, false));
  EXPECT_TRUE(eval_xnor(false, false));
  static_assert(eval_xnor(true, true) && !eval_xnor(true, false));
}

TEST(ClassicalIdentity, AllSixteenRows) {
  const auto check = classical_identity_check();
  ASSERT_EQ(check.rows.size(), 16u);
  EXPECT_TRUE(check.all_hold());
  for (const auto& row : check.rows) {
    const auto [q1, p1, q2, p2] = row.values;
    EXPECT_EQ(row.lhs, eval_xnor(eval_xnor(q1, p1), eval_xnor(q2, p2)));
    EXPECT_EQ(row.rhs, eval_xnor(eval_xnor(q1, p2), eval_xnor(q2, p1)));
    if (q1 && p1 && q2 && p2) {
      EXPECT_TRUE(row.lhs);
      EXPECT_TRUE(row.rhs);
    }
    if (q1 && !p1 && !q2 && p2) EXPECT_EQ(row.lhs, row.rhs);
  }
}

TEST(CorrelationTable, FifteenTrianglesWithThreeOdd) {
  const auto table = correlation_table();
  ASSERT_EQ(table.size(), 15u);
  int odd = 0;
  for (const auto& t : table) {
    EXPECT_LT(t.a, t.b);
    EXPECT_LT(t.b, t.c);
    EXPECT_TRUE(is_compatible(t.a, t.b) && is_compatible(t.a, t.c) && is_compatible(t.b, t.c));
    EXPECT_EQ(xnor_compose(t.a, t.b).index, t.c);
    odd += t.parity == CorrelationParity::Odd ? 1 : 0;
  }
  EXPECT_EQ(odd, 3);
  EXPECT_EQ(find_triangle(table, "11", "22", "33").parity, CorrelationParity::Odd);
  EXPECT_EQ(find_triangle(table, "12", "21", "33").parity, CorrelationParity::Even);
  EXPECT_EQ(find_triangle(table, "10", "01", "11").parity, CorrelationParity::Even);
}

// Operator oracle: sigma_a sigma_b = +sigma_c for even triangles and
// -sigma_c for odd ones.
TEST(CorrelationTable, ParitiesMatchMatrixProducts) {
  for (const auto& t : correlation_table()) {
    const oracle::CM prod = oracle::pauli(t.a.str()) * oracle::pauli(t.b.str());
    const double sign = t.parity == CorrelationParity::Even ? 1.0 : -1.0;
    EXPECT_LT(oracle::max_abs(prod - sign * oracle::pauli(t.c.str())), 1e-15) << t.a.str() << t.b.str();
  }
}

// Swapping which second-qubit question pairs with which first-qubit question
// flips the parity of the correlation triangle.
TEST(CorrelationTable, SwappedPairingsHaveOppositeParity) {
  int checked = 0;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k)
      for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) {
          if (i == k || j == l) continue;
          const auto straight = xnor_compose(make_index({i, j}, 2), make_index({k, l}, 2));
          const auto crossed = xnor_compose(make_index({i, l}, 2), make_index({k, j}, 2));
          EXPECT_EQ(straight.index, crossed.index);
          EXPECT_NE(straight.parity, crossed.parity);
          ++checked;
        }
  EXPECT_EQ(checked, 36);
}

TEST(HiddenVariables, QuantumTableHasNoAssignment) {
  const auto table = correlation_table();
  EXPECT_EQ(hidden_variable_search(table), 0);
  EXPECT_EQ(count_assignments(table), 0);
  const auto even = all_even(table);
  for (const auto& t : even) EXPECT_EQ(t.parity, CorrelationParity::Even);
  EXPECT_GT(hidden_variable_search(even), 0);
  EXPECT_EQ(hidden_variable_search(even), count_assignments(even));
  EXPECT_EQ(hidden_variable_search({}), 64);
}

TEST(HiddenVariables, AgreesWithIndependentCountOnSubsets) {
  const auto table = correlation_table();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ParityConstraint> subset;
    for (const auto& t : table)
      if (rng() % 3 == 0) subset.push_back(t);
    EXPECT_EQ(hidden_variable_search(subset), count_assignments(subset));
  }
}

TEST(HiddenVariables, RejectsMalformedConstraints) {
  auto code = [](const ParityConstraint& c) {
    try {
      hidden_variable_search({c});
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code({Q("11"), Q("31"), Q("21"), CorrelationParity::Even}), ErrorCode::MalformedConstraint);
  EXPECT_EQ(code({Q("11"), Q("22"), Q("12"), CorrelationParity::Even}), ErrorCode::MalformedConstraint);
  EXPECT_EQ(code({Q("110"), Q("220"), Q("330"), CorrelationParity::Odd}), ErrorCode::MalformedConstraint);
}

TEST(TruthAssignment, FromBits) {
  const auto t = TruthAssignment::from_bits(0b101'011);
  EXPECT_EQ(t.first, (std::array<bool, 3>{true, false, true}));
  EXPECT_EQ(t.second, (std::array<bool, 3>{false, true, true}));
  EXPECT_TRUE(t.value(Q("10")));
  EXPECT_FALSE(t.value(Q("01")));
  EXPECT_FALSE(t.value(Q("11")));
  EXPECT_TRUE(t.value(Q("33")));
}

TEST(CorrelationTable, DotColouring) {
  const std::string dot = correlation_table_dot(correlation_table());
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("red"), std::string::npos);
  EXPECT_NE(dot.find("green"), std::string::npos);
}

}  // namespace

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
#include <set>

#include "json.hpp"
#include "oracle.hpp"
#include "qrecon/graph.hpp"

namespace {

using namespace qrecon;

QuestionIndex Q(const char* digits) { return QuestionIndex::parse(digits); }

std::vector<QuestionIndex> set_of(std::initializer_list<const char*> names) {
  std::vector<QuestionIndex> out;
  for (const char* s : names) out.push_back(Q(s));
  std::sort(out.begin(), out.end());
  return out;
}

// Maximal cliques by exhaustive subset search, with complementarity decided
// by the matrix anticommutator.
std::set<std::vector<std::size_t>> brute_force_maximal_cliques(int n) {
  const auto names = oracle::all_digit_strings(n);
  const std::size_t v = names.size();
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b) {
      const auto pa = oracle::pauli(names[a]), pb = oracle::pauli(names[b]);
      adj[a][b] = a != b && oracle::max_abs(pa * pb + pb * pa) < 1e-12;
    }
  auto is_clique = [&](std::uint32_t mask) {
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !adj[a][b]) return false;
    return true;
  };
  std::set<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << v); ++mask) {
    if (!is_clique(mask)) continue;
    bool maximal = true;
    for (std::size_t x = 0; x < v && maximal; ++x)
      if (!(mask >> x & 1u) && is_clique(mask | (1u << x))) maximal = false;
    if (!maximal) continue;
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < v; ++a)
      if (mask >> a & 1u) members.push_back(a);
    out.insert(members);
  }
  return out;
}

std::string dump_cliques(const std::vector<ComplementaritySet>& cliques) {
  std::string out;
  for (const auto& c : cliques) {
    for (const auto& q : c.members) out += q.str() + ' ';
    out += '\n';
  }
  return out;
}

TEST(BuildGraph, OneQubitIsTriangle) {
  const auto g = build_graph(1);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges().size(), 3u);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(BuildGraph, TwoQubitsDegreeEight) {
  const auto g = build_graph(2);
  EXPECT_EQ(g.size(), 15u);
  for (std::size_t v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), 8u);
  EXPECT_EQ(g.edges().size(), 60u);
  EXPECT_FALSE(g.adjacent(Q("11").position(), Q("22").position()));
  EXPECT_TRUE(g.adjacent(Q("11").position(), Q("31").position()));
}

TEST(BuildGraph, RejectsQubitCountsOutsideCap) {
  EXPECT_THROW(build_graph(0), Error);
  EXPECT_THROW(build_graph(kMaxQubits + 1), Error);
}

TEST(MaximalCliques, Census) {
  const auto two = maximal_cliques(build_graph(2));
  EXPECT_EQ(two.size(), 26u);
  EXPECT_EQ(clique_counts(two), (std::map<std::size_t, std::size_t>{{3, 20}, {5, 6}}));
  const auto one = maximal_cliques(build_graph(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].members, set_of({"1", "2", "3"}));
}

TEST(MaximalCliques, AgreeWithExhaustiveSearch) {
  for (int n = 1; n <= 2; ++n) {
    std::set<std::vector<std::size_t>> found;
    for (const auto& c : maximal_cliques(build_graph(n))) {
      std::vector<std::size_t> positions;
      for (const auto& q : c.members) positions.push_back(q.position());
      found.insert(positions);
    }
    EXPECT_EQ(found, brute_force_maximal_cliques(n)) << "n=" << n;
  }
}

TEST(MaximalCliques, NamedSetsAreMaximal) {
  const auto cliques = maximal_cliques(build_graph(2));
  auto listed = [&](const std::vector<QuestionIndex>& members) {
    return std::any_of(cliques.begin(), cliques.end(), [&](const auto& c) { return c.members == members; });
  };
  const auto pent1 = set_of({"11", "12", "13", "20", "30"});
  const auto tri1 = set_of({"11", "12", "03"});
  EXPECT_TRUE(listed(pent1));
  EXPECT_TRUE(listed(tri1));
  EXPECT_TRUE(is_maximal_complementary_set(pent1));
  EXPECT_TRUE(is_maximal_complementary_set(tri1));
  EXPECT_TRUE(is_complementary_set(set_of({"11", "12"})));
  EXPECT_FALSE(is_maximal_complementary_set(set_of({"11", "12"})));
  EXPECT_FALSE(is_complementary_set(set_of({"11", "22"})));
}

TEST(MaximalCliques, VerifiedAndBounded) {
  for (int n = 1; n <= 3; ++n) {
    const auto cliques = maximal_cliques(build_graph(n));
    std::size_t largest = 0;
    for (const auto& c : cliques) {
      EXPECT_TRUE(c.maximal);
      EXPECT_TRUE(is_complementary_set(c.members));
      EXPECT_TRUE(is_maximal_complementary_set(c.members));
      largest = std::max(largest, c.size());
    }
    if (n == 1) EXPECT_EQ(largest, 3u);
    if (n == 2) EXPECT_EQ(largest, 5u);
    // Pairwise anticommuting Paulis on 2^n dimensions number at most 2n + 1.
    EXPECT_LE(largest, static_cast<std::size_t>(2 * n + 1));
  }
}

TEST(MaximalCliques, Deterministic) {
  const auto g = build_graph(2);
  EXPECT_EQ(dump_cliques(maximal_cliques(g)), dump_cliques(maximal_cliques(g)));
}

TEST(PentagonLattice, Incidence) {
  const auto& lattice = pentagon_lattice();
  EXPECT_EQ(lattice.pentagons().size(), 6u);
  for (const auto& q : all_questions(2)) {
    int containing = 0;
    for (const auto& p : lattice.pentagons()) containing += p.contains(q) ? 1 : 0;
    EXPECT_EQ(containing, 2) << q.str();
    const auto labels = lattice.incidence(q);
    EXPECT_TRUE(lattice.pentagon(labels[0]).contains(q));
    EXPECT_TRUE(lattice.pentagon(labels[1]).contains(q));
    EXPECT_NE(labels[0], labels[1]);
  }
}

// Fifteen pentagon pairs, fifteen questions, each question in exactly two
// pentagons: every pair meets in exactly one question and the map from pairs
// to shared questions is a bijection.
TEST(PentagonLattice, EveryPairSharesOneQuestion) {
  const auto& lattice = pentagon_lattice();
  std::set<QuestionIndex> shared;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      std::vector<QuestionIndex> common;
      const auto& pa = lattice.pentagon(a).members;
      const auto& pb = lattice.pentagon(b).members;
      std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
      ASSERT_EQ(common.size(), 1u);
      EXPECT_EQ(lattice.shared(a, b), common[0]);
      EXPECT_EQ(lattice.shared(b, a), common[0]);
      shared.insert(common[0]);
    }
  EXPECT_EQ(shared.size(), 15u);
}

TEST(PentagonLattice, LabelsAndErrors) {
  const auto& lattice = pentagon_lattice();
  const int pent1 = lattice.label_of(set_of({"11", "12", "13", "20", "30"}));
  const int pent2 = lattice.label_of(set_of({"11", "21", "31", "02", "03"}));
  EXPECT_GE(pent1, 1);
  EXPECT_GE(pent2, 1);
  EXPECT_EQ(lattice.shared(pent1, pent2).str(), "11");
  EXPECT_EQ(lattice.label_of(set_of({"11", "12", "03"})), 0);
  for (int a = 1; a <= 6; ++a) EXPECT_EQ(lattice.label_of(lattice.pentagon(a).members), a);
  EXPECT_THROW(lattice.pentagon(0), Error);
  EXPECT_THROW(lattice.pentagon(7), Error);
  EXPECT_THROW(lattice.shared(2, 2), Error);
}

TEST(ExportGraph, DotAndJson) {
  const std::string dot = export_graph(build_graph(1), "dot");
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++edges;
  EXPECT_EQ(edges, 3u);
  EXPECT_NE(dot.find("graph"), std::string::npos);

  const auto doc = nlohmann::json::parse(export_graph(build_graph(2), "json"));
  EXPECT_EQ(doc.at("nodes").size(), 15u);
  EXPECT_EQ(doc.at("edges").size(), 60u);

  try {
    export_graph(build_graph(1), "xml");
    FAIL() << "expected UnknownFormat";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFormat);
  }
}

}  // namespace

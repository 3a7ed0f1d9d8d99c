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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrecon/question.hpp"

namespace qrecon {

/// Vertices are all 4^N - 1 questions in linear order; an edge joins every
/// complementary pair.
class ComplementarityGraph {
 public:
  int n() const { return n_; }
  const std::vector<QuestionIndex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * vertices_.size() + v]; }
  std::size_t degree(std::size_t v) const;
  /// Unordered edges (u < v) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  friend ComplementarityGraph build_graph(int n);
  int n_ = 0;
  std::vector<QuestionIndex> vertices_;
  std::vector<bool> adjacency_;
};

ComplementarityGraph build_graph(int n);

/// Pairwise-complementary questions, members sorted in linear order.
struct ComplementaritySet {
  std::vector<QuestionIndex> members;
  bool maximal = false;

  std::size_t size() const { return members.size(); }
  bool contains(const QuestionIndex& q) const;
};

/**
 * All maximal cliques of the complementarity graph, via Bron-Kerbosch with
 * pivoting (pivot = lowest vertex in P u X). Sorted by size descending, then
 * by lexicographic member order. Every result is re-checked for maximality.
 */
std::vector<ComplementaritySet> maximal_cliques(const ComplementarityGraph& g);

/// True if every member pair is complementary.
bool is_complementary_set(const std::vector<QuestionIndex>& members);

/// True if no outside question is complementary to all members.
bool is_maximal_complementary_set(const std::vector<QuestionIndex>& members);

/// The six five-element maximal sets at N = 2, labelled 1..6 in canonical
/// clique order.
class PentagonLattice;
namespace detail {
PentagonLattice build_pentagon_lattice();
}

class PentagonLattice {
 public:
  /// label in 1..6
  const ComplementaritySet& pentagon(int label) const;
  const std::array<ComplementaritySet, 6>& pentagons() const { return pentagons_; }
  /// Labels of the two pentagons containing q.
  std::array<int, 2> incidence(const QuestionIndex& q) const;
  /// The unique question shared by two distinct pentagons.
  QuestionIndex shared(int a, int b) const;
  /// Label of the pentagon with exactly these members, or 0.
  int label_of(const std::vector<QuestionIndex>& members) const;

 private:
  friend PentagonLattice detail::build_pentagon_lattice();
  std::array<ComplementaritySet, 6> pentagons_;
  std::map<QuestionIndex, std::array<int, 2>> incidence_;
};

const PentagonLattice& pentagon_lattice();

/// Maximal-clique census: size -> count.
std::map<std::size_t, std::size_t> clique_counts(const std::vector<ComplementaritySet>& cliques);

/// "dot" or "json"; anything else throws UnknownFormat.
std::string export_graph(const ComplementarityGraph& g, std::string_view format);

}  // namespace qrecon

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

#include "qrecon/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace qrecon {

ComplementarityGraph build_graph(int n) {
  check_qubit_count(n);
  ComplementarityGraph g;
  g.n_ = n;
  g.vertices_ = all_questions(n);
  const std::size_t size = g.vertices_.size();
  g.adjacency_.assign(size * size, false);
  for (std::size_t u = 0; u < size; ++u)
    for (std::size_t v = u + 1; v < size; ++v)
      if (!is_compatible(g.vertices_[u], g.vertices_[v])) {
        g.adjacency_[u * size + v] = true;
        g.adjacency_[v * size + u] = true;
      }
  return g;
}

std::size_t ComplementarityGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t u = 0; u < size(); ++u) d += adjacent(u, v) ? 1 : 0;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> ComplementarityGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool ComplementaritySet::contains(const QuestionIndex& q) const {
  return std::binary_search(members.begin(), members.end(), q);
}

namespace {

// Fixed-width vertex set; at most 4^kMaxQubits - 1 vertices.
class VertexSet {
 public:
  explicit VertexSet(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool test(std::size_t v) const { return (words_[v / 64] >> (v % 64)) & 1u; }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  /// Lowest member, or npos when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return npos;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

struct BronKerbosch {
  const ComplementarityGraph& g;
  std::vector<VertexSet> neighbours;
  std::vector<std::vector<std::size_t>> found;

  explicit BronKerbosch(const ComplementarityGraph& graph) : g(graph) {
    neighbours.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      VertexSet nb(g.size());
      for (std::size_t u = 0; u < g.size(); ++u)
        if (g.adjacent(u, v)) nb.set(u);
      neighbours.push_back(std::move(nb));
    }
  }

  void expand(std::vector<std::size_t>& clique, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty() && excluded.empty()) {
      found.push_back(clique);
      return;
    }
    const std::size_t pivot = (candidates | excluded).first();
    candidates.minus(neighbours[pivot]).for_each([&](std::size_t v) {
      clique.push_back(v);
      expand(clique, candidates & neighbours[v], excluded & neighbours[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }
};

}  // namespace

bool is_complementary_set(const std::vector<QuestionIndex>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j] || is_compatible(members[i], members[j])) return false;
  return true;
}

bool is_maximal_complementary_set(const std::vector<QuestionIndex>& members) {
  if (members.empty() || !is_complementary_set(members)) return false;
  for (const auto& q : all_questions(members.front().n())) {
    if (std::find(members.begin(), members.end(), q) != members.end()) continue;
    if (std::all_of(members.begin(), members.end(), [&](const QuestionIndex& m) { return !is_compatible(m, q); }))
      return false;
  }
  return true;
}

std::vector<ComplementaritySet> maximal_cliques(const ComplementarityGraph& g) {
  BronKerbosch bk(g);
  VertexSet all(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) all.set(v);
  std::vector<std::size_t> clique;
  bk.expand(clique, all, VertexSet(g.size()));

  std::vector<ComplementaritySet> out;
  out.reserve(bk.found.size());
  for (auto& members : bk.found) {
    std::sort(members.begin(), members.end());
    ComplementaritySet set;
    for (auto v : members) set.members.push_back(g.vertices()[v]);
    // Direct check against every outside vertex.
    std::size_t outside_hits = 0;
    for (std::size_t u = 0; u < g.size() && outside_hits == 0; ++u) {
      if (std::binary_search(members.begin(), members.end(), u)) continue;
      if (std::all_of(members.begin(), members.end(), [&](std::size_t m) { return g.adjacent(u, m); }))
        ++outside_hits;
    }
    set.maximal = outside_hits == 0;
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const ComplementaritySet& a, const ComplementaritySet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members < b.members;
  });
  return out;
}

std::map<std::size_t, std::size_t> clique_counts(const std::vector<ComplementaritySet>& cliques) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : cliques) ++counts[c.size()];
  return counts;
}

namespace detail {

PentagonLattice build_pentagon_lattice() {
  PentagonLattice lattice;
  const auto cliques = maximal_cliques(build_graph(2));
  std::size_t label = 0;
  for (const auto& c : cliques) {
    if (c.size() != 5) continue;
    lattice.pentagons_.at(label) = c;
    ++label;
  }
  if (label != 6) throw Error(ErrorCode::InvalidState, "expected 6 pentagons, found " + std::to_string(label));
  for (int a = 1; a <= 6; ++a) {
    for (const auto& q : lattice.pentagons_[static_cast<std::size_t>(a - 1)].members) {
      auto [it, inserted] = lattice.incidence_.try_emplace(q, std::array<int, 2>{a, 0});
      if (!inserted) it->second[1] = a;
    }
  }
  return lattice;
}

}  // namespace detail

const PentagonLattice& pentagon_lattice() {
  static const PentagonLattice lattice = detail::build_pentagon_lattice();
  return lattice;
}

const ComplementaritySet& PentagonLattice::pentagon(int label) const {
  if (label < 1 || label > 6) throw Error(ErrorCode::BadLabel, "pentagon label " + std::to_string(label));
  return pentagons_[static_cast<std::size_t>(label - 1)];
}

std::array<int, 2> PentagonLattice::incidence(const QuestionIndex& q) const {
  auto it = incidence_.find(q);
  if (it == incidence_.end()) throw Error(ErrorCode::WrongN, "question " + q.str() + " is not a two-qubit question");
  return it->second;
}

QuestionIndex PentagonLattice::shared(int a, int b) const {
  const auto& pa = pentagon(a);
  const auto& pb = pentagon(b);
  if (a == b) throw Error(ErrorCode::EqualPentagons, "pentagon " + std::to_string(a) + " paired with itself");
  for (const auto& q : pa.members)
    if (pb.contains(q)) return q;
  throw Error(ErrorCode::InvalidState, "pentagons share no question");
}

int PentagonLattice::label_of(const std::vector<QuestionIndex>& members) const {
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  for (int a = 1; a <= 6; ++a)
    if (pentagons_[static_cast<std::size_t>(a - 1)].members == sorted) return a;
  return 0;
}

std::string export_graph(const ComplementarityGraph& g, std::string_view format) {
  if (format == "dot") {
    std::ostringstream out;
    out << "graph complementarity_n" << g.n() << " {\n";
    for (const auto& v : g.vertices()) out << "  \"" << v.str() << "\";\n";
    for (auto [u, v] : g.edges())
      out << "  \"" << g.vertices()[u].str() << "\" -- \"" << g.vertices()[v].str() << "\";\n";
    out << "}\n";
    return out.str();
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) nodes.push_back(v.str());
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.vertices()[u].str(), g.vertices()[v].str()});
    return doc.dump(2) + "\n";
  }
  throw Error(ErrorCode::UnknownFormat, "graph format '" + std::string(format) + "'");
}

}  // namespace qrecon

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

#include "qrecon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

namespace qrecon::verify {

namespace {

using Json = io::Json;

std::uint64_t seed_for(std::uint64_t seed, int criterion, std::uint64_t k) {
  return stream_seed(stream_seed(seed, static_cast<std::uint64_t>(criterion)), k);
}

CriterionResult timed(int id, std::string name, const std::function<bool(Json&)>& body) {
  CriterionResult result;
  result.id = id;
  result.name = std::move(name);
  result.metrics = Json::object();
  const auto start = std::chrono::steady_clock::now();
  result.passed = body(result.metrics);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

CriterionResult clique_census() {
  auto result = timed(1, "clique census", [](Json& m) {
    const auto two = maximal_cliques(build_graph(2));
    const auto one = maximal_cliques(build_graph(1));
    const auto counts2 = clique_counts(two);
    const auto counts1 = clique_counts(one);
    const bool all_maximal = std::all_of(two.begin(), two.end(), [](const auto& c) { return c.maximal; }) &&
                             std::all_of(one.begin(), one.end(), [](const auto& c) { return c.maximal; });
    m["n2_counts"] = io::clique_census(2, two)["counts_by_size"];
    m["n1_counts"] = io::clique_census(1, one)["counts_by_size"];
    m["all_maximal"] = all_maximal;
    const std::map<std::size_t, std::size_t> want2{{3, 20}, {5, 6}};
    const std::map<std::size_t, std::size_t> want1{{3, 1}};
    return all_maximal && counts2 == want2 && counts1 == want1;
  });
  result.passed = result.passed && result.seconds < 1.0;
  return result;
}

CriterionResult pentagon_equalities(std::uint64_t seed) {
  auto result = timed(2, "pentagon equalities on pure states", [seed](Json& m) {
    double worst = 0.0;
    int failures = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
      const auto report = pentagon_report(random_pure(2, seed_for(seed, 2, k)));
      for (double c : report.charges) {
        const double dev = std::abs(c - 1.0);
        worst = std::max(worst, dev);
        failures += dev > 1e-9 ? 1 : 0;
      }
    }
    m["states"] = 1000;
    m["max_abs_deviation"] = worst;
    m["failures"] = failures;
    return failures == 0;
  });
  result.passed = result.passed && result.seconds < 5.0;
  return result;
}

CriterionResult pure_state_norm(std::uint64_t seed) {
  return timed(3, "pure-state norm 2^N - 1", [seed](Json& m) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      const double expected = static_cast<double>(hilbert_dim(n) - 1);
      double worst = 0.0;
      for (std::uint64_t k = 0; k < 100; ++k) {
        const auto s = random_pure(n, seed_for(seed, 3, static_cast<std::uint64_t>(n) * 1000 + k));
        worst = std::max(worst, std::abs(info_measure(s).bits - expected));
      }
      m["n" + std::to_string(n) + "_max_abs_deviation"] = worst;
      ok = ok && worst < 1e-9;
    }
    return ok;
  });
}

CriterionResult pentagon_sum_identity(std::uint64_t seed) {
  return timed(4, "pentagon-sum identity", [seed](Json& m) {
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
      const auto s = k % 2 == 0 ? random_pure(2, seed_for(seed, 4, k)) : random_mixed(2, seed_for(seed, 4, k));
      worst = std::max(worst, std::abs(pentagon_report(s).sum_identity_residual));
    }
    m["states"] = 1000;
    m["max_abs_residual"] = worst;
    return worst < 1e-12;
  });
}

CriterionResult generators() {
  auto result = timed(5, "pentagon-swap generators and Lie closure", [](Json& m) {
    const auto& lattice = pentagon_lattice();
    bool ok = true;
    double worst_check = 0.0;
    double worst_scale = 0.0;
    std::vector<EvolutionGenerator> swaps;
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b) {
        auto g = pentagon_swap_generator(a, b);
        const auto report = check_generator(g, static_cast<std::uint64_t>(a * 10 + b));
        worst_check = std::max({worst_check, report.antisymmetry_residual, report.pattern_residual,
                                report.pentagon_residual.value_or(0.0)});
        ok = ok && report.passed(1e-12);
        const auto adjoint = generator_from_hamiltonian(Hamiltonian::pauli(lattice.shared(a, b)));
        const auto match = match_up_to_scale(adjoint, g);
        worst_scale = std::max(worst_scale, match.residual);
        ok = ok && match.residual < 1e-10 && match.scale != 0.0;
        swaps.push_back(std::move(g));
      }
    const int swap_dim = lie_closure(swaps).dimension;
    const int n3_dim = lie_closure(local_generators(3)).dimension;
    m["max_check_residual"] = worst_check;
    m["max_scale_residual"] = worst_scale;
    m["swap_closure_dimension"] = swap_dim;
    m["n3_closure_dimension"] = n3_dim;
    return ok && swap_dim == 15 && n3_dim == 63;
  });
  result.passed = result.passed && result.seconds < 60.0;
  return result;
}

CriterionResult evolution_equivalence(std::uint64_t seed) {
  return timed(6, "Bloch / density evolution equivalence", [seed](Json& m) {
    double worst_equiv = 0.0, worst_fd = 0.0, worst_norm = 0.0;
    for (int n = 1; n <= 2; ++n)
      for (std::uint64_t k = 0; k < 20; ++k) {
        const std::uint64_t base = static_cast<std::uint64_t>(n) * 100 + k;
        const auto h = random_hamiltonian(n, seed_for(seed, 6, 3 * base));
        const auto s = random_mixed(n, seed_for(seed, 6, 3 * base + 1));
        std::mt19937_64 rng(seed_for(seed, 6, 3 * base + 2));
        const double t = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
        worst_equiv = std::max(worst_equiv, adjoint_equivalence_check(h, s, t));
        worst_fd = std::max(worst_fd, von_neumann_residual(h, bloch_to_density(s), t, 1e-4));
        const auto g = generator_from_hamiltonian(h);
        const double initial = info_measure(s).bits;
        for (int step = 1; step <= 20; ++step) {
          const double ti = t * step / 20.0;
          worst_norm = std::max(worst_norm, std::abs(info_measure(evolve_bloch(g, s, ti)).bits - initial));
        }
      }
    m["max_path_deviation"] = worst_equiv;
    m["max_von_neumann_residual"] = worst_fd;
    m["max_information_drift"] = worst_norm;
    return worst_equiv < 1e-8 && worst_fd < 1e-6 && worst_norm < 1e-10;
  });
}

CriterionResult born_rule(std::uint64_t seed) {
  return timed(7, "Born rule consistency", [seed](Json& m) {
    double worst = 0.0;
    std::mt19937_64 rng(seed_for(seed, 7, 0));
    for (std::uint64_t k = 0; k < 100; ++k) {
      const int n = 1 + static_cast<int>(k % 3);
      const auto s = k % 2 == 0 ? random_mixed(n, seed_for(seed, 7, k + 1)) : random_pure(n, seed_for(seed, 7, k + 1));
      std::uniform_int_distribution<std::size_t> pick(0, question_count(n) - 1);
      const auto q = QuestionIndex::from_position(n, pick(rng));
      const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
      const Eigen::MatrixXcd projector = 0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + pauli_matrix(q));
      const double via_trace = (bloch_to_density(s).rho * projector).trace().real();
      worst = std::max(worst, std::abs(born_probability(QuestionVector::basis(q), s) - via_trace));
    }
    m["pairs"] = 100;
    m["max_abs_deviation"] = worst;
    return worst < 1e-12;
  });
}

CriterionResult logic() {
  return timed(8, "logic and hidden variables", [](Json& m) {
    const bool identity = classical_identity_check().all_hold();
    const auto table = correlation_table();
    const int quantum = hidden_variable_search(table);
    const int classical = hidden_variable_search(all_even(table));
    auto parity_of = [&](const char* a, const char* b) {
      const auto c = xnor_compose(QuestionIndex::parse(a), QuestionIndex::parse(b));
      for (const auto& t : table) {
        const std::array<QuestionIndex, 3> tri{t.a, t.b, t.c};
        auto has = [&](const QuestionIndex& q) { return std::find(tri.begin(), tri.end(), q) != tri.end(); };
        if (has(QuestionIndex::parse(a)) && has(QuestionIndex::parse(b)) && has(c.index)) return t.parity;
      }
      throw Error(ErrorCode::InvalidState, "triangle missing from table");
    };
    const bool caption = parity_of("11", "22") == CorrelationParity::Odd &&
                         parity_of("12", "21") == CorrelationParity::Even;
    m["identity_holds"] = identity;
    m["quantum_assignments"] = quantum;
    m["all_even_assignments"] = classical;
    m["triangles"] = table.size();
    m["caption_parities"] = caption;
    return identity && quantum == 0 && classical > 0 && caption;
  });
}

CriterionResult complementarity_inequalities(std::uint64_t seed) {
  return timed(9, "complementarity inequalities", [seed](Json& m) {
    const auto cliques = maximal_cliques(build_graph(2));
    double worst = 0.0;
    std::size_t violations = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
      const auto s = k % 2 == 0 ? random_mixed(2, seed_for(seed, 9, k)) : random_pure(2, seed_for(seed, 9, k));
      const auto audit = complementarity_audit(s, cliques, 1e-9);
      worst = std::max(worst, audit.max_charge);
      violations += audit.violations.size();
    }
    m["states"] = 1000;
    m["max_clique_charge"] = worst;
    m["violations"] = violations;
    return violations == 0;
  });
}

CriterionResult monogamy(std::uint64_t seed) {
  return timed(10, "extremal monogamy", [seed](Json& m) {
    const auto report = monogamy_demo(seed_for(seed, 10, 0));
    double ab = 0.0;
    for (double r : report.ab_correlations) ab = std::max(ab, std::abs(std::abs(r) - 1.0));
    m["max_connected_cross_correlation"] = report.max_cross_abs;
    m["max_one_party_cross_correlation"] = report.max_one_party_abs;
    m["max_ab_deviation_from_unit"] = ab;
    m["c_charge"] = report.c_charge;
    return report.max_cross_abs < 1e-12 && report.max_one_party_abs < 1e-12 && ab < 1e-12;
  });
}

CriterionResult interrogation(std::uint64_t seed) {
  return timed(11, "interrogation and tomography", [seed](Json& m) {
    std::size_t repeat_failures = 0;
    for (std::uint64_t k = 0; k < 10000; ++k) {
      const int n = 1 + static_cast<int>(k % 2);
      const auto prior = random_mixed(n, seed_for(seed, 11, 2 * k));
      std::mt19937_64 rng(seed_for(seed, 11, 2 * k + 1));
      std::uniform_int_distribution<std::size_t> pick(0, question_count(n) - 1);
      std::vector<QuestionIndex> questions;
      for (int i = 0; i < 3; ++i) {
        const auto q = QuestionIndex::from_position(n, pick(rng));
        questions.push_back(q);
        questions.push_back(q);
      }
      const auto record = single_shot(prior, questions, rng());
      for (std::size_t i = 0; i + 1 < record.steps.size(); i += 2)
        repeat_failures += record.steps[i].answer != record.steps[i + 1].answer ? 1 : 0;
    }
    const auto truth = random_pure(1, seed_for(seed, 11, 1u << 30));
    const double tomo_error = multi_shot_tomography(truth, 100000, seed_for(seed, 11, (1u << 30) + 1)).max_abs_error;
    const auto convergence = convergence_report(truth, {100, 1000, 10000, 100000}, seed_for(seed, 11, (1u << 30) + 2));
    m["records"] = 10000;
    m["repeat_failures"] = repeat_failures;
    m["tomography_max_abs_error"] = tomo_error;
    m["convergence_slope"] = convergence.slope;
    return repeat_failures == 0 && tomo_error < 0.02 && convergence.slope >= -0.65 && convergence.slope <= -0.35;
  });
}

std::vector<CriterionResult> run_checks(std::uint64_t seed) {
  return {clique_census(),
          pentagon_equalities(seed),
          pure_state_norm(seed),
          pentagon_sum_identity(seed),
          generators(),
          evolution_equivalence(seed),
          born_rule(seed),
          logic(),
          complementarity_inequalities(seed),
          monogamy(seed),
          interrogation(seed)};
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  auto results = run_checks(seed);
  results.push_back(timed(12, "determinism", [&](Json& m) {
    const auto first = to_json(results).dump();
    const auto second = to_json(run_checks(seed)).dump();
    m["report_bytes"] = first.size();
    m["identical"] = first == second;
    return first == second;
  }));
  return results;
}

io::Json to_json(const std::vector<CriterionResult>& results) {
  Json doc = Json::array();
  for (const auto& r : results)
    doc.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.passed}, {"metrics", r.metrics}});
  return doc;
}

std::string summary_line(const CriterionResult& result) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%s] %2d %s (%.3f s)", result.passed ? "PASS" : "FAIL", result.id,
                result.name.c_str(), result.seconds);
  return buf;
}

}  // namespace qrecon::verify

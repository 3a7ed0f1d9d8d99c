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

#include "qrecon/interrogation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace qrecon {

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

InterrogationRecord single_shot(const BlochState& prior, const std::vector<QuestionIndex>& questions,
                                std::uint64_t seed) {
  if (questions.empty()) throw Error(ErrorCode::DimensionMismatch, "no questions to ask");
  InterrogationRecord record{prior, {}, seed};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  BlochState current = prior;
  for (const auto& q : questions) {
    const double p_yes = born_probability(q, current, Answer::Yes);
    const Answer answer = uniform(rng) < p_yes ? Answer::Yes : Answer::No;
    const double p = answer == Answer::Yes ? p_yes : 1.0 - p_yes;
    current = posterior_update(current, q, answer);
    record.steps.push_back({q, answer, p, current});
  }
  return record;
}

namespace {

TomographyEstimate finish(TomographyEstimate est) {
  est.reconstructed_r.resize(static_cast<Eigen::Index>(est.entries.size()));
  est.max_abs_error = 0.0;
  for (std::size_t k = 0; k < est.entries.size(); ++k) {
    const auto& e = est.entries[k];
    est.reconstructed_r(static_cast<Eigen::Index>(k)) = 2.0 * e.estimate - 1.0;
    est.max_abs_error = std::max(est.max_abs_error, std::abs(e.estimate - e.truth));
  }
  return est;
}

}  // namespace

TomographyEstimate multi_shot_tomography(const BlochState& true_state, std::uint64_t samples_per_question,
                                         std::uint64_t seed) {
  if (samples_per_question == 0) throw Error(ErrorCode::DimensionMismatch, "need at least one sample per question");
  TomographyEstimate est;
  est.reference = true_state;
  const Eigen::VectorXd y = true_state.probabilities();
  for (Eigen::Index k = 0; k < y.size(); ++k) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(k)));
    std::binomial_distribution<std::uint64_t> answers(samples_per_question, std::clamp(y(k), 0.0, 1.0));
    QuestionEstimate e{QuestionIndex::from_position(true_state.n, static_cast<std::size_t>(k))};
    e.total = samples_per_question;
    e.yes = answers(rng);
    e.estimate = static_cast<double>(e.yes) / static_cast<double>(e.total);
    e.truth = y(k);
    est.entries.push_back(std::move(e));
  }
  return finish(std::move(est));
}

TomographyEstimate exact_tomography(const BlochState& true_state) {
  TomographyEstimate est;
  est.reference = true_state;
  const Eigen::VectorXd y = true_state.probabilities();
  for (Eigen::Index k = 0; k < y.size(); ++k) {
    QuestionEstimate e{QuestionIndex::from_position(true_state.n, static_cast<std::size_t>(k))};
    e.estimate = e.truth = y(k);
    est.entries.push_back(std::move(e));
  }
  return finish(std::move(est));
}

ConvergenceReport convergence_report(const BlochState& true_state, const std::vector<std::uint64_t>& grid,
                                     std::uint64_t seed, int replicates) {
  ConvergenceReport report;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (g > 0 && grid[g] <= grid[g - 1]) throw Error(ErrorCode::DimensionMismatch, "sample grid must increase");
    double total = 0.0;
    for (int rep = 0; rep < replicates; ++rep) {
      const auto s = stream_seed(stream_seed(seed, g), static_cast<std::uint64_t>(rep));
      total += multi_shot_tomography(true_state, grid[g], s).max_abs_error;
    }
    report.rows.push_back({grid[g], total / replicates});
  }
  if (report.rows.size() < 2) {
    report.slope = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  double mx = 0, my = 0;
  for (const auto& row : report.rows) {
    mx += std::log(static_cast<double>(row.samples));
    my += std::log(row.max_abs_error);
  }
  mx /= static_cast<double>(report.rows.size());
  my /= static_cast<double>(report.rows.size());
  double sxy = 0, sxx = 0;
  for (const auto& row : report.rows) {
    const double dx = std::log(static_cast<double>(row.samples)) - mx;
    sxy += dx * (std::log(row.max_abs_error) - my);
    sxx += dx * dx;
  }
  report.slope = sxy / sxx;
  return report;
}

}  // namespace qrecon

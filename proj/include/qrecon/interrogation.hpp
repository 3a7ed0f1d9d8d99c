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

#include <cstdint>
#include <vector>

#include "qrecon/state.hpp"

namespace qrecon {

struct InterrogationStep {
  QuestionIndex question;
  Answer answer;
  double probability;  ///< Born probability of the sampled answer
  BlochState posterior;
};

struct InterrogationRecord {
  BlochState prior;
  std::vector<InterrogationStep> steps;
  std::uint64_t seed = 0;
};

/// Asks the questions in order on one system, collapsing after each answer.
InterrogationRecord single_shot(const BlochState& prior, const std::vector<QuestionIndex>& questions,
                                std::uint64_t seed);

struct QuestionEstimate {
  QuestionIndex question;
  std::uint64_t yes = 0;
  std::uint64_t total = 0;
  double estimate = 0.0;  ///< yes / total
  double truth = 0.0;     ///< exact y of the reference state
};

struct TomographyEstimate {
  BlochState reference;
  std::vector<QuestionEstimate> entries;  ///< one per basis question, linear order
  Eigen::VectorXd reconstructed_r;        ///< 2 y_hat - 1
  double max_abs_error = 0.0;             ///< max |y_hat - y|
};

/// Frequency estimate of every basis question from fresh copies of the state.
/// Each question draws from its own stream derived from `seed`.
TomographyEstimate multi_shot_tomography(const BlochState& true_state, std::uint64_t samples_per_question,
                                         std::uint64_t seed);

/// Infinite-sample limit: y_hat equals the exact probabilities.
TomographyEstimate exact_tomography(const BlochState& true_state);

struct ConvergenceRow {
  std::uint64_t samples = 0;
  double max_abs_error = 0.0;  ///< averaged over replicates
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log(error) against log(samples); NaN for fewer
  /// than two rows.
  double slope = 0.0;
};

ConvergenceReport convergence_report(const BlochState& true_state, const std::vector<std::uint64_t>& grid,
                                     std::uint64_t seed, int replicates = 16);

/// Independent 64-bit seed for stream k of a master seed (splitmix64).
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace qrecon

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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qrecon/graph.hpp"
#include "qrecon/state.hpp"

namespace qrecon {

/// Real antisymmetric g on R^{4^N - 1}; r(t) = exp(t g) r(0).
struct EvolutionGenerator {
  int n = 1;
  Eigen::MatrixXd g;
};

/// H = sum_mu h_mu sigma_mu (hbar = 1).
struct Hamiltonian {
  int n = 1;
  Eigen::VectorXd coefficients;

  static Hamiltonian zero(int n);
  static Hamiltonian pauli(const QuestionIndex& q, double coefficient = 1.0);
  Eigen::MatrixXcd matrix() const;
};

/// Gaussian coefficients scaled by 1/sqrt(4^N - 1).
Hamiltonian random_hamiltonian(int n, std::uint64_t seed);

/**
 * Information swap between two pentagons (labels 1..6, N = 2). For each of
 * the four remaining pentagons c it couples Pent_a n Pent_c with
 * Pent_b n Pent_c with unit weight; the sign comes from the Pauli product with
 * the question both pentagons share. Symmetric in (a, b).
 */
EvolutionGenerator pentagon_swap_generator(int a, int b);

/// All 15 swaps, ordered (1,2), (1,3), ..., (5,6).
std::vector<EvolutionGenerator> all_pentagon_swaps();

/// Adjoint action: g[mu][nu] = tr(sigma_mu (-i)[H, sigma_nu]) / 2^N.
EvolutionGenerator generator_from_hamiltonian(const Hamiltonian& h);

struct GeneratorReport {
  double antisymmetry_residual = 0.0;  ///< max |g + g^T|
  double pattern_residual = 0.0;  ///< max |g_ij| over compatible pairs
  std::vector<std::pair<std::size_t, std::size_t>> pattern_violations;
  /// n = 2 only: max over sampled pure states and pentagons of
  /// |sum_{i in Pent_a} r_i (g r)_i|.
  std::optional<double> pentagon_residual;

  bool passed(double tolerance = tol::kIdentity) const;
};

GeneratorReport check_generator(const EvolutionGenerator& g, std::uint64_t seed = 0, int samples = 32,
                                double tolerance = tol::kIdentity);

/// a ~ scale * b with scale fixed by the first entry where b is non-zero.
struct ScaleMatch {
  double scale = 0.0;
  double residual = 0.0;  ///< max |a - scale * b|
};

ScaleMatch match_up_to_scale(const EvolutionGenerator& a, const EvolutionGenerator& b);

/// exp(t g).
Eigen::MatrixXd propagator(const EvolutionGenerator& g, double t);

BlochState evolve_bloch(const EvolutionGenerator& g, const BlochState& s, double t);

/// U rho U^dagger with U = exp(-i H t) from the eigendecomposition of H.
DensityMatrix evolve_density(const Hamiltonian& h, const DensityMatrix& rho, double t);

/// max |r_density(t) - r_bloch(t)| between the two evolution routes.
double adjoint_equivalence_check(const Hamiltonian& h, const BlochState& s, double t);

/// max |(rho(t+eps) - rho(t-eps)) / 2eps + i [H, rho(t)]|.
double von_neumann_residual(const Hamiltonian& h, const DensityMatrix& rho0, double t, double eps);

struct LieClosure {
  int dimension = 0;
  int passes = 0;
};

/// Dimension of the Lie algebra generated by the inputs: the span is extended
/// by pairwise commutators until a full pass adds nothing.
LieClosure lie_closure(const std::vector<EvolutionGenerator>& generators);

/// Adjoint generators of every single-site Pauli and every two-site Pauli
/// product over all qubit pairs.
std::vector<EvolutionGenerator> local_generators(int n);

}  // namespace qrecon

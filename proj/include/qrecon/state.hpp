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
#include <string>
#include <vector>

#include "qrecon/question.hpp"

namespace qrecon {

namespace tol {
/// Algebraic identities (Hermiticity, trace, round trips, Born rule).
inline constexpr double kIdentity = 1e-12;
/// Smallest admissible density-matrix eigenvalue is -kPsd.
inline constexpr double kPsd = 1e-10;
/// Idempotence and pure-state norm checks.
inline constexpr double kPurity = 1e-9;
}  // namespace tol

/// Generalized Bloch vector r over the 4^N - 1 questions (linear order).
struct BlochState {
  int n = 1;
  Eigen::VectorXd r;

  /// Checks the qubit cap and the vector length.
  static BlochState from_vector(int n, Eigen::VectorXd r);

  /// y = (r + 1) / 2.
  Eigen::VectorXd probabilities() const { return (r.array() + 1.0) / 2.0; }
  double component(const QuestionIndex& q) const;
};

struct DensityMatrix {
  int n = 1;
  Eigen::MatrixXcd rho;
};

/// A direction q with q.sigma a Pauli operator (eigenvalues +-1, equal
/// multiplicity).
class QuestionVector {
 public:
  /// Validates the spectrum; throws DimensionMismatch or InvalidState.
  static QuestionVector make(int n, Eigen::VectorXd q);
  static QuestionVector basis(const QuestionIndex& q);

  int n() const { return n_; }
  const Eigen::VectorXd& q() const { return q_; }

 private:
  QuestionVector(int n, Eigen::VectorXd q) : n_(n), q_(std::move(q)) {}
  int n_;
  Eigen::VectorXd q_;
};

struct InformationContent {
  double bits = 0.0;
};

enum class Purity { Pure, Mixed };

struct Classification {
  Purity purity = Purity::Mixed;
  double idempotence_residual = 0.0;  ///< max |rho^2 - rho|
  double norm_squared = 0.0;          ///< |r|^2 in bits
  bool norm_saturated = false;        ///< |r|^2 == 2^N - 1 within tolerance
};

struct StateReport {
  bool valid = false;
  double psd_margin = 0.0;  ///< smallest eigenvalue of rho
  double max_abs_component = 0.0;
  InformationContent info;
  std::optional<Classification> classification;
  std::vector<std::string> failures;
};

enum class Answer { No, Yes };

/// (1/2^N) (1 + sum_mu r_mu sigma_mu) for any real coefficient expression.
template <typename Derived>
ComplexMatrix<typename Derived::Scalar> expand_in_pauli_basis(int n, const Eigen::MatrixBase<Derived>& r) {
  using Scalar = typename Derived::Scalar;
  const std::size_t dim = hilbert_dim(n);
  const auto count = static_cast<Eigen::Index>(question_count(n));
  if (r.size() != count)
    throw Error(ErrorCode::LengthMismatch,
                "Bloch vector of length " + std::to_string(r.size()) + " for n=" + std::to_string(n));
  ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index mu = 0; mu < count; ++mu) {
    if (r(mu) == Scalar(0)) continue;
    PauliAction action(QuestionIndex::from_position(n, static_cast<std::size_t>(mu)));
    for (std::size_t col = 0; col < dim; ++col)
      m(static_cast<Eigen::Index>(action.row(col)), static_cast<Eigen::Index>(col)) +=
          r(mu) * action.template phase<Scalar>(col);
  }
  return m / Scalar(dim);
}

/// tr(m sigma_mu) for every question mu; imaginary parts are dropped.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> pauli_components(int n, const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const std::size_t dim = hilbert_dim(n);
  const auto count = static_cast<Eigen::Index>(question_count(n));
  Eigen::Matrix<Real, Eigen::Dynamic, 1> r(count);
  for (Eigen::Index mu = 0; mu < count; ++mu) {
    PauliAction action(QuestionIndex::from_position(n, static_cast<std::size_t>(mu)));
    std::complex<Real> acc(0);
    for (std::size_t col = 0; col < dim; ++col)
      acc += m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(action.row(col))) *
             action.template phase<Real>(col);
    r(mu) = acc.real();
  }
  return r;
}

BlochState state_of_no_information(int n);

DensityMatrix bloch_to_density(const BlochState& s);
/// Throws NotHermitian / NotUnitTrace.
BlochState density_to_bloch(const DensityMatrix& rho);

InformationContent info_measure(const BlochState& s);

/// Pure iff rho^2 == rho; throws InvalidState for non-states.
Classification classify(const BlochState& s);

/// Y(q|y) = (q.r + 1) / 2.
double born_probability(const QuestionVector& q, const BlochState& s);
double born_probability(const QuestionIndex& q, const BlochState& s, Answer answer = Answer::Yes);

/// Projective (Lueders) update on a basis question.
BlochState posterior_update(const BlochState& s, const QuestionIndex& a, Answer answer);

StateReport validate_state(const BlochState& s);

/// Haar-random pure state (normalized complex Gaussian vector).
BlochState random_pure(int n, std::uint64_t seed);
/// Hilbert-Schmidt random mixed state A A^dagger / tr(A A^dagger).
BlochState random_mixed(int n, std::uint64_t seed);

/// w a + (1 - w) b.
BlochState mix(const BlochState& a, const BlochState& b, double w);

}  // namespace qrecon

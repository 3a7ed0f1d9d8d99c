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

#include "qrecon/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace qrecon {

namespace {

void require_length(int n, Eigen::Index length) {
  if (length != static_cast<Eigen::Index>(question_count(n)))
    throw Error(ErrorCode::LengthMismatch, "vector of length " + std::to_string(length) +
                                               " does not match n=" + std::to_string(n));
}

Eigen::VectorXd spectrum(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace

BlochState BlochState::from_vector(int n, Eigen::VectorXd r) {
  check_qubit_count(n);
  require_length(n, r.size());
  return BlochState{n, std::move(r)};
}

double BlochState::component(const QuestionIndex& q) const {
  if (q.n() != n) throw Error(ErrorCode::DimensionMismatch, "question " + q.str() + " for n=" + std::to_string(n));
  return r(static_cast<Eigen::Index>(q.position()));
}

QuestionVector QuestionVector::make(int n, Eigen::VectorXd q) {
  check_qubit_count(n);
  if (q.size() != static_cast<Eigen::Index>(question_count(n)))
    throw Error(ErrorCode::DimensionMismatch, "question vector length " + std::to_string(q.size()));
  // q.sigma = 2^N * (expansion - 1/2^N)
  const auto dim = static_cast<double>(hilbert_dim(n));
  Eigen::MatrixXcd op = expand_in_pauli_basis(n, q) * dim;
  op.diagonal().array() -= 1.0;
  const Eigen::VectorXd ev = spectrum(op);
  const auto half = ev.size() / 2;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double expected = i < half ? -1.0 : 1.0;
    if (std::abs(ev(i) - expected) > tol::kPurity)
      throw Error(ErrorCode::InvalidState, "q.sigma is not a Pauli operator (eigenvalue " + std::to_string(ev(i)) + ")");
  }
  return QuestionVector(n, std::move(q));
}

QuestionVector QuestionVector::basis(const QuestionIndex& q) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(question_count(q.n())));
  v(static_cast<Eigen::Index>(q.position())) = 1.0;
  return QuestionVector(q.n(), std::move(v));
}

BlochState state_of_no_information(int n) {
  check_qubit_count(n);
  return BlochState{n, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(question_count(n)))};
}

DensityMatrix bloch_to_density(const BlochState& s) {
  check_qubit_count(s.n);
  require_length(s.n, s.r.size());
  return DensityMatrix{s.n, expand_in_pauli_basis(s.n, s.r)};
}

BlochState density_to_bloch(const DensityMatrix& rho) {
  check_qubit_count(rho.n);
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(rho.n));
  if (rho.rho.rows() != dim || rho.rho.cols() != dim)
    throw Error(ErrorCode::DimensionMismatch, "density matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
  const double asym = (rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol::kIdentity) throw Error(ErrorCode::NotHermitian, "asymmetry " + std::to_string(asym));
  const auto trace = rho.rho.trace();
  if (std::abs(trace - 1.0) > tol::kIdentity)
    throw Error(ErrorCode::NotUnitTrace, "trace " + std::to_string(trace.real()));
  return BlochState{rho.n, pauli_components(rho.n, rho.rho)};
}

InformationContent info_measure(const BlochState& s) { return {s.r.squaredNorm()}; }

StateReport validate_state(const BlochState& s) {
  require_length(s.n, s.r.size());
  StateReport report;
  report.info = info_measure(s);
  report.max_abs_component = s.r.size() ? s.r.cwiseAbs().maxCoeff() : 0.0;
  const auto rho = bloch_to_density(s);
  report.psd_margin = spectrum(rho.rho).minCoeff();
  if (report.psd_margin < -tol::kPsd)
    report.failures.push_back("density matrix not positive semidefinite (min eigenvalue " +
                              std::to_string(report.psd_margin) + ")");
  if (report.max_abs_component > 1.0 + tol::kIdentity) report.failures.push_back("Bloch component exceeds 1");
  report.valid = report.failures.empty();
  if (report.valid) {
    Classification c;
    const Eigen::MatrixXcd square = rho.rho * rho.rho;
    c.idempotence_residual = (square - rho.rho).cwiseAbs().maxCoeff();
    c.norm_squared = report.info.bits;
    c.norm_saturated = std::abs(c.norm_squared - static_cast<double>(hilbert_dim(s.n) - 1)) < tol::kPurity;
    c.purity = c.idempotence_residual < tol::kPurity ? Purity::Pure : Purity::Mixed;
    report.classification = c;
  }
  return report;
}

Classification classify(const BlochState& s) {
  auto report = validate_state(s);
  if (!report.valid) throw Error(ErrorCode::InvalidState, report.failures.front());
  return *report.classification;
}

double born_probability(const QuestionVector& q, const BlochState& s) {
  if (q.n() != s.n || s.r.size() != q.q().size())
    throw Error(ErrorCode::DimensionMismatch, "question and state disagree on qubit count");
  return 0.5 * (q.q().dot(s.r) + 1.0);
}

double born_probability(const QuestionIndex& q, const BlochState& s, Answer answer) {
  const double r = s.component(q);
  return 0.5 * (1.0 + (answer == Answer::Yes ? r : -r));
}

BlochState posterior_update(const BlochState& s, const QuestionIndex& a, Answer answer) {
  const double sign = answer == Answer::Yes ? 1.0 : -1.0;
  const double ra = s.component(a);
  const double p = 0.5 * (1.0 + sign * ra);
  if (p <= tol::kIdentity)
    throw Error(ErrorCode::ZeroProbabilityAnswer,
                "answer '" + std::string(answer == Answer::Yes ? "yes" : "no") + "' to " + a.str() + " has probability 0");

  // P rho P with P = (1 + s sigma_a)/2 keeps the components commuting with
  // sigma_a, folds sigma_mu sigma_a back onto them and kills the rest.
  BlochState post{s.n, Eigen::VectorXd::Zero(s.r.size())};
  for (Eigen::Index nu = 0; nu < s.r.size(); ++nu) {
    const auto q = QuestionIndex::from_position(s.n, static_cast<std::size_t>(nu));
    if (q == a) {
      post.r(nu) = (sign + ra) / (1.0 + sign * ra);
      continue;
    }
    if (!is_compatible(q, a)) continue;
    // sigma_mu sigma_a = phi sigma_nu  with  mu = nu * a
    const auto mu = *pauli_product(q, a).index;
    const double phi = pauli_product(mu, a).phase.sign();
    post.r(nu) = 0.5 * (s.r(nu) + sign * phi * s.component(mu)) / p;
  }
  return post;
}

namespace {

Eigen::MatrixXcd gaussian_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = {re, im};
    }
  return m;
}

}  // namespace

BlochState random_pure(int n, std::uint64_t seed) {
  check_qubit_count(n);
  std::mt19937_64 rng(seed);
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
  Eigen::VectorXcd psi = gaussian_matrix(rng, dim, 1);
  psi.normalize();
  return BlochState{n, pauli_components(n, psi * psi.adjoint())};
}

BlochState random_mixed(int n, std::uint64_t seed) {
  check_qubit_count(n);
  std::mt19937_64 rng(seed);
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
  const Eigen::MatrixXcd a = gaussian_matrix(rng, dim, dim);
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace().real();
  return BlochState{n, pauli_components(n, rho)};
}

BlochState mix(const BlochState& a, const BlochState& b, double w) {
  if (a.n != b.n) throw Error(ErrorCode::DimensionMismatch, "mixing states of different size");
  return BlochState{a.n, w * a.r + (1.0 - w) * b.r};
}

}  // namespace qrecon

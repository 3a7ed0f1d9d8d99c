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

#include "qrecon/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "qrecon/expm.hpp"

namespace qrecon {

namespace {

void require_generator(const EvolutionGenerator& g) {
  check_qubit_count(g.n);
  const auto d = static_cast<Eigen::Index>(question_count(g.n));
  if (g.g.rows() != d || g.g.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "generator is not " + std::to_string(d) + "x" + std::to_string(d));
}

}  // namespace

Hamiltonian Hamiltonian::zero(int n) {
  check_qubit_count(n);
  return Hamiltonian{n, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(question_count(n)))};
}

Hamiltonian Hamiltonian::pauli(const QuestionIndex& q, double coefficient) {
  auto h = zero(q.n());
  h.coefficients(static_cast<Eigen::Index>(q.position())) = coefficient;
  return h;
}

Eigen::MatrixXcd Hamiltonian::matrix() const {
  const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
  if (coefficients.size() != static_cast<Eigen::Index>(question_count(n)))
    throw Error(ErrorCode::DimensionMismatch, "Hamiltonian coefficient count");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index mu = 0; mu < coefficients.size(); ++mu)
    if (coefficients(mu) != 0.0)
      m += coefficients(mu) * pauli_matrix(QuestionIndex::from_position(n, static_cast<std::size_t>(mu)));
  return m;
}

Hamiltonian random_hamiltonian(int n, std::uint64_t seed) {
  auto h = Hamiltonian::zero(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const double scale = 1.0 / std::sqrt(static_cast<double>(h.coefficients.size()));
  for (Eigen::Index mu = 0; mu < h.coefficients.size(); ++mu) h.coefficients(mu) = scale * normal(rng);
  return h;
}

EvolutionGenerator pentagon_swap_generator(int a, int b) {
  const auto& lattice = pentagon_lattice();
  const QuestionIndex pivot = lattice.shared(a, b);
  EvolutionGenerator out{2, Eigen::MatrixXd::Zero(15, 15)};
  for (int c = 1; c <= 6; ++c) {
    if (c == a || c == b) continue;
    const QuestionIndex from = lattice.shared(a, c);
    const QuestionIndex to = lattice.shared(b, c);
    // sigma_pivot sigma_to = phi sigma_from with phi = +-i
    const auto product = pauli_product(pivot, to);
    if (product.is_identity() || *product.index != from || product.phase.is_real())
      throw Error(ErrorCode::InvalidState, "pentagon lattice inconsistent with the Pauli algebra");
    const double value = product.phase.quarter_turns() == 3 ? 1.0 : -1.0;
    const auto i = static_cast<Eigen::Index>(from.position());
    const auto j = static_cast<Eigen::Index>(to.position());
    out.g(i, j) = value;
    out.g(j, i) = -value;
  }
  return out;
}

std::vector<EvolutionGenerator> all_pentagon_swaps() {
  std::vector<EvolutionGenerator> out;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) out.push_back(pentagon_swap_generator(a, b));
  return out;
}

EvolutionGenerator generator_from_hamiltonian(const Hamiltonian& h) {
  check_qubit_count(h.n);
  const auto count = static_cast<Eigen::Index>(question_count(h.n));
  const double dim = static_cast<double>(hilbert_dim(h.n));
  const Eigen::MatrixXcd hm = h.matrix();
  std::vector<Eigen::MatrixXcd> sigma;
  sigma.reserve(static_cast<std::size_t>(count));
  for (const auto& q : all_questions(h.n)) sigma.push_back(pauli_matrix(q));

  EvolutionGenerator out{h.n, Eigen::MatrixXd::Zero(count, count)};
  const std::complex<double> minus_i(0, -1);
  for (Eigen::Index nu = 0; nu < count; ++nu) {
    const auto& s = sigma[static_cast<std::size_t>(nu)];
    const Eigen::MatrixXcd c = minus_i * (hm * s - s * hm);
    if (c.cwiseAbs().maxCoeff() == 0.0) continue;
    for (Eigen::Index mu = 0; mu < count; ++mu)
      out.g(mu, nu) = (sigma[static_cast<std::size_t>(mu)].transpose().cwiseProduct(c)).sum().real() / dim;
  }
  // The adjoint action is antisymmetric; average away the rounding so the
  // upper triangle determines the matrix exactly.
  const Eigen::MatrixXd antisymmetric = 0.5 * (out.g - out.g.transpose());
  out.g = antisymmetric;
  return out;
}

bool GeneratorReport::passed(double tolerance) const {
  return antisymmetry_residual < tolerance && pattern_violations.empty() &&
         (!pentagon_residual || *pentagon_residual < tolerance);
}

GeneratorReport check_generator(const EvolutionGenerator& g, std::uint64_t seed, int samples, double tolerance) {
  require_generator(g);
  GeneratorReport report;
  report.antisymmetry_residual = (g.g + g.g.transpose()).cwiseAbs().maxCoeff();
  const auto questions = all_questions(g.n);
  for (std::size_t i = 0; i < questions.size(); ++i)
    for (std::size_t j = 0; j < questions.size(); ++j) {
      if (!is_compatible(questions[i], questions[j])) continue;
      const double v = std::abs(g.g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      report.pattern_residual = std::max(report.pattern_residual, v);
      if (v > tolerance) report.pattern_violations.emplace_back(i, j);
    }
  if (g.n == 2) {
    // Pentagon charges are conserved on pure states, so sample those.
    const auto& lattice = pentagon_lattice();
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
      const auto s = random_pure(2, seed + static_cast<std::uint64_t>(k));
      const Eigen::VectorXd flow = g.g * s.r;
      for (const auto& pent : lattice.pentagons()) {
        double rate = 0.0;
        for (const auto& q : pent.members) {
          const auto i = static_cast<Eigen::Index>(q.position());
          rate += s.r(i) * flow(i);
        }
        worst = std::max(worst, std::abs(rate));
      }
    }
    report.pentagon_residual = worst;
  }
  return report;
}

ScaleMatch match_up_to_scale(const EvolutionGenerator& a, const EvolutionGenerator& b) {
  if (a.g.rows() != b.g.rows() || a.g.cols() != b.g.cols())
    throw Error(ErrorCode::DimensionMismatch, "generators of different size");
  ScaleMatch match;
  for (Eigen::Index i = 0; i < b.g.rows() && match.scale == 0.0; ++i)
    for (Eigen::Index j = 0; j < b.g.cols(); ++j)
      if (b.g(i, j) != 0.0) {
        match.scale = a.g(i, j) / b.g(i, j);
        break;
      }
  match.residual = (a.g - match.scale * b.g).cwiseAbs().maxCoeff();
  return match;
}

Eigen::MatrixXd propagator(const EvolutionGenerator& g, double t) {
  require_generator(g);
  return expm(t * g.g);
}

BlochState evolve_bloch(const EvolutionGenerator& g, const BlochState& s, double t) {
  if (g.n != s.n || s.r.size() != g.g.cols())
    throw Error(ErrorCode::DimensionMismatch, "generator and state disagree on qubit count");
  return BlochState{s.n, propagator(g, t) * s.r};
}

DensityMatrix evolve_density(const Hamiltonian& h, const DensityMatrix& rho, double t) {
  if (h.n != rho.n) throw Error(ErrorCode::DimensionMismatch, "Hamiltonian and state disagree on qubit count");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0, -t)).array().exp();
  const Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return DensityMatrix{rho.n, u * rho.rho * u.adjoint()};
}

double adjoint_equivalence_check(const Hamiltonian& h, const BlochState& s, double t) {
  const auto via_density = density_to_bloch(evolve_density(h, bloch_to_density(s), t));
  const auto via_bloch = evolve_bloch(generator_from_hamiltonian(h), s, t);
  return (via_density.r - via_bloch.r).cwiseAbs().maxCoeff();
}

double von_neumann_residual(const Hamiltonian& h, const DensityMatrix& rho0, double t, double eps) {
  const Eigen::MatrixXcd hm = h.matrix();
  const Eigen::MatrixXcd now = evolve_density(h, rho0, t).rho;
  const Eigen::MatrixXcd ahead = evolve_density(h, rho0, t + eps).rho;
  const Eigen::MatrixXcd behind = evolve_density(h, rho0, t - eps).rho;
  const Eigen::MatrixXcd derivative = (ahead - behind) / (2.0 * eps);
  const Eigen::MatrixXcd rhs = std::complex<double>(0, -1) * (hm * now - now * hm);
  return (derivative - rhs).cwiseAbs().maxCoeff();
}

namespace {

// Orthonormal basis of a subspace of flattened square matrices.
class SpanBuilder {
 public:
  explicit SpanBuilder(Eigen::Index side) : side_(side) {}

  /// Adds m if it leaves the current span; returns whether it did.
  bool add(const Eigen::MatrixXd& m) {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
    const double norm = v.norm();
    if (norm == 0.0) return false;
    v /= norm;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis_) v -= b.dot(v) * b;
    const double residual = v.norm();
    if (residual <= kRelativeThreshold) return false;
    basis_.push_back(v / residual);
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  Eigen::MatrixXd element(std::size_t k) const {
    return Eigen::Map<const Eigen::MatrixXd>(basis_[k].data(), side_, side_);
  }

  /// Numerical rank of the stored basis from its singular values.
  int rank() const {
    if (basis_.empty()) return 0;
    Eigen::MatrixXd stacked(basis_.front().size(), static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t k = 0; k < basis_.size(); ++k) stacked.col(static_cast<Eigen::Index>(k)) = basis_[k];
    const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(stacked).singularValues();
    return static_cast<int>((sv.array() > kRelativeThreshold * sv(0)).count());
  }

  static constexpr double kRelativeThreshold = 1e-8;

 private:
  Eigen::Index side_;
  std::vector<Eigen::VectorXd> basis_;
};

}  // namespace

LieClosure lie_closure(const std::vector<EvolutionGenerator>& generators) {
  if (generators.empty()) throw Error(ErrorCode::DimensionMismatch, "no generators");
  const int n = generators.front().n;
  for (const auto& g : generators) {
    require_generator(g);
    if (g.n != n) throw Error(ErrorCode::DimensionMismatch, "generators with different qubit counts");
  }
  SpanBuilder span(generators.front().g.rows());
  for (const auto& g : generators) span.add(g.g);

  LieClosure closure;
  std::size_t done = 0;  // brackets among the first `done` elements are in the span
  while (true) {
    ++closure.passes;
    const std::size_t size = span.size();
    bool grew = false;
    for (std::size_t j = done; j < size; ++j) {
      const Eigen::MatrixXd bj = span.element(j);
      for (std::size_t i = 0; i < j; ++i) {
        const Eigen::MatrixXd bi = span.element(i);
        grew |= span.add(bi * bj - bj * bi);
      }
    }
    done = size;
    if (!grew) break;
  }
  closure.dimension = span.rank();
  return closure;
}

std::vector<EvolutionGenerator> local_generators(int n) {
  check_qubit_count(n);
  std::vector<EvolutionGenerator> out;
  for (int site = 0; site < n; ++site)
    for (int mu = 1; mu <= 3; ++mu) {
      std::vector<int> sites(static_cast<std::size_t>(n), 0);
      sites[static_cast<std::size_t>(site)] = mu;
      out.push_back(generator_from_hamiltonian(Hamiltonian::pauli(make_index(sites, n))));
    }
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = s1 + 1; s2 < n; ++s2)
      for (int mu = 1; mu <= 3; ++mu)
        for (int nu = 1; nu <= 3; ++nu) {
          std::vector<int> sites(static_cast<std::size_t>(n), 0);
          sites[static_cast<std::size_t>(s1)] = mu;
          sites[static_cast<std::size_t>(s2)] = nu;
          out.push_back(generator_from_hamiltonian(Hamiltonian::pauli(make_index(sites, n))));
        }
  return out;
}

}  // namespace qrecon

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

#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracle.hpp"
#include "qrecon/charges.hpp"
#include "qrecon/dynamics.hpp"
#include "qrecon/expm.hpp"

namespace {

using namespace qrecon;

QuestionIndex Q(const char* digits) { return QuestionIndex::parse(digits); }

std::vector<QuestionIndex> set_of(std::initializer_list<const char*> names) {
  std::vector<QuestionIndex> out;
  for (const char* s : names) out.push_back(Q(s));
  std::sort(out.begin(), out.end());
  return out;
}

// g[mu][nu] = tr(sigma_mu (-i)[H, sigma_nu]) / 2^n with dense oracle matrices.
Eigen::MatrixXd adjoint_oracle(const Hamiltonian& h) {
  const auto names = oracle::all_digit_strings(h.n);
  const double dim = std::ldexp(1.0, h.n);
  oracle::CM hm = oracle::CM::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < names.size(); ++k) hm += h.coefficients(static_cast<Eigen::Index>(k)) * oracle::pauli(names[k]);
  const auto count = static_cast<Eigen::Index>(names.size());
  Eigen::MatrixXd g(count, count);
  const std::complex<double> minus_i(0, -1);
  for (Eigen::Index nu = 0; nu < count; ++nu) {
    const oracle::CM s = oracle::pauli(names[static_cast<std::size_t>(nu)]);
    const oracle::CM d = minus_i * (hm * s - s * hm);
    for (Eigen::Index mu = 0; mu < count; ++mu)
      g(mu, nu) = (oracle::pauli(names[static_cast<std::size_t>(mu)]) * d).trace().real() / dim;
  }
  return g;
}

Eigen::MatrixXd random_matrix(Eigen::Index n, double scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  return m;
}

TEST(Expm, AgreesWithEigenMatrixExponential) {
  for (double scale : {1e-3, 0.3, 1.0, 5.0, 20.0})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Eigen::MatrixXd a = random_matrix(8, scale / std::sqrt(8.0), seed);
      const Eigen::MatrixXd ours = expm(a);
      const Eigen::MatrixXd ref = a.exp();
      EXPECT_LT((ours - ref).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff(), 1e-12) << "scale " << scale;
    }
  Eigen::MatrixXcd h = random_matrix(4, 1.0, 9).cast<std::complex<double>>();
  h = (h + h.adjoint()).eval();
  const Eigen::MatrixXcd u = expm(Eigen::MatrixXcd(std::complex<double>(0, -2.5) * h));
  EXPECT_LT((u * u.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((u - Eigen::MatrixXcd(std::complex<double>(0, -2.5) * h).exp()).cwiseAbs().maxCoeff(), 1e-11);
}

TEST(PentagonSwap, Pent1Pent2Signs) {
  const auto& lattice = pentagon_lattice();
  const int a = lattice.label_of(set_of({"11", "12", "13", "20", "30"}));
  const int b = lattice.label_of(set_of({"11", "21", "31", "02", "03"}));
  ASSERT_GT(a, 0);
  ASSERT_GT(b, 0);
  const auto g = pentagon_swap_generator(a, b).g;
  struct Entry {
    const char* i;
    const char* j;
    double sign;
  };
  const Entry expected[] = {{"20", "31", 1.0}, {"30", "21", -1.0}, {"12", "03", 1.0}, {"13", "02", -1.0}};
  Eigen::MatrixXd want = Eigen::MatrixXd::Zero(15, 15);
  for (const auto& e : expected) {
    want(Q(e.i).position(), Q(e.j).position()) = e.sign;
    want(Q(e.j).position(), Q(e.i).position()) = -e.sign;
  }
  EXPECT_EQ(g, want);
  EXPECT_EQ(pentagon_swap_generator(b, a).g, g);

  const auto match = match_up_to_scale(generator_from_hamiltonian(Hamiltonian::pauli(Q("11"))), pentagon_swap_generator(a, b));
  EXPECT_LT(match.residual, 1e-12);
  EXPECT_NE(match.scale, 0.0);
}

TEST(PentagonSwap, FifteenIndependentGeneratorsMatchingHamiltonians) {
  const auto swaps = all_pentagon_swaps();
  ASSERT_EQ(swaps.size(), 15u);
  Eigen::MatrixXd flat(225, 15);
  int k = 0;
  const auto& lattice = pentagon_lattice();
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b, ++k) {
      flat.col(k) = Eigen::Map<const Eigen::VectorXd>(swaps[static_cast<std::size_t>(k)].g.data(), 225);
      EXPECT_EQ(swaps[static_cast<std::size_t>(k)].g, pentagon_swap_generator(a, b).g);
      const auto report = check_generator(swaps[static_cast<std::size_t>(k)], static_cast<std::uint64_t>(k));
      EXPECT_TRUE(report.passed(1e-12));
      const auto match = match_up_to_scale(generator_from_hamiltonian(Hamiltonian::pauli(lattice.shared(a, b))),
                                           swaps[static_cast<std::size_t>(k)]);
      EXPECT_LT(match.residual, 1e-10);
      EXPECT_NE(match.scale, 0.0);
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(flat);
  EXPECT_EQ(svd.setThreshold(1e-10).rank(), 15);
}

TEST(PentagonSwap, Errors) {
  auto code = [](int a, int b) {
    try {
      pentagon_swap_generator(a, b);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code(3, 3), ErrorCode::EqualPentagons);
  EXPECT_EQ(code(0, 3), ErrorCode::BadLabel);
  EXPECT_EQ(code(1, 7), ErrorCode::BadLabel);
}

TEST(GeneratorFromHamiltonian, Examples) {
  Hamiltonian h = Hamiltonian::pauli(Q("3"), 0.5);
  const auto g = generator_from_hamiltonian(h).g;
  Eigen::Matrix3d want;
  want << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  EXPECT_LT((g - want).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(generator_from_hamiltonian(Hamiltonian::zero(2)).g, Eigen::MatrixXd::Zero(15, 15));
}

TEST(GeneratorFromHamiltonian, MatchesCommutatorOracle) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto h = random_hamiltonian(n, seed);
      const auto g = generator_from_hamiltonian(h);
      EXPECT_LT((g.g - adjoint_oracle(h)).cwiseAbs().maxCoeff(), 1e-13);
      EXPECT_TRUE(check_generator(g, seed).passed(1e-12));
    }
}

TEST(CheckGenerator, FlagsViolations) {
  auto g = pentagon_swap_generator(1, 2);
  // Symmetric bump on a complementary pair keeps the pattern intact.
  const auto i = static_cast<Eigen::Index>(Q("11").position()), j = static_cast<Eigen::Index>(Q("31").position());
  g.g(i, j) += 1.0;
  g.g(j, i) += 1.0;
  EXPECT_GT(check_generator(g).antisymmetry_residual, 0.5);
  EXPECT_FALSE(check_generator(g).passed());

  EvolutionGenerator bad{2, Eigen::MatrixXd::Zero(15, 15)};
  const auto a = static_cast<Eigen::Index>(Q("11").position()), b = static_cast<Eigen::Index>(Q("22").position());
  bad.g(a, b) = 1.0;
  bad.g(b, a) = -1.0;
  const auto report = check_generator(bad);
  EXPECT_EQ(report.antisymmetry_residual, 0.0);
  EXPECT_EQ(report.pattern_residual, 1.0);
  // Both ordered entries of the pair are reported.
  EXPECT_EQ(report.pattern_violations.size(), 2u);
  EXPECT_FALSE(report.passed());
}

TEST(EvolveBloch, IdentityNormAndGroupLaw) {
  for (int n = 1; n <= 3; ++n) {
    const auto g = generator_from_hamiltonian(random_hamiltonian(n, 40 + static_cast<std::uint64_t>(n)));
    const auto s = random_mixed(n, 7);
    EXPECT_EQ(evolve_bloch(g, s, 0.0).r, s.r);
    for (int step = 0; step <= 20; ++step) {
      const double t = 0.25 * step;
      EXPECT_NEAR(evolve_bloch(g, s, t).r.squaredNorm(), s.r.squaredNorm(), 1e-10);
    }
    const auto direct = evolve_bloch(g, s, 1.7);
    const auto split = evolve_bloch(g, evolve_bloch(g, s, 0.6), 1.1);
    EXPECT_LT((direct.r - split.r).cwiseAbs().maxCoeff(), 1e-10);
  }
  EXPECT_THROW(evolve_bloch(generator_from_hamiltonian(Hamiltonian::zero(1)), random_pure(2, 0), 1.0), Error);
}

TEST(EvolveBloch, PentagonChargesConservedOnPureStates) {
  for (const auto& g : {pentagon_swap_generator(1, 2), pentagon_swap_generator(3, 6),
                        generator_from_hamiltonian(random_hamiltonian(2, 5))}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto s = random_pure(2, seed);
      const auto before = pentagon_report(s).charges;
      for (int step = 1; step <= 20; ++step) {
        const auto after = pentagon_report(evolve_bloch(g, s, 0.3 * step)).charges;
        for (std::size_t a = 0; a < 6; ++a) EXPECT_NEAR(after[a], before[a], 1e-9);
      }
    }
  }
}

TEST(EvolveDensity, Examples) {
  const auto h = Hamiltonian::pauli(Q("3"), 0.5);
  const auto rho = bloch_to_density(BlochState::from_vector(1, Eigen::Vector3d(1, 0, 0)));
  EXPECT_LT(oracle::max_abs(evolve_density(h, rho, 0.0).rho - rho.rho), 1e-15);
  const auto out = density_to_bloch(evolve_density(h, rho, std::numbers::pi));
  EXPECT_LT((out.r - Eigen::Vector3d(-1, 0, 0)).cwiseAbs().maxCoeff(), 1e-12);
  const auto quarter = density_to_bloch(evolve_density(h, rho, std::numbers::pi / 2));
  EXPECT_LT((quarter.r - Eigen::Vector3d(0, 1, 0)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(evolve_density(Hamiltonian::zero(2), rho, 1.0), Error);
}

TEST(EvolveDensity, MatchesMatrixExponentialOracle) {
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto h = random_hamiltonian(n, seed);
      const auto s = random_mixed(n, seed + 10);
      const double t = 0.7 + static_cast<double>(seed);
      const oracle::CM u = oracle::CM(std::complex<double>(0, -t) * h.matrix()).exp();
      const oracle::CM rho_t = u * oracle::density_of(s.r, n) * u.adjoint();
      const Eigen::VectorXd want = oracle::bloch_of(rho_t, n);
      EXPECT_LT((evolve_bloch(generator_from_hamiltonian(h), s, t).r - want).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(AdjointEquivalence, RandomTriples) {
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto h = random_hamiltonian(n, 500 + seed);
      const auto s = random_mixed(n, 600 + seed);
      const double t = 0.15 * static_cast<double>(seed + 1);
      EXPECT_LT(adjoint_equivalence_check(h, s, t), 1e-8);
      EXPECT_LT(von_neumann_residual(h, bloch_to_density(s), t, 1e-4), 1e-6);
    }
  // Zero up to rounding in the density round trip.
  EXPECT_LT(adjoint_equivalence_check(Hamiltonian::zero(2), random_pure(2, 1), 3.0), 1e-15);
}

TEST(LieClosure, Dimensions) {
  EXPECT_EQ(lie_closure(all_pentagon_swaps()).dimension, 15);
  std::vector<EvolutionGenerator> one;
  for (const auto& q : all_questions(1)) one.push_back(generator_from_hamiltonian(Hamiltonian::pauli(q)));
  EXPECT_EQ(lie_closure(one).dimension, 3);
  EXPECT_EQ(lie_closure({one[0]}).dimension, 1);
  // Local unitaries on two qubits: su(2) + su(2).
  std::vector<EvolutionGenerator> local;
  for (const char* q : {"10", "20", "30", "01", "02", "03"})
    local.push_back(generator_from_hamiltonian(Hamiltonian::pauli(Q(q))));
  EXPECT_EQ(lie_closure(local).dimension, 6);
  // Two pentagon swaps whose shared questions commute span an abelian pair.
  const auto& lattice = pentagon_lattice();
  std::vector<EvolutionGenerator> pair;
  for (int a = 1; a <= 6 && pair.size() < 2; ++a)
    for (int b = a + 1; b <= 6 && pair.size() < 2; ++b)
      if (pair.empty() || (lattice.shared(a, b) != lattice.shared(1, 2) && is_compatible(lattice.shared(a, b), lattice.shared(1, 2))))
        pair.push_back(pentagon_swap_generator(a, b));
  EXPECT_EQ(lie_closure(pair).dimension, 2);
}

TEST(LieClosure, ThreeQubitUniversality) {
  const auto generators = local_generators(3);
  EXPECT_EQ(generators.size(), 36u);
  EXPECT_EQ(lie_closure(generators).dimension, 63);
}

}  // namespace

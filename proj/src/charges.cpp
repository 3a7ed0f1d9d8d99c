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

#include "qrecon/charges.hpp"

#include <algorithm>
#include <cmath>

namespace qrecon {

double charge(const std::vector<QuestionIndex>& members, const BlochState& s) {
  double total = 0.0;
  for (const auto& q : members) {
    if (q.n() != s.n) throw Error(ErrorCode::DimensionMismatch, "question " + q.str() + " for n=" + std::to_string(s.n));
    const double r = s.component(q);
    total += r * r;
  }
  return total;
}

ChargeReport pentagon_report(const BlochState& s) {
  if (s.n != 2) throw Error(ErrorCode::WrongN, "pentagon charges need n=2, got n=" + std::to_string(s.n));
  const auto& lattice = pentagon_lattice();
  ChargeReport report;
  double sum = 0.0;
  for (int a = 1; a <= 6; ++a) {
    report.charges[static_cast<std::size_t>(a - 1)] = charge(lattice.pentagon(a), s);
    sum += report.charges[static_cast<std::size_t>(a - 1)];
  }
  report.total_information = info_measure(s).bits;
  report.sum_identity_residual = sum - 2.0 * report.total_information;
  const auto validity = validate_state(s);
  report.pure = validity.classification && validity.classification->purity == Purity::Pure;
  if (report.pure) {
    std::array<double, 6> residuals{};
    for (std::size_t a = 0; a < 6; ++a) residuals[a] = std::abs(report.charges[a] - 1.0);
    report.pentagon_residuals = residuals;
  }
  return report;
}

ComplementarityAudit complementarity_audit(const BlochState& s, const std::vector<ComplementaritySet>& cliques,
                                           double tolerance) {
  ComplementarityAudit audit;
  audit.entries.reserve(cliques.size());
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    const double c = charge(cliques[k], s);
    audit.entries.push_back({k, c, 1.0 - c});
    audit.max_charge = std::max(audit.max_charge, c);
    if (c > 1.0 + tolerance) audit.violations.push_back(k);
  }
  return audit;
}

ComplementarityAudit complementarity_audit(const BlochState& s, double tolerance) {
  return complementarity_audit(s, maximal_cliques(build_graph(s.n)), tolerance);
}

MonogamyReport monogamy_demo(std::uint64_t seed) {
  // (|01> + |10>)/sqrt 2 = (|x+x+> - |x-x->)/sqrt 2
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell(1) = bell(2) = 1.0 / std::sqrt(2.0);
  const Eigen::MatrixXcd rho_ab = bell * bell.adjoint();

  MonogamyReport report;
  report.c_state = random_pure(1, seed);
  const Eigen::MatrixXcd rho_c = bloch_to_density(report.c_state).rho;
  report.state = density_to_bloch(DensityMatrix{3, kron(rho_ab, rho_c)});

  for (const auto& q : all_questions(3)) {
    if (q[2] != 0 && (q[0] != 0 || q[1] != 0)) {
      const double r = report.state.component(q);
      const double r_c = report.state.component(make_index({0, 0, q[2]}, 3));
      const double r_ab = report.state.component(make_index({q[0], q[1], 0}, 3));
      const double connected = r - r_ab * r_c;
      report.cross_correlations.push_back({q, r, connected});
      report.max_cross_abs = std::max(report.max_cross_abs, std::abs(connected));
      if (q[0] == 0 || q[1] == 0) report.max_one_party_abs = std::max(report.max_one_party_abs, std::abs(r));
    }
  }
  for (int mu = 1; mu <= 3; ++mu)
    report.ab_correlations[static_cast<std::size_t>(mu - 1)] = report.state.component(make_index({mu, mu, 0}, 3));

  Eigen::Vector3d individual;
  for (int mu = 1; mu <= 3; ++mu) individual(mu - 1) = report.state.component(make_index({0, 0, mu}, 3));
  report.c_charge = individual.squaredNorm();
  report.c_aligned = std::abs(individual.dot(report.c_state.r.normalized()));
  return report;
}

}  // namespace qrecon

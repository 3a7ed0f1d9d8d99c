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

#include "qrecon/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qrecon::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const BlochState& s) {
  Json doc;
  doc["n"] = s.n;
  doc["r"] = std::vector<double>(s.r.data(), s.r.data() + s.r.size());
  return doc;
}

BlochState bloch_from_json(const Json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const auto values = doc.at("r").get<std::vector<double>>();
    return BlochState::from_vector(n, Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size())));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string states_to_csv(const std::vector<BlochState>& states) {
  std::ostringstream out;
  if (states.empty()) return "";
  out << "state_id";
  for (const auto& q : all_questions(states.front().n)) out << ',' << q.str();
  out << '\n';
  for (std::size_t k = 0; k < states.size(); ++k) {
    out << k;
    for (Eigen::Index i = 0; i < states[k].r.size(); ++i) out << ',' << format_double(states[k].r(i));
    out << '\n';
  }
  return out.str();
}

Json to_json(const DensityMatrix& rho) {
  Json doc;
  doc["n"] = rho.n;
  auto& data = doc["data"] = Json::array();
  for (Eigen::Index i = 0; i < rho.rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.rho.cols(); ++j) data.push_back({rho.rho(i, j).real(), rho.rho(i, j).imag()});
  return doc;
}

DensityMatrix density_from_json(const Json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    check_qubit_count(n);
    const auto dim = static_cast<Eigen::Index>(hilbert_dim(n));
    const auto& data = doc.at("data");
    if (data.size() != static_cast<std::size_t>(dim * dim))
      throw Error(ErrorCode::DimensionMismatch, "density data has " + std::to_string(data.size()) + " entries");
    DensityMatrix rho{n, Eigen::MatrixXcd(dim, dim)};
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        const auto& pair = data.at(static_cast<std::size_t>(i * dim + j));
        rho.rho(i, j) = {pair.at(0).get<double>(), pair.at(1).get<double>()};
      }
    return rho;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const EvolutionGenerator& g) {
  Json doc;
  doc["n"] = g.n;
  auto& entries = doc["entries"] = Json::array();
  for (Eigen::Index i = 0; i < g.g.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.g.cols(); ++j)
      if (g.g(i, j) != 0.0) entries.push_back({i, j, g.g(i, j)});
  return doc;
}

EvolutionGenerator generator_from_json(const Json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    check_qubit_count(n);
    const auto d = static_cast<Eigen::Index>(question_count(n));
    EvolutionGenerator g{n, Eigen::MatrixXd::Zero(d, d)};
    for (const auto& e : doc.at("entries")) {
      const auto i = e.at(0).get<Eigen::Index>();
      const auto j = e.at(1).get<Eigen::Index>();
      if (i < 0 || j < 0 || i >= d || j >= d || i == j)
        throw Error(ErrorCode::DimensionMismatch, "generator entry out of range");
      g.g(i, j) = e.at(2).get<double>();
      g.g(j, i) = -g.g(i, j);
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json clique_census(int n, const std::vector<ComplementaritySet>& cliques) {
  Json doc;
  doc["n"] = n;
  auto& list = doc["cliques"] = Json::array();
  for (const auto& c : cliques) {
    Json members = Json::array();
    for (const auto& q : c.members) members.push_back(q.str());
    list.push_back({{"size", c.size()}, {"members", members}, {"maximal", c.maximal}});
  }
  Json counts = Json::object();
  for (auto [size, count] : clique_counts(cliques)) counts[std::to_string(size)] = count;
  doc["counts_by_size"] = counts;
  return doc;
}

Json charge_report(std::size_t state_id, const ChargeReport& report, double tolerance) {
  Json doc;
  doc["state_id"] = state_id;
  doc["charges"] = report.charges;
  doc["total_information"] = report.total_information;
  doc["sum_identity_residual"] = report.sum_identity_residual;
  doc["pure"] = report.pure;
  Json violations = Json::array();
  if (report.pentagon_residuals)
    for (std::size_t a = 0; a < 6; ++a)
      if ((*report.pentagon_residuals)[a] > tolerance)
        violations.push_back({{"pentagon", a + 1}, {"charge", report.charges[a]}});
  for (std::size_t a = 0; a < 6; ++a)
    if (report.charges[a] > 1.0 + tolerance) violations.push_back({{"pentagon", a + 1}, {"charge", report.charges[a]}});
  doc["violations"] = violations;
  return doc;
}

Json to_json(const std::vector<ParityConstraint>& table) {
  Json doc = Json::array();
  for (const auto& t : table)
    doc.push_back({{"a", t.a.str()}, {"b", t.b.str()}, {"c", t.c.str()}, {"parity", std::string(to_string(t.parity))}});
  return doc;
}

Json to_json(const InterrogationRecord& record) {
  Json doc;
  doc["seed"] = record.seed;
  doc["prior"] = to_json(record.prior);
  auto& steps = doc["steps"] = Json::array();
  for (const auto& s : record.steps)
    steps.push_back({{"question", s.question.str()},
                     {"answer", s.answer == Answer::Yes ? "yes" : "no"},
                     {"probability", s.probability},
                     {"posterior", to_json(s.posterior)}});
  return doc;
}

Json to_json(const TomographyEstimate& estimate) {
  Json doc;
  doc["reference"] = to_json(estimate.reference);
  auto& entries = doc["questions"] = Json::array();
  for (const auto& e : estimate.entries)
    entries.push_back({{"question", e.question.str()},
                       {"yes", e.yes},
                       {"total", e.total},
                       {"estimate", e.estimate},
                       {"truth", e.truth}});
  doc["reconstructed_r"] =
      std::vector<double>(estimate.reconstructed_r.data(), estimate.reconstructed_r.data() + estimate.reconstructed_r.size());
  doc["max_abs_error"] = estimate.max_abs_error;
  return doc;
}

std::string convergence_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "samples,max_abs_error\n";
  for (const auto& row : report.rows) out << row.samples << ',' << format_double(row.max_abs_error) << '\n';
  return out.str();
}

}  // namespace qrecon::io

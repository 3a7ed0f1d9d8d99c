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

#include "qrecon/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qrecon/verify.hpp"

namespace qrecon::cli {

namespace {

using Json = io::Json;

struct CampaignConfig {
  std::string command;
  int n = 2;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  std::vector<double> t_grid;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;

  double tolerance(double fallback) const { return tol.value_or(fallback); }

  Json to_json() const {
    Json doc;
    doc["n"] = n;
    doc["seed"] = seed;
    doc["samples"] = samples;
    doc["t_grid"] = t_grid;
    if (tol) doc["tol"] = *tol;
    doc["format"] = format;
    return doc;
  }
};

/// Output of a subcommand: the document to write and the overall verdict.
struct Outcome {
  Json results;
  std::string text;  ///< non-JSON rendering (csv / dot); empty means JSON
  bool pass = true;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const CampaignConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' is not supported by '" + cfg.command + "'");
}

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(0.1 * k);
  return grid;
}

Outcome cmd_cliques(const CampaignConfig& cfg) {
  require_format(cfg, {"json", "csv", "dot"});
  const auto graph = build_graph(cfg.n);
  Outcome outcome;
  if (cfg.format == "dot") {
    outcome.text = export_graph(graph, "dot");
    return outcome;
  }
  const auto cliques = maximal_cliques(graph);
  const auto counts = clique_counts(cliques);
  bool pass = std::all_of(cliques.begin(), cliques.end(), [](const auto& c) { return c.maximal; });
  if (cfg.n == 1) pass = pass && counts == std::map<std::size_t, std::size_t>{{3, 1}};
  if (cfg.n == 2) pass = pass && counts == std::map<std::size_t, std::size_t>{{3, 20}, {5, 6}};
  outcome.pass = pass;
  outcome.results = io::clique_census(cfg.n, cliques);
  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "size,members\n";
    for (const auto& c : cliques) {
      csv << c.size() << ',';
      for (std::size_t i = 0; i < c.members.size(); ++i) csv << (i ? " " : "") << c.members[i].str();
      csv << '\n';
    }
    outcome.text = csv.str();
  }
  return outcome;
}

Outcome cmd_charges(const CampaignConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const double tolerance = cfg.tolerance(tol::kPurity);
  const auto cliques = maximal_cliques(build_graph(cfg.n));
  Outcome outcome;
  std::size_t pentagon_violations = 0, clique_violations = 0;
  double max_pentagon_dev = 0.0, max_sum_residual = 0.0, max_clique_charge = 0.0;
  Json reports = Json::array();
  std::ostringstream csv;
  csv << "state_id,kind,max_clique_charge";
  if (cfg.n == 2) csv << ",pent1,pent2,pent3,pent4,pent5,pent6,sum_identity_residual";
  csv << '\n';
  for (std::uint64_t k = 0; k < 2 * cfg.samples; ++k) {
    const bool pure = k < cfg.samples;
    const auto s = pure ? random_pure(cfg.n, stream_seed(cfg.seed, k)) : random_mixed(cfg.n, stream_seed(cfg.seed, k));
    const auto audit = complementarity_audit(s, cliques, tolerance);
    clique_violations += audit.violations.size();
    max_clique_charge = std::max(max_clique_charge, audit.max_charge);
    csv << k << ',' << (pure ? "pure" : "mixed") << ',' << io::format_double(audit.max_charge);
    if (cfg.n == 2) {
      const auto report = pentagon_report(s);
      max_sum_residual = std::max(max_sum_residual, std::abs(report.sum_identity_residual));
      if (pure)
        for (double c : report.charges) {
          max_pentagon_dev = std::max(max_pentagon_dev, std::abs(c - 1.0));
          pentagon_violations += std::abs(c - 1.0) > tolerance ? 1 : 0;
        }
      if (k < 10) reports.push_back(io::charge_report(k, report, tolerance));
      for (double c : report.charges) csv << ',' << io::format_double(c);
      csv << ',' << io::format_double(report.sum_identity_residual);
    }
    csv << '\n';
  }
  outcome.results["pure_states"] = cfg.samples;
  outcome.results["mixed_states"] = cfg.samples;
  outcome.results["complementarity_violations"] = clique_violations;
  outcome.results["max_clique_charge"] = max_clique_charge;
  if (cfg.n == 2) {
    outcome.results["pentagon_violations"] = pentagon_violations;
    outcome.results["max_pentagon_deviation"] = max_pentagon_dev;
    outcome.results["max_sum_identity_residual"] = max_sum_residual;
    outcome.results["sample_reports"] = reports;
  }
  outcome.pass = clique_violations == 0 && pentagon_violations == 0 && max_sum_residual < tol::kIdentity;
  if (cfg.format == "csv") outcome.text = csv.str();
  return outcome;
}

Outcome cmd_generators(const CampaignConfig& cfg) {
  require_format(cfg, {"json"});
  const double tolerance = cfg.tolerance(tol::kIdentity);
  Outcome outcome;
  std::vector<EvolutionGenerator> set;
  if (cfg.n == 2) {
    const auto& lattice = pentagon_lattice();
    Json pentagons = Json::array();
    for (int a = 1; a <= 6; ++a) {
      Json members = Json::array();
      for (const auto& q : lattice.pentagon(a).members) members.push_back(q.str());
      pentagons.push_back({{"label", a}, {"members", members}});
    }
    outcome.results["pentagons"] = pentagons;
    Json swaps = Json::array();
    for (int a = 1; a <= 6; ++a)
      for (int b = a + 1; b <= 6; ++b) {
        auto g = pentagon_swap_generator(a, b);
        const auto check = check_generator(g, stream_seed(cfg.seed, static_cast<std::uint64_t>(a * 10 + b)), 32, tolerance);
        const auto match = match_up_to_scale(generator_from_hamiltonian(Hamiltonian::pauli(lattice.shared(a, b))), g);
        outcome.pass = outcome.pass && check.passed(tolerance) && match.residual < 1e-10;
        swaps.push_back({{"a", a},
                         {"b", b},
                         {"shared", lattice.shared(a, b).str()},
                         {"generator", io::to_json(g)},
                         {"antisymmetry_residual", check.antisymmetry_residual},
                         {"pattern_residual", check.pattern_residual},
                         {"pentagon_residual", check.pentagon_residual.value_or(0.0)},
                         {"hamiltonian_scale", match.scale},
                         {"hamiltonian_residual", match.residual}});
        set.push_back(std::move(g));
      }
    outcome.results["swaps"] = swaps;
  } else {
    set = local_generators(cfg.n);
    double worst = 0.0;
    for (const auto& g : set) {
      const auto check = check_generator(g, cfg.seed, 32, tolerance);
      worst = std::max({worst, check.antisymmetry_residual, check.pattern_residual});
      outcome.pass = outcome.pass && check.passed(tolerance);
    }
    outcome.results["local_generators"] = set.size();
    outcome.results["max_check_residual"] = worst;
  }
  const auto closure = lie_closure(set);
  const int expected = static_cast<int>(question_count(cfg.n));
  outcome.results["closure_dimension"] = closure.dimension;
  outcome.results["expected_dimension"] = expected;
  outcome.pass = outcome.pass && closure.dimension == expected;
  return outcome;
}

Outcome cmd_evolve(const CampaignConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const auto grid = cfg.t_grid.empty() ? default_t_grid() : cfg.t_grid;
  const auto h = random_hamiltonian(cfg.n, stream_seed(cfg.seed, 0));
  const auto s = random_pure(cfg.n, stream_seed(cfg.seed, 1));
  const auto g = generator_from_hamiltonian(h);
  const double initial = info_measure(s).bits;
  Outcome outcome;
  std::ostringstream csv;
  csv << 't';
  if (cfg.n == 2)
    for (int a = 1; a <= 6; ++a) csv << ",pent" << a;
  csv << ",norm\n";
  Json rows = Json::array();
  double drift = 0.0, equivalence = 0.0, charge_drift = 0.0;
  for (double t : grid) {
    const auto st = evolve_bloch(g, s, t);
    const double norm = info_measure(st).bits;
    drift = std::max(drift, std::abs(norm - initial));
    equivalence = std::max(equivalence, adjoint_equivalence_check(h, s, t));
    Json row{{"t", t}, {"norm", norm}};
    csv << io::format_double(t);
    if (cfg.n == 2) {
      const auto report = pentagon_report(st);
      for (double c : report.charges) {
        charge_drift = std::max(charge_drift, std::abs(c - 1.0));
        csv << ',' << io::format_double(c);
      }
      row["charges"] = report.charges;
    }
    csv << ',' << io::format_double(norm) << '\n';
    rows.push_back(row);
  }
  outcome.results["hamiltonian"] = std::vector<double>(h.coefficients.data(), h.coefficients.data() + h.coefficients.size());
  outcome.results["initial_state"] = io::to_json(s);
  outcome.results["trajectory"] = rows;
  outcome.results["max_information_drift"] = drift;
  outcome.results["max_path_deviation"] = equivalence;
  if (cfg.n == 2) outcome.results["max_pentagon_charge_drift"] = charge_drift;
  outcome.pass = drift < cfg.tolerance(1e-10) && equivalence < 1e-8 && charge_drift < tol::kPurity;
  if (cfg.format == "csv") outcome.text = csv.str();
  return outcome;
}

Outcome cmd_logic(const CampaignConfig& cfg) {
  require_format(cfg, {"json", "dot"});
  const auto table = correlation_table();
  Outcome outcome;
  if (cfg.format == "dot") {
    outcome.text = correlation_table_dot(table);
    return outcome;
  }
  const auto identity = classical_identity_check();
  Json rows = Json::array();
  for (const auto& r : identity.rows) rows.push_back({{"values", r.values}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  const int quantum = hidden_variable_search(table);
  const int classical = hidden_variable_search(all_even(table));
  outcome.results["classical_identity"] = rows;
  outcome.results["identity_holds"] = identity.all_hold();
  outcome.results["correlation_table"] = io::to_json(table);
  outcome.results["hidden_variable_assignments"] = quantum;
  outcome.results["all_even_assignments"] = classical;
  outcome.pass = identity.all_hold() && quantum == 0 && classical > 0;
  return outcome;
}

Outcome cmd_tomography(const CampaignConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  std::vector<std::uint64_t> grid;
  for (std::uint64_t m = 100; m <= cfg.samples; m *= 10) grid.push_back(m);
  if (grid.empty()) grid.push_back(cfg.samples);
  const auto truth = random_pure(cfg.n, stream_seed(cfg.seed, 0));
  const auto report = convergence_report(truth, grid, stream_seed(cfg.seed, 1));
  const auto estimate = multi_shot_tomography(truth, grid.back(), stream_seed(cfg.seed, 2));
  Outcome outcome;
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back({{"samples", row.samples}, {"max_abs_error", row.max_abs_error}});
  outcome.results["convergence"] = rows;
  if (!std::isnan(report.slope)) outcome.results["slope"] = report.slope;
  outcome.results["estimate"] = io::to_json(estimate);
  // Six binomial standard errors 1 / (2 sqrt M).
  const double bound = cfg.tolerance(3.0 / std::sqrt(static_cast<double>(grid.back())));
  outcome.pass = estimate.max_abs_error < bound;
  if (grid.size() >= 3) outcome.pass = outcome.pass && report.slope >= -0.65 && report.slope <= -0.35;
  if (cfg.format == "csv") outcome.text = io::convergence_csv(report);
  return outcome;
}

Outcome cmd_monogamy(const CampaignConfig& cfg) {
  require_format(cfg, {"json"});
  const double tolerance = cfg.tolerance(tol::kIdentity);
  const auto report = monogamy_demo(cfg.seed);
  Outcome outcome;
  Json cross = Json::object();
  for (const auto& c : report.cross_correlations) cross[c.question.str()] = {{"r", c.r}, {"connected", c.connected}};
  outcome.results["state"] = io::to_json(report.state);
  outcome.results["c_state"] = io::to_json(report.c_state);
  outcome.results["cross_correlations"] = cross;
  outcome.results["max_connected_cross_correlation"] = report.max_cross_abs;
  outcome.results["max_one_party_cross_correlation"] = report.max_one_party_abs;
  outcome.results["ab_correlations"] = report.ab_correlations;
  outcome.results["c_charge"] = report.c_charge;
  outcome.results["c_aligned"] = report.c_aligned;
  double ab = 0.0;
  for (double r : report.ab_correlations) ab = std::max(ab, std::abs(std::abs(r) - 1.0));
  outcome.pass = report.max_cross_abs < tolerance && report.max_one_party_abs < tolerance && ab < tolerance;
  return outcome;
}

Outcome cmd_verify_all(const CampaignConfig& cfg, std::ostream& err) {
  require_format(cfg, {"json"});
  const auto results = verify::run_all(cfg.seed);
  Outcome outcome;
  for (const auto& r : results) {
    err << verify::summary_line(r) << '\n';
    outcome.pass = outcome.pass && r.passed;
  }
  outcome.results = verify::to_json(results);
  return outcome;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad --t-grid entry '" + item + "'");
    }
    if (used != item.size() || v < 0.0) throw UsageError("bad --t-grid entry '" + item + "'");
    grid.push_back(v);
  }
  return grid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qrecon: verification campaigns for the informational qubit reconstruction"};
  app.require_subcommand(1, 1);
  CampaignConfig cfg;
  std::string t_grid;
  double tol_value = 0.0;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"cliques", "Maximal complementarity sets (clique census)"},
      {"charges", "Pentagon and complementarity audits over random states"},
      {"generators", "Construct and check evolution generators; Lie closure"},
      {"evolve", "Trajectory with conservation trace"},
      {"logic", "Classical identity, hidden-variable search, correlation table"},
      {"tomography", "Tomography convergence campaign"},
      {"monogamy", "Extremal monogamy demonstration"},
      {"verify-all", "Run the full acceptance suite"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--n", cfg.n, "Qubit count")->check(CLI::Range(1, kMaxQubits));
    sub->add_option("--seed", cfg.seed, "Master RNG seed");
    sub->add_option("--samples", cfg.samples, "Samples / states per campaign")->check(CLI::PositiveNumber);
    sub->add_option("--t-grid", t_grid, "Comma-separated evolution times");
    sub->add_option("--tol", tol_value, "Tolerance override for the command's checks")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--out", cfg.out, "Output path (default stdout)");
    subs.push_back(sub);
  }

  std::vector<const char*> argv{"qrecon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (chosen->count("--tol") > 0) cfg.tol = tol_value;

  Outcome outcome;
  try {
    cfg.t_grid = t_grid.empty() ? std::vector<double>{} : parse_grid(t_grid);
    if (cfg.command == "cliques") outcome = cmd_cliques(cfg);
    else if (cfg.command == "charges") outcome = cmd_charges(cfg);
    else if (cfg.command == "generators") outcome = cmd_generators(cfg);
    else if (cfg.command == "evolve") outcome = cmd_evolve(cfg);
    else if (cfg.command == "logic") outcome = cmd_logic(cfg);
    else if (cfg.command == "tomography") outcome = cmd_tomography(cfg);
    else if (cfg.command == "monogamy") outcome = cmd_monogamy(cfg);
    else outcome = cmd_verify_all(cfg, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::CapExceeded || e.code() == ErrorCode::UnknownFormat ? kUsage : kCheckFailed;
  }

  std::string document = outcome.text;
  if (document.empty()) {
    Json envelope;
    envelope["command"] = cfg.command;
    envelope["config"] = cfg.to_json();
    envelope["results"] = outcome.results;
    envelope["pass"] = outcome.pass;
    document = envelope.dump(2) + "\n";
  }
  if (cfg.out.empty() || cfg.out == "-") {
    out << document;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << cfg.out << '\n';
      return kUsage;
    }
    file << document;
  }
  if (!outcome.pass) err << cfg.command << ": check failed\n";
  return outcome.pass ? kPass : kCheckFailed;
}

}  // namespace qrecon::cli

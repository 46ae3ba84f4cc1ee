#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabwit/cli.hpp"
#include "stabwit/entropic.hpp"
#include "stabwit/nonlinear.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/stabilizer.hpp"

namespace {

using namespace stabwit;

WitnessParams params_from(int n, int m, int k, const std::string& graph_file) {
  WitnessParams params;
  params.n = n;
  params.m = m;
  params.k = k;
  if (!graph_file.empty()) params.graph = load_graph(graph_file);
  return params;
}

StabilizerGroup group_for(const std::string& family, int n, const std::string& graph_file) {
  if (family == "ghz") return ghz_generators(n);
  if (family == "cluster") return cluster_generators(n);
  if (family == "graph") {
    if (graph_file.empty()) throw CLI::ValidationError("--graph is required for graph family");
    return graph_generators(load_graph(graph_file));
  }
  throw CLI::ValidationError("unknown family: " + family);
}

nlohmann::json optimization_to_json(const OptimizationResult& result) {
  nlohmann::json j;
  j["value"] = result.value;
  j["argmax_description"] = result.argmax_description;
  j["restarts_used"] = result.restarts_used;
  j["converged"] = result.converged;
  return j;
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer entanglement witness toolkit"};
  app.require_subcommand(1);

  std::string name, state_spec = "ghz:3", family = "ghz", graph_file, out_dir = "repro";
  int n = 3, m = 2, k = 1, workers = 1;
  double noise = 0.0, alpha = 2.0;
  std::uint64_t seed = 0xC0FFEE;
  bool empirical = false, bits = false;

  CLI::App* witness = app.add_subcommand("witness", "build and evaluate witnesses");
  witness->require_subcommand(1);
  CLI::App* wit_build = witness->add_subcommand("build", "print a witness as JSON");
  wit_build->add_option("--name", name)->required();
  wit_build->add_option("--n", n);
  wit_build->add_option("--m", m);
  wit_build->add_option("--k", k);
  wit_build->add_option("--graph", graph_file);
  CLI::App* wit_eval = witness->add_subcommand("eval", "evaluate a witness on a state");
  wit_eval->add_option("--name", name)->required();
  wit_eval->add_option("--n", n);
  wit_eval->add_option("--m", m);
  wit_eval->add_option("--k", k);
  wit_eval->add_option("--graph", graph_file);
  wit_eval->add_option("--state", state_spec);
  wit_eval->add_option("--noise", noise);
  CLI::App* wit_list = witness->add_subcommand("list", "list witness names");

  CLI::App* oracle = app.add_subcommand("oracle", "numerical verification");
  oracle->require_subcommand(1);
  CLI::App* orc_prod = oracle->add_subcommand("max-product", "maximum over product states");
  orc_prod->add_option("--name", name)->required();
  orc_prod->add_option("--n", n);
  orc_prod->add_option("--m", m);
  orc_prod->add_option("--k", k);
  orc_prod->add_option("--graph", graph_file);
  orc_prod->add_option("--seed", seed);
  CLI::App* orc_bisep = oracle->add_subcommand("max-bisep", "maximum over biseparable states");
  orc_bisep->add_option("--name", name)->required();
  orc_bisep->add_option("--n", n);
  orc_bisep->add_option("--m", m);
  orc_bisep->add_option("--k", k);
  orc_bisep->add_option("--graph", graph_file);
  orc_bisep->add_option("--seed", seed);
  CLI::App* orc_dom = oracle->add_subcommand("dominance", "PSD dominance certificate");
  orc_dom->add_option("--w", name)->required();
  orc_dom->add_option("--n", n);
  orc_dom->add_option("--alpha", alpha);
  CLI::App* orc_noise = oracle->add_subcommand("noise", "noise threshold of a witness");
  orc_noise->add_option("--name", name)->required();
  orc_noise->add_option("--n", n);
  orc_noise->add_option("--m", m);
  orc_noise->add_option("--k", k);
  orc_noise->add_option("--graph", graph_file);
  orc_noise->add_flag("--empirical", empirical);

  CLI::App* lur = app.add_subcommand("lur", "local uncertainty criteria");
  CLI::App* lur_eval = lur->add_subcommand("eval", "evaluate a LUR");
  lur_eval->add_option("--family", family)->check(CLI::IsMember({"ghz", "cluster"}));
  lur_eval->add_option("--n", n);
  lur_eval->add_option("--k", k);
  lur_eval->add_option("--state", state_spec);

  CLI::App* eur = app.add_subcommand("eur", "entropic criteria");
  CLI::App* eur_eval = eur->add_subcommand("eval", "evaluate the entropy criterion");
  eur_eval->add_option("--family", family)->check(CLI::IsMember({"ghz", "cluster"}));
  eur_eval->add_option("--n", n);
  eur_eval->add_option("--state", state_spec);
  eur_eval->add_flag("--bits", bits, "display entropies in bits");

  CLI::App* stab = app.add_subcommand("stabilizer", "inspect stabilizer groups");
  CLI::App* stab_show = stab->add_subcommand("show", "print generators and settings");
  stab_show->add_option("--family", family)->check(CLI::IsMember({"ghz", "cluster", "graph"}));
  stab_show->add_option("--n", n);
  stab_show->add_option("--graph", graph_file);

  CLI::App* repro = app.add_subcommand("reproduce", "regenerate the result tables");
  repro->add_option("--out", out_dir);
  repro->add_option("--seed", seed);
  repro->add_option("--workers", workers);

  CLI11_PARSE(app, argc, argv);

  try {
    if (wit_build->parsed()) {
      print(witness_to_json(build_witness(name, params_from(n, m, k, graph_file))));
    } else if (wit_eval->parsed()) {
      const Witness w = build_witness(name, params_from(n, m, k, graph_file));
      StateSpec spec = parse_state_spec(state_spec);
      if (noise > 0.0) spec.noise_p = noise;
      WitnessReport report = evaluate_witness(w, make_state(spec));
      report.empirical_threshold = noise_threshold_empirical(
          [&w](const DensityMatrix& rho) { return expectation(w.op, rho) < -1e-12; }, w.target);
      print(to_json(report));
    } else if (wit_list->parsed()) {
      print(nlohmann::json(witness_names()));
    } else if (orc_prod->parsed() || orc_bisep->parsed()) {
      const Witness w = build_witness(name, params_from(n, m, k, graph_file));
      OracleOptions options;
      options.seed = seed;
      const OptimizationResult result = orc_prod->parsed()
                                            ? max_over_product_states(w.op, options)
                                            : max_over_biseparable(w.op, options);
      print(optimization_to_json(result));
    } else if (orc_dom->parsed()) {
      WitnessParams params;
      params.n = n;
      const Witness w = build_witness(name, params);
      const StabilizerGroup g = name.rfind("cluster", 0) == 0 ? cluster_generators(n)
                                                              : ghz_generators(n);
      HermitianOperator projector = HermitianOperator::identity(n);
      for (const PauliString& s : g.generators) {
        projector = projector * half_sum_with_identity(HermitianOperator::from_pauli(s));
      }
      const HermitianOperator tilde = HermitianOperator::identity(n, 0.5) - projector;
      const DominanceCertificate cert = check_dominance(w.op, tilde, alpha);
      nlohmann::json j;
      j["witness"] = w.name;
      j["alpha"] = cert.alpha;
      j["min_eigenvalue"] = cert.min_eigenvalue;
      j["holds"] = cert.holds;
      print(j);
    } else if (orc_noise->parsed()) {
      const Witness w = build_witness(name, params_from(n, m, k, graph_file));
      nlohmann::json j;
      j["witness"] = w.name;
      j["analytic"] = noise_threshold_analytic(w);
      if (empirical) {
        j["empirical"] = noise_threshold_empirical(
            [&w](const DensityMatrix& rho) { return expectation(w.op, rho) < -1e-12; }, w.target);
      }
      print(j);
    } else if (lur_eval->parsed()) {
      const DensityMatrix rho = make_state(parse_state_spec(state_spec));
      const LurReport report =
          family == "ghz" ? lur_ghz(rho, rho.n_qubits, k) : lur_cluster(rho, rho.n_qubits, k);
      nlohmann::json j;
      j["linear_part"] = report.linear_part;
      j["correction"] = report.correction;
      j["total"] = report.total;
      j["detected"] = report.detected;
      print(j);
    } else if (eur_eval->parsed()) {
      const DensityMatrix rho = make_state(parse_state_spec(state_spec));
      const EurReport report = family == "ghz" ? eur_criterion_ghz(rho, rho.n_qubits)
                                               : eur_criterion_cluster(rho, rho.n_qubits);
      const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
      nlohmann::json j;
      j["entropies"] = nlohmann::json::array();
      for (double h : report.entropies) j["entropies"].push_back(h * scale);
      j["lhs"] = report.lhs * scale;
      j["bound"] = report.bound * scale;
      j["unit"] = bits ? "bits" : "nats";
      j["detected"] = report.detected;
      print(j);
    } else if (stab_show->parsed()) {
      const StabilizerGroup g = group_for(family, n, graph_file);
      HermitianOperator sum(g.n_qubits);
      nlohmann::json gens = nlohmann::json::array();
      for (const PauliString& s : g.generators) {
        gens.push_back(s.text());
        sum += HermitianOperator::from_pauli(s);
      }
      const SettingPartition partition = partition_into_settings(sum);
      nlohmann::json settings = nlohmann::json::array();
      for (const MeasurementSetting& setting : partition.settings) settings.push_back(setting.letters);
      nlohmann::json j;
      j["generators"] = gens;
      j["settings"] = settings;
      print(j);
    } else if (repro->parsed()) {
      return run_reproduction_suite(out_dir, seed, workers);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include "stabwit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stabwit/entropic.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/stabilizer.hpp"

namespace stabwit {

namespace {

bool is_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* class_name(DetectionClass c) {
  return c == DetectionClass::FullSeparability ? "rules_out_full_separability"
                                               : "genuine_multipartite";
}

}  // namespace

StateSpec parse_state_spec(const std::string& text) {
  static const std::vector<std::string> kinds = {"ghz", "cluster", "graph", "w3", "rho3", "file"};
  StateSpec spec;
  std::stringstream stream(text);
  std::string token;
  bool first = true;
  while (std::getline(stream, token, ':')) {
    if (first) {
      if (std::find(kinds.begin(), kinds.end(), token) == kinds.end()) {
        throw std::invalid_argument("unknown state kind: " + token);
      }
      spec.kind = token;
      first = false;
    } else if (token.rfind("p=", 0) == 0) {
      spec.noise_p = std::stod(token.substr(2));
      if (spec.noise_p < 0.0 || spec.noise_p > 1.0) throw std::invalid_argument("noise out of [0,1]");
    } else if (token.rfind("graph=", 0) == 0) {
      spec.graph_path = token.substr(6);
    } else if (is_integer(token)) {
      spec.n = std::stoi(token);
    } else {
      spec.file_path = token;
    }
  }
  if (first) throw std::invalid_argument("empty state spec");
  return spec;
}

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw std::runtime_error("empty graph file");
  if (text[start] == '{') {
    const nlohmann::json j = nlohmann::json::parse(text);
    Graph g(j.at("n").get<int>());
    for (const auto& edge : j.at("edges")) {
      g.add_edge(edge.at(0).get<int>(), edge.at(1).get<int>());
    }
    g.validate();
    return g;
  }
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n)) throw std::runtime_error("graph file must start with the vertex count");
  Graph g(n);
  int k = 0, l = 0;
  while (in >> k >> l) g.add_edge(k, l);
  g.validate();
  return g;
}

DensityMatrix load_dense_state(const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(read_file(path));
  if (!j.is_array()) throw std::runtime_error("dense state must be a JSON array");
  const long count = static_cast<long>(j.size());
  const long dim = static_cast<long>(std::llround(std::sqrt(static_cast<double>(count))));
  int n = 0;
  while ((1L << n) < dim) ++n;
  if (dim * dim != count || (1L << n) != dim) {
    throw std::runtime_error("dense state length must be 4^N");
  }
  DensityMatrix rho{n, Eigen::MatrixXcd(dim, dim)};
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      const auto& entry = j.at(static_cast<std::size_t>(r * dim + c));
      rho.matrix(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  rho.validate();
  return rho;
}

DensityMatrix make_state(const StateSpec& spec) {
  DensityMatrix rho{0, {}};
  if (spec.kind == "ghz") {
    rho = DensityMatrix::from_pure(make_ghz(spec.n));
  } else if (spec.kind == "cluster") {
    rho = DensityMatrix::from_pure(make_cluster(spec.n));
  } else if (spec.kind == "graph") {
    if (spec.graph_path.empty()) throw std::invalid_argument("graph state needs graph=<file>");
    const Graph g = load_graph(spec.graph_path);
    if (spec.n != 0 && spec.n != g.n_vertices) throw std::invalid_argument("graph size mismatch");
    rho = DensityMatrix::from_pure(make_graph_state(g));
  } else if (spec.kind == "w3") {
    rho = DensityMatrix::from_pure(make_w3());
  } else if (spec.kind == "rho3") {
    rho = make_rho3();
  } else if (spec.kind == "file") {
    if (spec.file_path.empty()) throw std::invalid_argument("file state needs a path");
    rho = load_dense_state(spec.file_path);
  } else {
    throw std::invalid_argument("unknown state kind: " + spec.kind);
  }
  if (spec.noise_p > 0.0) rho = mix_with_white_noise(rho, spec.noise_p);
  return rho;
}

std::vector<std::string> witness_names() {
  return {"ghz_two_term",   "ghz_three_term",    "ghz_genuine_sum", "ghz_genuine_two_settings",
          "ghz_projector",  "mermin_witness3",   "cluster_two_term", "cluster_three_term",
          "cluster_composite", "cluster_genuine", "graph_pair",      "graph_genuine",
          "rho3_witness",   "w3_projector",      "w3_witness",      "w3_two_setting"};
}

Witness build_witness(const std::string& name, const WitnessParams& params) {
  if (name == "ghz_two_term") return ghz_two_term(params.n, params.m);
  if (name == "ghz_three_term") return ghz_three_term(params.n, params.m);
  if (name == "ghz_genuine_sum") return ghz_genuine_sum(params.n);
  if (name == "ghz_genuine_two_settings") return ghz_genuine_two_settings(params.n);
  if (name == "ghz_projector") return ghz_projector(params.n);
  if (name == "mermin_witness3") return mermin_witness3();
  if (name == "cluster_two_term") return cluster_two_term(params.n, params.k);
  if (name == "cluster_three_term") return cluster_three_term(params.n, params.k);
  if (name == "cluster_composite") return cluster_composite(params.n);
  if (name == "cluster_genuine") return cluster_genuine(params.n);
  if (name == "graph_pair" || name == "graph_genuine") {
    const Graph g = params.graph ? *params.graph : Graph::star(params.n);
    return name == "graph_pair" ? graph_pair(g, params.k, params.k == 1 ? 2 : 1)
                                : graph_genuine(g);
  }
  if (name == "rho3_witness") return rho3_witness();
  if (name == "w3_projector") return w3_projector_witness();
  if (name == "w3_witness") return w3_witness();
  if (name == "w3_two_setting") return w3_two_setting_witness();
  throw std::invalid_argument("unknown witness: " + name);
}

WitnessReport evaluate_witness(const Witness& w, const DensityMatrix& rho) {
  WitnessReport report;
  report.witness_name = w.name;
  report.expectation = expectation(w.op, rho);
  report.detected = report.expectation < -1e-12;
  report.detection_class = w.detection_class;
  report.analytic_threshold = w.analytic_noise_threshold;
  report.settings = static_cast<int>(partition_into_settings(w.op).setting_count());
  return report;
}

nlohmann::json to_json(const WitnessReport& report) {
  nlohmann::json j;
  j["witness_name"] = report.witness_name;
  j["expectation"] = report.expectation;
  j["detected"] = report.detected;
  j["detection_class"] = class_name(report.detection_class);
  if (report.analytic_threshold) j["analytic_threshold"] = *report.analytic_threshold;
  if (report.empirical_threshold) j["empirical_threshold"] = *report.empirical_threshold;
  j["settings"] = report.settings;
  if (report.dominance_alpha) {
    j["dominance_alpha"] = *report.dominance_alpha;
    j["dominance_min_eigenvalue"] = *report.dominance_min_eigenvalue;
  }
  return j;
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [letters, coeff] : w.op.terms()) terms[letters] = coeff;
  nlohmann::json j;
  j["name"] = w.name;
  j["n_qubits"] = w.op.n_qubits();
  j["terms"] = terms;
  j["detection_class"] = class_name(w.detection_class);
  if (w.analytic_noise_threshold) j["analytic_threshold"] = *w.analytic_noise_threshold;
  j["claimed_settings"] = w.claimed_settings;
  j["settings"] = partition_into_settings(w.op).setting_count();
  return j;
}

std::string format_sig12(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

bool witness_detects(const Witness& w, const DensityMatrix& rho) {
  return expectation(w.op, rho) < -1e-12;
}

double empirical_threshold(const Witness& w) {
  return noise_threshold_empirical(
      [&w](const DensityMatrix& rho) { return witness_detects(w, rho); }, w.target);
}

struct CsvWriter {
  std::ofstream out;
  bool all_ok = true;

  CsvWriter(const std::filesystem::path& path, const std::string& header) : out(path) {
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << header << "\n";
  }

  void row(const std::vector<std::string>& cells, bool ok) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "," << (ok ? 1 : 0) << "\n";
    all_ok = all_ok && ok;
  }
};

HermitianOperator projector_from_group(const StabilizerGroup& g) {
  HermitianOperator prod = HermitianOperator::identity(g.n_qubits);
  for (const PauliString& s : g.generators) {
    prod = prod * half_sum_with_identity(HermitianOperator::from_pauli(s));
  }
  return prod;
}

}  // namespace

int run_reproduction_suite(const std::string& out_dir, std::uint64_t seed, int workers) {
  (void)workers;  // rows run sequentially in a fixed order for reproducibility
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  OracleOptions options;
  options.seed = seed;
  bool all_ok = true;

  {
    CsvWriter csv(dir / "thresholds.csv", "witness,n,analytic,empirical,ok");
    auto add = [&](const Witness& w, int n) {
      const double analytic = noise_threshold_analytic(w);
      const double empirical = empirical_threshold(w);
      csv.row({w.name, std::to_string(n), format_sig12(analytic), format_sig12(empirical)},
              std::abs(analytic - empirical) <= 1e-3 &&
                  std::abs(analytic - *w.analytic_noise_threshold) <= 1e-12);
    };
    for (const std::string& name : witness_names()) {
      const bool sized = name.rfind("ghz", 0) == 0 || name.rfind("cluster", 0) == 0 ||
                         name.rfind("graph", 0) == 0;
      if (sized && name != "ghz_projector") {
        for (int n = 3; n <= 8; ++n) {
          WitnessParams params;
          params.n = n;
          add(build_witness(name, params), n);
        }
      } else if (name == "ghz_projector") {
        for (int n = 3; n <= 6; ++n) {  // Pauli decomposition guard
          WitnessParams params;
          params.n = n;
          add(build_witness(name, params), n);
        }
      } else {
        add(build_witness(name, {}), 3);
      }
    }
    all_ok = all_ok && csv.all_ok;
  }

  {
    CsvWriter csv(dir / "dominance.csv", "witness,n,alpha,min_eigenvalue,ok");
    for (int n = 3; n <= 8; ++n) {
      const HermitianOperator ghz_tilde =
          HermitianOperator::identity(n, 0.5) - projector_from_group(ghz_generators(n));
      const HermitianOperator cluster_tilde =
          HermitianOperator::identity(n, 0.5) - projector_from_group(cluster_generators(n));
      const std::vector<std::pair<Witness, const HermitianOperator*>> cases = {
          {ghz_genuine_sum(n), &ghz_tilde},
          {ghz_genuine_two_settings(n), &ghz_tilde},
          {cluster_genuine(n), &cluster_tilde}};
      for (const auto& [w, tilde] : cases) {
        const DominanceCertificate cert = check_dominance(w.op, *tilde, 2.0);
        csv.row({w.name, std::to_string(n), "2", format_sig12(cert.min_eigenvalue)}, cert.holds);
      }
    }
    all_ok = all_ok && csv.all_ok;
  }

  {
    CsvWriter csv(dir / "oracle_bounds.csv", "quantity,n,value,expected,ok");
    for (int n = 3; n <= 6; ++n) {
      const StabilizerGroup g = ghz_generators(n);
      HermitianOperator two = HermitianOperator::from_pauli(g.generators[0]);
      two += HermitianOperator::from_pauli(g.generators[1]);
      const double prod_max = max_over_product_states(two, options).value;
      csv.row({"max_product_s1_plus_s2", std::to_string(n), format_sig12(prod_max), "1"},
              std::abs(prod_max - 1.0) <= 1e-4);

      const double overlap =
          max_over_biseparable(projector_from_group(g), options).value;
      csv.row({"max_bisep_ghz_projector", std::to_string(n), format_sig12(overlap), "0.5"},
              std::abs(overlap - 0.5) <= 1e-3);

      const double mermin = max_over_biseparable(mermin_operator(n), options).value;
      csv.row({"max_bisep_mermin", std::to_string(n), format_sig12(mermin), "0.5"},
              std::abs(mermin - 0.5) <= 1e-3);
    }
    const HermitianOperator wprime = w3_two_setting_witness().op;
    const double bisep_min = min_over_biseparable_w3(wprime, options);
    csv.row({"min_bisep_w3_two_setting", "3", format_sig12(bisep_min), "0"},
            std::abs(bisep_min) <= 1e-4);
    const double global_min = min_eigenvalue(wprime);
    const double expected = std::sqrt(5.0) - 3.0;
    csv.row({"min_eig_w3_two_setting", "3", format_sig12(global_min), format_sig12(expected)},
            std::abs(global_min - expected) <= 1e-6);
    all_ok = all_ok && csv.all_ok;
  }

  {
    CsvWriter csv(dir / "entropic.csv", "family,n,threshold,expected,ok");
    const std::vector<std::pair<int, double>> rows = {{3, 0.123}, {4, 0.083}};
    for (const auto& [n, expected] : rows) {
      const PureState ghz = make_ghz(n);
      const double threshold = noise_threshold_empirical(
          [n](const DensityMatrix& rho) { return eur_criterion_ghz(rho, n).detected; }, ghz);
      csv.row({"ghz", std::to_string(n), format_sig12(threshold), format_sig12(expected)},
              std::abs(threshold - expected) <= 5e-3);
    }
    all_ok = all_ok && csv.all_ok;
  }

  {
    CsvWriter csv(dir / "fidelity.csv", "family,n,p,fidelity,fidelity_expected,bound,bound_expected,ok");
    for (int n = 3; n <= 6; ++n) {
      const PureState ghz = make_ghz(n);
      const HermitianOperator bound_op = fidelity_bound_operator(StabilizerFamily::Ghz, n);
      for (int step = 0; step <= 9; ++step) {
        const double p = 0.1 * step;
        const DensityMatrix rho = mix_with_white_noise(ghz, p);
        const double f = fidelity_with_pure(ghz, rho);
        const double f_expected = 1.0 - p * (1.0 - std::pow(2.0, -n));
        const double fprime = expectation(bound_op, rho);
        const double fprime_expected = 1.0 - p * (1.5 - std::pow(2.0, 1 - n));
        const bool ok = std::abs(f - f_expected) <= 1e-10 &&
                        std::abs(fprime - fprime_expected) <= 1e-10 && fprime <= f + 1e-12;
        csv.row({"ghz", std::to_string(n), format_sig12(p), format_sig12(f),
                 format_sig12(f_expected), format_sig12(fprime), format_sig12(fprime_expected)},
                ok);
      }
    }
    all_ok = all_ok && csv.all_ok;
  }

  return all_ok ? 0 : 1;
}

}  // namespace stabwit

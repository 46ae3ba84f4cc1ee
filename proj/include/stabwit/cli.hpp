#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabwit/states.hpp"
#include "stabwit/witnesses.hpp"

#include <json.hpp>

namespace stabwit {

struct StateSpec {
  std::string kind;  // ghz, cluster, graph, w3, rho3, file
  int n = 0;
  double noise_p = 0.0;
  std::string graph_path;
  std::string file_path;
};

/// Grammar: kind[:n][:p=<noise>][:graph=<file>]; a bare non-numeric token is
/// taken as the dense-state file path.
StateSpec parse_state_spec(const std::string& text);

/// Accepts JSON {"n": ..., "edges": [[k,l], ...]} (1-based) or a plain
/// "k l" edge list with a leading vertex count line.
Graph load_graph(const std::string& path);

/// JSON array of [re, im] pairs, row-major; validated as a density matrix.
DensityMatrix load_dense_state(const std::string& path);

DensityMatrix make_state(const StateSpec& spec);

struct WitnessParams {
  int n = 3;
  int m = 2;
  int k = 1;
  std::optional<Graph> graph;
};

std::vector<std::string> witness_names();
Witness build_witness(const std::string& name, const WitnessParams& params);

struct WitnessReport {
  std::string witness_name;
  double expectation = 0.0;
  bool detected = false;
  DetectionClass detection_class = DetectionClass::FullSeparability;
  std::optional<double> analytic_threshold;
  std::optional<double> empirical_threshold;
  int settings = 0;
  std::optional<double> dominance_alpha;
  std::optional<double> dominance_min_eigenvalue;
};

WitnessReport evaluate_witness(const Witness& w, const DensityMatrix& rho);

nlohmann::json to_json(const WitnessReport& report);
nlohmann::json witness_to_json(const Witness& w);

std::string format_sig12(double value);

/// Regenerates thresholds.csv, dominance.csv, oracle_bounds.csv,
/// entropic.csv, fidelity.csv under out_dir. Returns 0 iff every row passed
/// its tolerance. Rows are computed in a fixed order so output is
/// byte-identical for a given seed; `workers` is accepted for interface
/// stability but rows run sequentially.
int run_reproduction_suite(const std::string& out_dir, std::uint64_t seed, int workers);

}  // namespace stabwit

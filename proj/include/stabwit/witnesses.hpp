#pragma once

#include <optional>
#include <string>

#include "stabwit/operators.hpp"
#include "stabwit/states.hpp"

namespace stabwit {

enum class DetectionClass { FullSeparability, GenuineMultipartite };

enum class StabilizerFamily { Ghz, Cluster };

/// An entanglement witness together with the state it targets and the
/// bookkeeping needed to reason about its robustness.
struct Witness {
  std::string name;
  HermitianOperator op;
  DensityMatrix target;
  DetectionClass detection_class = DetectionClass::FullSeparability;
  std::optional<double> analytic_noise_threshold;
  int claimed_settings = 0;
};

// GHZ-family witnesses. m indexes the Z_{m-1}Z_m generator, 2 <= m <= N.
Witness ghz_two_term(int n_qubits, int m = 2);
Witness ghz_three_term(int n_qubits, int m = 2);
Witness ghz_genuine_sum(int n_qubits);
Witness ghz_genuine_two_settings(int n_qubits);
Witness ghz_projector(int n_qubits);

HermitianOperator mermin_operator(int n_qubits);
Witness mermin_witness3();

// Cluster-family witnesses. k indexes a pair of neighbouring generators,
// 1 <= k <= N-1.
Witness cluster_two_term(int n_qubits, int k = 1);
Witness cluster_three_term(int n_qubits, int k = 1);
Witness cluster_composite(int n_qubits);
Witness cluster_genuine(int n_qubits);

// Graph-state witnesses; k,l are 1-based vertices and must be adjacent.
Witness graph_pair(const Graph& graph, int k, int l);
Witness graph_genuine(const Graph& graph);

// Three-qubit mixed-state and W-state witnesses.
Witness rho3_witness();
Witness w3_projector_witness();
Witness w3_witness();
Witness w3_two_setting_witness();

/// Projector witness c*1 - |psi><psi| expanded into Pauli terms.
Witness projector_witness(const PureState& target, double c, const std::string& name);

/// Operator whose expectation lower-bounds the fidelity with the family's
/// target state.
HermitianOperator fidelity_bound_operator(StabilizerFamily family, int n_qubits);

}  // namespace stabwit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabwit/states.hpp"

namespace stabwit {

/// N commuting, independent Pauli generators with phase +-1. Enumeration of
/// all 2^N products is done on demand.
struct StabilizerGroup {
  int n_qubits = 0;
  std::vector<PauliString> generators;

  /// Checks pairwise commutation, +-1 phases, and GF(2) independence
  /// (no nonempty generator subset multiplies to +-identity).
  void validate() const;
};

StabilizerGroup ghz_generators(int n_qubits);
StabilizerGroup cluster_generators(int n_qubits);
StabilizerGroup graph_generators(const Graph& g);

/// The three stabilizing operators of |W3|; each is a sum of three locally
/// measurable Pauli terms with coefficients 1/3, 2/3, 2/3.
std::vector<HermitianOperator> w3_stabilizing_ops();

/// U = (X1 Z2 + X2 Z3 + Z1 X3)/sqrt(3), satisfying U|000> = |W3>.
Eigen::MatrixXcd w3_preparation_unitary();

/// Element k is Prod_l (S_l)^{alpha_kl}, with alpha_kl the l-th binary digit
/// of k (digit 1 most significant, matching the generator order). Element 0
/// is the identity.
std::vector<PauliString> enumerate_group(const StabilizerGroup& g);
PauliString group_element(const StabilizerGroup& g, unsigned long k);

bool verify_stabilizes(const std::vector<HermitianOperator>& ops, const PureState& psi,
                       double tol = 1e-9);
bool verify_stabilizes(const StabilizerGroup& g, const PureState& psi, double tol = 1e-9);

/// If a and b commute locally, returns a pure product state among their
/// common eigenstates; otherwise absent.
std::optional<PureState> common_product_eigenstate(const PauliString& a,
                                                   const PauliString& b);

struct GhzBasisVector {
  std::vector<int> label;  // s_1..s_N; S_k eigenvalue is (-1)^{s_k}
  PureState state;
};

/// The 2^N common eigenvectors of the GHZ generators, ordered by label read
/// as a binary number (s_1 most significant). Label 0...0 is |GHZ_N>.
std::vector<GhzBasisVector> ghz_basis(int n_qubits);

/// One local von Neumann setting: per-qubit observable over {X,Y,Z} with '.'
/// marking a free (unconstrained) qubit.
struct MeasurementSetting {
  std::string letters;

  bool compatible(const std::string& term) const;
  void absorb(const std::string& term);
};

struct SettingPartition {
  std::vector<MeasurementSetting> settings;
  std::vector<std::string> terms;   // greedy order: weight desc, then lexicographic
  std::vector<int> assignment;      // terms[i] measured by settings[assignment[i]]

  int setting_count() const { return static_cast<int>(settings.size()); }
};

/// Greedy-minimal partition of the operator's Pauli terms into locally
/// compatible groups. Terms are sorted by descending weight then
/// lexicographically, and each is placed into the first compatible setting.
SettingPartition partition_into_settings(const HermitianOperator& op);

struct SubgroupResult {
  std::size_t size = 0;
  std::vector<int> generator_indices;  // 0-based into g.generators
};

/// Exhaustive search over generator subsets for a maximum-size subgroup whose
/// elements pairwise commute locally (measurable in one setting).
SubgroupResult max_one_setting_subgroup(const StabilizerGroup& g);

}  // namespace stabwit

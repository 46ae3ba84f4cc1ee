#pragma once

#include <vector>

#include "stabwit/operators.hpp"

namespace stabwit {

struct PureState {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  /// Throws unless the amplitude vector has length 2^N and unit norm.
  void validate(double tol = 1e-12) const;
};

struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;

  static DensityMatrix from_pure(const PureState& psi);

  /// Hermitian within 1e-12, unit trace within 1e-12, min eigenvalue >= -1e-10.
  void validate(double hermitian_tol = 1e-12, double trace_tol = 1e-12,
                double psd_tol = 1e-10) const;
};

/// Simple undirected graph over 1-based vertices, stored as a 0/1 adjacency
/// matrix with zero diagonal.
struct Graph {
  int n_vertices = 0;
  Eigen::MatrixXi adjacency;

  explicit Graph(int n);

  void add_edge(int k, int l);  // 1-based vertices
  bool has_edge(int k, int l) const;

  static Graph path(int n);
  static Graph star(int n);  // vertex 1 is the center
  static Graph empty(int n);

  void validate() const;
};

PureState make_ghz(int n_qubits);
PureState make_cluster(int n_qubits);
PureState make_graph_state(const Graph& g);
PureState make_w3();
/// Equal mixture of (|00>+|11>)/sqrt2 (x) |0> and (|00>-|11>)/sqrt2 (x) |1>.
DensityMatrix make_rho3();

DensityMatrix mix_with_white_noise(const PureState& psi, double p);
DensityMatrix mix_with_white_noise(const DensityMatrix& rho, double p);

double expectation(const HermitianOperator& op, const DensityMatrix& rho);
double expectation(const HermitianOperator& op, const PureState& psi);
double expectation(const PauliString& p, const PureState& psi, double* imag_out = nullptr);

/// <op> on the product state (x)_k |psi_k>, evaluated from per-site means.
double expectation_product(const HermitianOperator& op,
                           const std::vector<Eigen::Vector2cd>& qubit_states);

double fidelity_with_pure(const PureState& psi, const DensityMatrix& rho);

}  // namespace stabwit

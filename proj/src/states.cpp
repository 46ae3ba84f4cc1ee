#include "stabwit/states.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "stabwit/stabilizer.hpp"

namespace stabwit {

namespace {

constexpr double kImagTol = 1e-10;

long check_dim(int n_qubits, long size) {
  if (n_qubits < 1 || n_qubits > max_qubits()) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n_qubits));
  }
  const long dim = 1L << n_qubits;
  if (size != dim) throw std::invalid_argument("state dimension is not 2^N");
  return dim;
}

/// Extracts the stabilized state from a rank-1 projector Pi_k (S_k + 1)/2.
PureState state_from_projector(const std::vector<PauliString>& generators) {
  const int n = generators.front().n_qubits();
  const long dim = 1L << n;
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (const PauliString& s : generators) {
    proj = proj * ((to_dense(s) + Eigen::MatrixXcd::Identity(dim, dim)) / 2.0);
  }
  if (std::abs(proj.trace().real() - 1.0) > 1e-9 || std::abs(proj.trace().imag()) > 1e-9) {
    throw std::runtime_error("stabilizer projector does not have rank 1");
  }
  // proj = |g><g|: any column with nonzero norm is proportional to |g>.
  Eigen::Index best = 0;
  double best_norm = 0.0;
  for (Eigen::Index c = 0; c < dim; ++c) {
    const double nrm = proj.col(c).norm();
    if (nrm > best_norm) {
      best_norm = nrm;
      best = c;
    }
  }
  PureState psi{n, proj.col(best) / best_norm};
  psi.validate(1e-9);
  psi.amplitudes.normalize();
  return psi;
}

}  // namespace

void PureState::validate(double tol) const {
  check_dim(n_qubits, amplitudes.size());
  if (std::abs(amplitudes.norm() - 1.0) > tol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  psi.validate(1e-9);
  return DensityMatrix{psi.n_qubits, psi.amplitudes * psi.amplitudes.adjoint()};
}

void DensityMatrix::validate(double hermitian_tol, double trace_tol, double psd_tol) const {
  check_dim(n_qubits, matrix.rows());
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("density matrix not square");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > hermitian_tol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(matrix.trace() - Complex(1.0, 0.0)) > trace_tol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -psd_tol) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

Graph::Graph(int n) : n_vertices(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adjacency = Eigen::MatrixXi::Zero(n, n);
}

void Graph::add_edge(int k, int l) {
  if (k < 1 || k > n_vertices || l < 1 || l > n_vertices || k == l) {
    throw std::invalid_argument("invalid edge (" + std::to_string(k) + "," +
                                std::to_string(l) + ")");
  }
  adjacency(k - 1, l - 1) = 1;
  adjacency(l - 1, k - 1) = 1;
}

bool Graph::has_edge(int k, int l) const {
  return adjacency(k - 1, l - 1) != 0;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int k = 1; k < n; ++k) g.add_edge(k, k + 1);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int k = 2; k <= n; ++k) g.add_edge(1, k);
  return g;
}

Graph Graph::empty(int n) { return Graph(n); }

void Graph::validate() const {
  if (adjacency.rows() != n_vertices || adjacency.cols() != n_vertices) {
    throw std::invalid_argument("adjacency matrix size mismatch");
  }
  for (int i = 0; i < n_vertices; ++i) {
    if (adjacency(i, i) != 0) throw std::invalid_argument("adjacency diagonal must be zero");
    for (int j = 0; j < n_vertices; ++j) {
      if (adjacency(i, j) != adjacency(j, i)) {
        throw std::invalid_argument("adjacency matrix must be symmetric");
      }
      if (adjacency(i, j) != 0 && adjacency(i, j) != 1) {
        throw std::invalid_argument("adjacency entries must be 0 or 1");
      }
    }
  }
}

PureState make_ghz(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("GHZ state needs at least 2 qubits");
  const long dim = check_dim(n_qubits, 1L << n_qubits);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
  amps(0) = amps(dim - 1) = 1.0 / std::sqrt(2.0);
  return PureState{n_qubits, amps};
}

PureState make_cluster(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("cluster state needs at least 2 qubits");
  return state_from_projector(cluster_generators(n_qubits).generators);
}

PureState make_graph_state(const Graph& g) {
  g.validate();
  return state_from_projector(graph_generators(g).generators);
}

PureState make_w3() {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(8);
  const double a = 1.0 / std::sqrt(3.0);
  amps(0b100) = amps(0b010) = amps(0b001) = a;
  return PureState{3, amps};
}

DensityMatrix make_rho3() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd xi_plus = Eigen::VectorXcd::Zero(8);
  xi_plus(0b000) = xi_plus(0b110) = s;
  Eigen::VectorXcd xi_minus = Eigen::VectorXcd::Zero(8);
  xi_minus(0b001) = s;
  xi_minus(0b111) = -s;
  DensityMatrix rho{3, 0.5 * (xi_plus * xi_plus.adjoint() + xi_minus * xi_minus.adjoint())};
  rho.validate();
  return rho;
}

DensityMatrix mix_with_white_noise(const PureState& psi, double p) {
  return mix_with_white_noise(DensityMatrix::from_pure(psi), p);
}

DensityMatrix mix_with_white_noise(const DensityMatrix& rho, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("noise ratio must be in [0,1]");
  const long dim = 1L << rho.n_qubits;
  Eigen::MatrixXcd mixed =
      p / static_cast<double>(dim) * Eigen::MatrixXcd::Identity(dim, dim) +
      (1.0 - p) * rho.matrix;
  return DensityMatrix{rho.n_qubits, mixed};
}

double expectation(const HermitianOperator& op, const DensityMatrix& rho) {
  if (op.n_qubits() != rho.n_qubits) throw std::invalid_argument("operator/state size mismatch");
  const long dim = 1L << op.n_qubits();
  Complex total = 0.0;
  for (const auto& [letters, coeff] : op.terms()) {
    const PauliString p = PauliString::parse(letters);
    Complex tr = 0.0;
    for (long col = 0; col < dim; ++col) {
      auto [row, val] = p.act_on_basis(col);
      tr += val * rho.matrix(col, row);
    }
    total += coeff * tr;
  }
  if (std::abs(total.imag()) > kImagTol) {
    throw std::runtime_error("expectation value has a non-negligible imaginary part");
  }
  return total.real();
}

double expectation(const HermitianOperator& op, const PureState& psi) {
  if (op.n_qubits() != psi.n_qubits) throw std::invalid_argument("operator/state size mismatch");
  Complex total = 0.0;
  for (const auto& [letters, coeff] : op.terms()) {
    const PauliString p = PauliString::parse(letters);
    double imag = 0.0;
    const double re = expectation(p, psi, &imag);
    total += coeff * Complex(re, imag);
  }
  if (std::abs(total.imag()) > kImagTol) {
    throw std::runtime_error("expectation value has a non-negligible imaginary part");
  }
  return total.real();
}

double expectation(const PauliString& p, const PureState& psi, double* imag_out) {
  const long dim = psi.amplitudes.size();
  Complex acc = 0.0;
  for (long col = 0; col < dim; ++col) {
    if (psi.amplitudes(col) == Complex(0.0, 0.0)) continue;
    auto [row, val] = p.act_on_basis(col);
    acc += std::conj(psi.amplitudes(row)) * val * psi.amplitudes(col);
  }
  if (imag_out) *imag_out = acc.imag();
  return acc.real();
}

double expectation_product(const HermitianOperator& op,
                           const std::vector<Eigen::Vector2cd>& qubit_states) {
  if (static_cast<int>(qubit_states.size()) != op.n_qubits()) {
    throw std::invalid_argument("operator/state size mismatch");
  }
  // Per-site means <I>,<X>,<Y>,<Z>, all real for normalized qubit states.
  std::vector<std::array<double, 4>> means(qubit_states.size());
  for (std::size_t k = 0; k < qubit_states.size(); ++k) {
    const Eigen::Vector2cd& v = qubit_states[k];
    const Complex z = std::conj(v(0)) * v(1);
    means[k] = {v.squaredNorm(), 2.0 * z.real(), 2.0 * z.imag(),
                std::norm(v(0)) - std::norm(v(1))};
  }
  double total = 0.0;
  for (const auto& [letters, coeff] : op.terms()) {
    double prod = coeff;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      prod *= means[k][static_cast<int>(pauli_from_char(letters[k]))];
    }
    total += prod;
  }
  return total;
}

double fidelity_with_pure(const PureState& psi, const DensityMatrix& rho) {
  if (psi.n_qubits != rho.n_qubits) throw std::invalid_argument("state size mismatch");
  const Complex f = psi.amplitudes.adjoint() * rho.matrix * psi.amplitudes;
  return f.real();
}

}  // namespace stabwit

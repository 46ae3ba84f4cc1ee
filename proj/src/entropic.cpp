#include "stabwit/entropic.hpp"

#include <cmath>
#include <stdexcept>

#include "stabwit/stabilizer.hpp"

namespace stabwit {

namespace {

constexpr double kClusterTol = 1e-8;

struct Spectrum {
  std::vector<double> eigenvalues;              // distinct, ascending
  std::vector<Eigen::MatrixXcd> projectors;     // one per distinct eigenvalue
};

Spectrum spectral_decomposition(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.to_dense());
  const Eigen::VectorXd values = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();
  Spectrum spec;
  long start = 0;
  while (start < values.size()) {
    long stop = start + 1;
    while (stop < values.size() && values(stop) - values(start) < kClusterTol) ++stop;
    const Eigen::MatrixXcd block = vectors.middleCols(start, stop - start);
    spec.eigenvalues.push_back(values.segment(start, stop - start).mean());
    spec.projectors.push_back(block * block.adjoint());
    start = stop;
  }
  return spec;
}

EurReport eur_from_generators(const StabilizerGroup& g, const DensityMatrix& rho) {
  EurReport report;
  report.bound = std::log(2.0);
  for (const PauliString& s : g.generators) {
    const double h = shannon_entropy(outcome_distribution(HermitianOperator::from_pauli(s), rho));
    report.entropies.push_back(h);
    report.lhs += h;
  }
  report.detected = report.lhs < report.bound - 1e-12;
  return report;
}

}  // namespace

OutcomeDistribution outcome_distribution(const HermitianOperator& op, const DensityMatrix& rho) {
  if (op.n_qubits() != rho.n_qubits) throw std::invalid_argument("operator/state size mismatch");
  const Spectrum spec = spectral_decomposition(op);
  OutcomeDistribution dist;
  dist.eigenvalues = spec.eigenvalues;
  double total = 0.0;
  for (const Eigen::MatrixXcd& p : spec.projectors) {
    const double prob = std::max(0.0, (p * rho.matrix).trace().real());
    dist.probabilities.push_back(prob);
    total += prob;
  }
  if (std::abs(total - 1.0) > 1e-10) throw std::runtime_error("probabilities do not sum to 1");
  return dist;
}

double shannon_entropy(const OutcomeDistribution& d) {
  double h = 0.0;
  for (double p : d.probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double eur_bound(const HermitianOperator& m, const HermitianOperator& n) {
  const Spectrum sm = spectral_decomposition(m);
  const Spectrum sn = spectral_decomposition(n);
  double max_norm = 0.0;
  for (const Eigen::MatrixXcd& p : sm.projectors) {
    for (const Eigen::MatrixXcd& q : sn.projectors) {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p * q);
      max_norm = std::max(max_norm, svd.singularValues()(0));
    }
  }
  // Maassen-Uffink with degeneracies: the overlap that enters is
  // ||P Q P|| = ||P Q||^2, which reproduces ln 2 for mutually unbiased
  // single-qubit observables.
  return -2.0 * std::log(max_norm);
}

EurReport eur_criterion_ghz(const DensityMatrix& rho, int n_qubits) {
  return eur_from_generators(ghz_generators(n_qubits), rho);
}

EurReport eur_criterion_cluster(const DensityMatrix& rho, int n_qubits) {
  return eur_from_generators(cluster_generators(n_qubits), rho);
}

}  // namespace stabwit

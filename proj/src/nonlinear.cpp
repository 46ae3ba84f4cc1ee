#include "stabwit/nonlinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabwit {

namespace {

/// Pauli string with `letter` on 1-based qubits [first, last] and I elsewhere.
PauliString range_string(int n_qubits, int first, int last, Pauli letter) {
  std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  for (int q = first; q <= last; ++q) letters[static_cast<std::size_t>(q - 1)] = letter;
  return PauliString(letters);
}

double mean(const PauliString& p, double sign, const DensityMatrix& rho) {
  return sign * expectation(HermitianOperator::from_pauli(p), rho);
}

LurReport finish(double linear, double correction) {
  LurReport report;
  report.linear_part = linear;
  report.correction = correction;
  report.total = linear - correction;
  report.detected = report.total < -1e-12;
  return report;
}

}  // namespace

double variance(const HermitianOperator& op, const DensityMatrix& rho) {
  const double m2 = expectation(op * op, rho);
  const double m1 = expectation(op, rho);
  return std::max(0.0, m2 - m1 * m1);
}

LurReport lur_ghz(const DensityMatrix& rho, int n_qubits, int k) {
  if (k < 1 || k >= n_qubits) throw std::invalid_argument("k out of range");
  if (rho.n_qubits != n_qubits) throw std::invalid_argument("state size mismatch");
  const double a1 = mean(range_string(n_qubits, 1, k, Pauli::X), 1.0, rho);
  const double b1 = mean(range_string(n_qubits, k + 1, n_qubits, Pauli::X), -1.0, rho);
  const double a2 = mean(range_string(n_qubits, k, k, Pauli::Z), 1.0, rho);
  const double b2 = mean(range_string(n_qubits, k + 1, k + 1, Pauli::Z), -1.0, rho);
  const double s1 = mean(range_string(n_qubits, 1, n_qubits, Pauli::X), 1.0, rho);
  HermitianOperator zz(n_qubits);
  {
    std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
    letters[static_cast<std::size_t>(k - 1)] = Pauli::Z;
    letters[static_cast<std::size_t>(k)] = Pauli::Z;
    zz.add(PauliString(letters));
  }
  const double sm = expectation(zz, rho);
  const double linear = 1.0 - s1 - sm;
  const double correction = 0.5 * ((a1 + b1) * (a1 + b1) + (a2 + b2) * (a2 + b2));
  return finish(linear, correction);
}

LurReport lur_ghz_three(const DensityMatrix& rho, int n_qubits, int m) {
  if (m < 2 || m > n_qubits) throw std::invalid_argument("m out of range");
  if (rho.n_qubits != n_qubits) throw std::invalid_argument("state size mismatch");
  const int k = m - 1;  // cut between the Z pair
  const double a1 = mean(range_string(n_qubits, 1, k, Pauli::X), 1.0, rho);
  const double b1 = mean(range_string(n_qubits, k + 1, n_qubits, Pauli::X), -1.0, rho);
  const double a2 = mean(range_string(n_qubits, k, k, Pauli::Z), 1.0, rho);
  const double b2 = mean(range_string(n_qubits, k + 1, k + 1, Pauli::Z), -1.0, rho);
  std::vector<Pauli> a3_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  for (int q = 1; q < k; ++q) a3_letters[static_cast<std::size_t>(q - 1)] = Pauli::X;
  a3_letters[static_cast<std::size_t>(k - 1)] = Pauli::Y;
  std::vector<Pauli> b3_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  b3_letters[static_cast<std::size_t>(k)] = Pauli::Y;
  for (int q = k + 2; q <= n_qubits; ++q) b3_letters[static_cast<std::size_t>(q - 1)] = Pauli::X;
  const double a3 = mean(PauliString(a3_letters), 1.0, rho);
  const double b3 = mean(PauliString(b3_letters), 1.0, rho);

  const PauliString s1_string = range_string(n_qubits, 1, n_qubits, Pauli::X);
  std::vector<Pauli> zz_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  zz_letters[static_cast<std::size_t>(m - 2)] = Pauli::Z;
  zz_letters[static_cast<std::size_t>(m - 1)] = Pauli::Z;
  const PauliString sm_string(zz_letters);
  const double s1 = mean(s1_string, 1.0, rho);
  const double sm = mean(sm_string, 1.0, rho);
  const double s1sm = expectation(HermitianOperator::from_pauli(s1_string * sm_string), rho);

  const double linear = 1.0 - s1 - sm - s1sm;
  const double correction = 0.5 * ((a1 + b1) * (a1 + b1) + (a2 + b2) * (a2 + b2) +
                                   (a3 + b3) * (a3 + b3));
  return finish(linear, correction);
}

LurReport lur_cluster(const DensityMatrix& rho, int n_qubits, int k) {
  if (k < 1 || k >= n_qubits) throw std::invalid_argument("k out of range");
  if (rho.n_qubits != n_qubits) throw std::invalid_argument("state size mismatch");
  auto single = [&](int qubit, Pauli letter, std::vector<Pauli>& letters) {
    if (qubit >= 1 && qubit <= n_qubits) letters[static_cast<std::size_t>(qubit - 1)] = letter;
  };
  std::vector<Pauli> a1_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  single(k - 1, Pauli::Z, a1_letters);
  single(k, Pauli::X, a1_letters);
  std::vector<Pauli> b1_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  single(k + 1, Pauli::Z, b1_letters);
  std::vector<Pauli> a2_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  single(k, Pauli::Z, a2_letters);
  std::vector<Pauli> b2_letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  single(k + 1, Pauli::X, b2_letters);
  single(k + 2, Pauli::Z, b2_letters);
  const double a1 = mean(PauliString(a1_letters), 1.0, rho);
  const double b1 = mean(PauliString(b1_letters), -1.0, rho);
  const double a2 = mean(PauliString(a2_letters), 1.0, rho);
  const double b2 = mean(PauliString(b2_letters), -1.0, rho);
  const double sk = expectation(
      HermitianOperator::from_pauli(PauliString(a1_letters) * PauliString(b1_letters)), rho);
  const double sk1 = expectation(
      HermitianOperator::from_pauli(PauliString(a2_letters) * PauliString(b2_letters)), rho);
  const double linear = 1.0 - sk - sk1;
  const double correction = 0.5 * ((a1 + b1) * (a1 + b1) + (a2 + b2) * (a2 + b2));
  return finish(linear, correction);
}

double anticommuting_mean_bound(const std::vector<HermitianOperator>& ops,
                                const DensityMatrix& rho) {
  std::vector<Eigen::MatrixXcd> dense;
  dense.reserve(ops.size());
  for (const HermitianOperator& op : ops) dense.push_back(op.to_dense());
  const long dim = dense.empty() ? 0 : dense[0].rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if ((dense[i] * dense[i] - eye).norm() >= 1e-10) {
      throw std::invalid_argument("observable is not an involution");
    }
    for (std::size_t j = i + 1; j < dense.size(); ++j) {
      if ((dense[i] * dense[j] + dense[j] * dense[i]).norm() >= 1e-10) {
        throw std::invalid_argument("observables do not anticommute");
      }
    }
  }
  double sum = 0.0;
  for (const HermitianOperator& op : ops) {
    const double m = expectation(op, rho);
    sum += m * m;
  }
  return sum;
}

}  // namespace stabwit

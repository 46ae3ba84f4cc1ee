#pragma once

#include <map>
#include <string>

#include "stabwit/pauli.hpp"

namespace stabwit {

/// A real-weighted sum of unphased Pauli letter-sequences. Phases of the
/// contributing strings are folded into the coefficients, so the dense
/// rendering is Hermitian by construction. Zero-coefficient terms are pruned.
class HermitianOperator {
 public:
  explicit HermitianOperator(int n_qubits);

  static HermitianOperator identity(int n_qubits, double coeff = 1.0);
  static HermitianOperator from_pauli(const PauliString& p, double coeff = 1.0);

  int n_qubits() const { return n_qubits_; }
  const std::map<std::string, double>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds coeff * p. The phase of p must be +1 or -1; +-i strings are
  /// multiplication intermediates and may never be stored.
  void add(const PauliString& p, double coeff = 1.0);
  void add_term(const std::string& letters, double coeff);

  double coefficient(const std::string& letters) const;
  /// Coefficient of the identity term, i.e. Tr(op) / 2^N.
  double normalized_trace() const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double scalar);

  friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) {
    a += b;
    return a;
  }
  friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) {
    a -= b;
    return a;
  }
  friend HermitianOperator operator*(HermitianOperator a, double s) {
    a *= s;
    return a;
  }
  friend HermitianOperator operator*(double s, HermitianOperator a) {
    a *= s;
    return a;
  }

  /// Symbolic operator product. Anti-Hermitian cross terms must cancel; a
  /// residual imaginary coefficient above tolerance is a contract violation.
  friend HermitianOperator operator*(const HermitianOperator& a, const HermitianOperator& b);

  Eigen::MatrixXcd to_dense() const;

 private:
  void prune(const std::string& key);

  int n_qubits_;
  std::map<std::string, double> terms_;
};

/// (op + 1) / 2, the projector onto the +1 eigenspace when op^2 = 1.
HermitianOperator half_sum_with_identity(const HermitianOperator& op);

}  // namespace stabwit

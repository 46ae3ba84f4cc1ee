#include "stabwit/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace stabwit {

namespace {
constexpr double kZeroCoeff = 0.0;
constexpr double kImagTol = 1e-12;
}  // namespace

HermitianOperator::HermitianOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("operator needs at least one qubit");
}

HermitianOperator HermitianOperator::identity(int n_qubits, double coeff) {
  HermitianOperator op(n_qubits);
  op.add_term(std::string(static_cast<std::size_t>(n_qubits), 'I'), coeff);
  return op;
}

HermitianOperator HermitianOperator::from_pauli(const PauliString& p, double coeff) {
  HermitianOperator op(p.n_qubits());
  op.add(p, coeff);
  return op;
}

void HermitianOperator::add(const PauliString& p, double coeff) {
  if (p.n_qubits() != n_qubits_) throw std::invalid_argument("operator size mismatch");
  if (!p.is_hermitian()) {
    throw std::invalid_argument("cannot store anti-Hermitian Pauli string " + p.text());
  }
  const double sign = p.phase_power() == 0 ? 1.0 : -1.0;
  add_term(p.letters_text(), sign * coeff);
}

void HermitianOperator::add_term(const std::string& letters, double coeff) {
  if (static_cast<int>(letters.size()) != n_qubits_) {
    throw std::invalid_argument("term length mismatch: '" + letters + "'");
  }
  if (!std::isfinite(coeff)) throw std::invalid_argument("non-finite coefficient");
  for (char c : letters) pauli_from_char(c);
  terms_[letters] += coeff;
  prune(letters);
}

double HermitianOperator::coefficient(const std::string& letters) const {
  auto it = terms_.find(letters);
  return it == terms_.end() ? kZeroCoeff : it->second;
}

double HermitianOperator::normalized_trace() const {
  return coefficient(std::string(static_cast<std::size_t>(n_qubits_), 'I'));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("operator size mismatch");
  for (const auto& [letters, coeff] : other.terms_) {
    terms_[letters] += coeff;
    prune(letters);
  }
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("operator size mismatch");
  for (const auto& [letters, coeff] : other.terms_) {
    terms_[letters] -= coeff;
    prune(letters);
  }
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double scalar) {
  if (scalar == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [letters, coeff] : terms_) coeff *= scalar;
  return *this;
}

HermitianOperator operator*(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) throw std::invalid_argument("operator size mismatch");
  std::map<std::string, Complex> acc;
  for (const auto& [la, ca] : a.terms_) {
    const PauliString pa = PauliString::parse(la);
    for (const auto& [lb, cb] : b.terms_) {
      const PauliString pb = PauliString::parse(lb);
      const PauliString prod = pa * pb;
      acc[prod.letters_text()] += ca * cb * prod.phase();
    }
  }
  HermitianOperator out(a.n_qubits_);
  double max_imag = 0.0;
  for (const auto& [letters, coeff] : acc) {
    max_imag = std::max(max_imag, std::abs(coeff.imag()));
    if (coeff.real() != 0.0) out.add_term(letters, coeff.real());
  }
  if (max_imag > kImagTol) {
    throw std::runtime_error("operator product is not Hermitian (imaginary residue " +
                             std::to_string(max_imag) + ")");
  }
  return out;
}

Eigen::MatrixXcd HermitianOperator::to_dense() const {
  if (n_qubits_ > max_qubits()) {
    throw std::invalid_argument("dense rendering limited to " +
                                std::to_string(max_qubits()) + " qubits");
  }
  const long dim = 1L << n_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [letters, coeff] : terms_) {
    const PauliString p = PauliString::parse(letters);
    for (long col = 0; col < dim; ++col) {
      auto [row, val] = p.act_on_basis(col);
      m(row, col) += coeff * val;
    }
  }
  return m;
}

void HermitianOperator::prune(const std::string& key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0.0) terms_.erase(it);
}

HermitianOperator half_sum_with_identity(const HermitianOperator& op) {
  HermitianOperator out = op;
  out += HermitianOperator::identity(op.n_qubits());
  out *= 0.5;
  return out;
}

}  // namespace stabwit

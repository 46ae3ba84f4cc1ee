#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace stabwit {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Maximum qubit count for dense renderings. Reads STABWIT_MAX_QUBITS,
/// defaults to 12.
int max_qubits();

/// A phase times a tensor product of single-qubit Pauli operators.
///
/// The phase is i^phase_power with phase_power in Z4, so it is always one of
/// the exact units {+1, +i, -1, -i}. Site 0 corresponds to qubit 1 and is the
/// most significant tensor factor; this fixes the computational-basis index
/// convention for all dense renderings.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> letters, int phase_power = 0);

  static PauliString identity(int n_qubits);
  /// Single-qubit operator p at 0-based `site`, identity elsewhere.
  static PauliString single(int n_qubits, int site, Pauli p);
  /// Parses the text form: optional sign ("-", "+", "i", "-i", "+i")
  /// followed by letters, e.g. "-YXY", "XXIZ".
  static PauliString parse(const std::string& text);

  int n_qubits() const { return static_cast<int>(letters_.size()); }
  Pauli letter(int site) const { return letters_[static_cast<std::size_t>(site)]; }
  const std::vector<Pauli>& letters() const { return letters_; }
  /// Letters as a string over {I,X,Y,Z}, without the phase.
  std::string letters_text() const;

  int phase_power() const { return phase_power_; }
  Complex phase() const;
  bool is_hermitian() const { return phase_power_ % 2 == 0; }
  bool is_identity_letters() const;
  int weight() const;

  std::string text() const;

  PauliString operator-() const;
  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;

  /// Action on a computational basis column index: returns the row index r
  /// and value v such that P|col> = v|r>.
  std::pair<long, Complex> act_on_basis(long col) const;

 private:
  std::vector<Pauli> letters_;
  int phase_power_;  // phase = i^phase_power_, in {0,1,2,3}
};

/// Global commutation: true iff the number of sites with distinct
/// non-identity letters is even.
bool commutes(const PauliString& a, const PauliString& b);

/// Local commutation: true iff at every site the single-qubit letters
/// commute (equal, or at least one is the identity).
bool commutes_locally(const PauliString& a, const PauliString& b);

Eigen::MatrixXcd to_dense(const PauliString& p);

}  // namespace stabwit

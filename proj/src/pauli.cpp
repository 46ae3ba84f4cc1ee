#include "stabwit/pauli.hpp"

#include <cstdlib>
#include <stdexcept>

namespace stabwit {

namespace {

struct MulEntry {
  Pauli letter;
  int ph;  // phase contribution, power of i
};

// Row index = left factor, column = right factor.
constexpr MulEntry kMul[4][4] = {
    {{Pauli::I, 0}, {Pauli::X, 0}, {Pauli::Y, 0}, {Pauli::Z, 0}},
    {{Pauli::X, 0}, {Pauli::I, 0}, {Pauli::Z, 1}, {Pauli::Y, 3}},
    {{Pauli::Y, 0}, {Pauli::Z, 3}, {Pauli::I, 0}, {Pauli::X, 1}},
    {{Pauli::Z, 0}, {Pauli::Y, 1}, {Pauli::X, 3}, {Pauli::I, 0}},
};

constexpr Complex kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("PauliString size mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

int max_qubits() {
  if (const char* env = std::getenv("STABWIT_MAX_QUBITS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

PauliString::PauliString(std::vector<Pauli> letters, int phase_power)
    : letters_(std::move(letters)), phase_power_(((phase_power % 4) + 4) % 4) {
  if (letters_.empty()) throw std::invalid_argument("PauliString needs at least one qubit");
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n_qubits), Pauli::I));
}

PauliString PauliString::single(int n_qubits, int site, Pauli p) {
  if (site < 0 || site >= n_qubits) throw std::invalid_argument("site out of range");
  std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
  letters[static_cast<std::size_t>(site)] = p;
  return PauliString(std::move(letters));
}

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  int phase_power = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase_power = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase_power += 1;
    ++pos;
  }
  if (pos >= text.size()) throw std::invalid_argument("empty Pauli string: '" + text + "'");
  std::vector<Pauli> letters;
  letters.reserve(text.size() - pos);
  for (; pos < text.size(); ++pos) letters.push_back(pauli_from_char(text[pos]));
  return PauliString(std::move(letters), phase_power);
}

std::string PauliString::letters_text() const {
  std::string out;
  out.reserve(letters_.size());
  for (Pauli p : letters_) out.push_back(pauli_char(p));
  return out;
}

Complex PauliString::phase() const { return kUnits[phase_power_]; }

bool PauliString::is_identity_letters() const {
  for (Pauli p : letters_)
    if (p != Pauli::I) return false;
  return true;
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : letters_)
    if (p != Pauli::I) ++w;
  return w;
}

std::string PauliString::text() const {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  return kPrefix[phase_power_] + letters_text();
}

PauliString PauliString::operator-() const {
  return PauliString(letters_, phase_power_ + 2);
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  std::vector<Pauli> letters(a.letters_.size());
  int phase = a.phase_power_ + b.phase_power_;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const MulEntry& e =
        kMul[static_cast<int>(a.letters_[k])][static_cast<int>(b.letters_[k])];
    letters[k] = e.letter;
    phase += e.ph;
  }
  return PauliString(std::move(letters), phase);
}

std::pair<long, Complex> PauliString::act_on_basis(long col) const {
  const int n = n_qubits();
  long row = col;
  Complex val = phase();
  for (int site = 0; site < n; ++site) {
    const long bit_pos = n - 1 - site;  // site 0 (qubit 1) is most significant
    const long mask = 1L << bit_pos;
    const bool b = (col & mask) != 0;
    switch (letters_[static_cast<std::size_t>(site)]) {
      case Pauli::I: break;
      case Pauli::X: row ^= mask; break;
      case Pauli::Y:
        row ^= mask;
        val *= b ? Complex(0, -1) : Complex(0, 1);
        break;
      case Pauli::Z:
        if (b) val = -val;
        break;
    }
  }
  return {row, val};
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  int clashes = 0;
  for (int k = 0; k < a.n_qubits(); ++k) {
    Pauli pa = a.letter(k), pb = b.letter(k);
    if (pa != Pauli::I && pb != Pauli::I && pa != pb) ++clashes;
  }
  return clashes % 2 == 0;
}

bool commutes_locally(const PauliString& a, const PauliString& b) {
  require_same_size(a, b);
  for (int k = 0; k < a.n_qubits(); ++k) {
    Pauli pa = a.letter(k), pb = b.letter(k);
    if (pa != Pauli::I && pb != Pauli::I && pa != pb) return false;
  }
  return true;
}

Eigen::MatrixXcd to_dense(const PauliString& p) {
  if (p.n_qubits() > max_qubits()) {
    throw std::invalid_argument("dense rendering limited to " +
                                std::to_string(max_qubits()) + " qubits");
  }
  const long dim = 1L << p.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    auto [row, val] = p.act_on_basis(col);
    m(row, col) = val;
  }
  return m;
}

}  // namespace stabwit

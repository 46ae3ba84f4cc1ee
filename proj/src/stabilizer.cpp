#include "stabwit/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace stabwit {

namespace {

/// GF(2) rank of the generators' symplectic (x|z) bit vectors.
int symplectic_rank(const std::vector<PauliString>& gens) {
  std::vector<std::uint64_t> rows;
  rows.reserve(gens.size());
  for (const PauliString& g : gens) {
    std::uint64_t row = 0;
    for (int k = 0; k < g.n_qubits(); ++k) {
      const Pauli p = g.letter(k);
      const bool x = p == Pauli::X || p == Pauli::Y;
      const bool z = p == Pauli::Z || p == Pauli::Y;
      if (x) row |= 1ULL << (2 * k);
      if (z) row |= 1ULL << (2 * k + 1);
    }
    rows.push_back(row);
  }
  int rank = 0;
  for (int bit = 0; bit < 64 && rank < static_cast<int>(rows.size()); ++bit) {
    const std::uint64_t mask = 1ULL << bit;
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && (rows[static_cast<std::size_t>(r)] & mask)) {
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    ++rank;
  }
  return rank;
}

Eigen::Vector2cd plus_one_eigenvector(Pauli p) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (p) {
    case Pauli::I: return {1.0, 0.0};
    case Pauli::X: return {s, s};
    case Pauli::Y: return {s, Complex(0.0, s)};
    case Pauli::Z: return {1.0, 0.0};
  }
  return {1.0, 0.0};
}

}  // namespace

void StabilizerGroup::validate() const {
  if (static_cast<int>(generators.size()) != n_qubits) {
    throw std::invalid_argument("stabilizer group needs N generators");
  }
  for (const PauliString& g : generators) {
    if (g.n_qubits() != n_qubits) throw std::invalid_argument("generator size mismatch");
    if (!g.is_hermitian()) throw std::invalid_argument("generator phase must be +-1");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw std::invalid_argument("generators do not commute");
      }
    }
  }
  if (symplectic_rank(generators) != n_qubits) {
    throw std::invalid_argument("generators are not independent");
  }
}

StabilizerGroup ghz_generators(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("GHZ stabilizer needs at least 2 qubits");
  StabilizerGroup g{n_qubits, {}};
  std::vector<Pauli> all_x(static_cast<std::size_t>(n_qubits), Pauli::X);
  g.generators.emplace_back(std::move(all_x));
  for (int k = 2; k <= n_qubits; ++k) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
    letters[static_cast<std::size_t>(k - 2)] = Pauli::Z;
    letters[static_cast<std::size_t>(k - 1)] = Pauli::Z;
    g.generators.emplace_back(std::move(letters));
  }
  g.validate();
  return g;
}

StabilizerGroup cluster_generators(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("cluster stabilizer needs at least 2 qubits");
  StabilizerGroup g{n_qubits, {}};
  for (int k = 1; k <= n_qubits; ++k) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n_qubits), Pauli::I);
    if (k > 1) letters[static_cast<std::size_t>(k - 2)] = Pauli::Z;
    letters[static_cast<std::size_t>(k - 1)] = Pauli::X;
    if (k < n_qubits) letters[static_cast<std::size_t>(k)] = Pauli::Z;
    g.generators.emplace_back(std::move(letters));
  }
  g.validate();
  return g;
}

StabilizerGroup graph_generators(const Graph& graph) {
  graph.validate();
  const int n = graph.n_vertices;
  StabilizerGroup g{n, {}};
  for (int k = 1; k <= n; ++k) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n), Pauli::I);
    letters[static_cast<std::size_t>(k - 1)] = Pauli::X;
    for (int l = 1; l <= n; ++l) {
      if (l != k && graph.has_edge(k, l)) letters[static_cast<std::size_t>(l - 1)] = Pauli::Z;
    }
    g.generators.emplace_back(std::move(letters));
  }
  g.validate();
  return g;
}

std::vector<HermitianOperator> w3_stabilizing_ops() {
  const double c1 = 1.0 / 3.0, c2 = 2.0 / 3.0;
  HermitianOperator s1(3), s2(3), s3(3);
  s1.add_term("ZII", c1);
  s1.add_term("YYZ", c2);
  s1.add_term("XZX", c2);
  s2.add_term("IZI", c1);
  s2.add_term("ZYY", c2);
  s2.add_term("XXZ", c2);
  s3.add_term("IIZ", c1);
  s3.add_term("YZY", c2);
  s3.add_term("ZXX", c2);
  return {s1, s2, s3};
}

Eigen::MatrixXcd w3_preparation_unitary() {
  HermitianOperator u(3);
  const double c = 1.0 / std::sqrt(3.0);
  u.add_term("XZI", c);
  u.add_term("IXZ", c);
  u.add_term("ZIX", c);
  return u.to_dense();
}

PauliString group_element(const StabilizerGroup& g, unsigned long k) {
  const int n = g.n_qubits;
  if (k >= (1UL << n)) throw std::invalid_argument("group element index out of range");
  PauliString element = PauliString::identity(n);
  for (int l = 1; l <= n; ++l) {
    if (k & (1UL << (n - l))) element = element * g.generators[static_cast<std::size_t>(l - 1)];
  }
  return element;
}

std::vector<PauliString> enumerate_group(const StabilizerGroup& g) {
  const unsigned long count = 1UL << g.n_qubits;
  std::vector<PauliString> elements;
  elements.reserve(count);
  for (unsigned long k = 0; k < count; ++k) elements.push_back(group_element(g, k));
  return elements;
}

bool verify_stabilizes(const std::vector<HermitianOperator>& ops, const PureState& psi,
                       double tol) {
  psi.validate(1e-9);
  for (const HermitianOperator& op : ops) {
    const Eigen::VectorXcd residual = op.to_dense() * psi.amplitudes - psi.amplitudes;
    if (residual.norm() >= tol) return false;
  }
  return true;
}

bool verify_stabilizes(const StabilizerGroup& g, const PureState& psi, double tol) {
  std::vector<HermitianOperator> ops;
  ops.reserve(g.generators.size());
  for (const PauliString& s : g.generators) ops.push_back(HermitianOperator::from_pauli(s));
  return verify_stabilizes(ops, psi, tol);
}

std::optional<PureState> common_product_eigenstate(const PauliString& a,
                                                   const PauliString& b) {
  if (!commutes_locally(a, b)) return std::nullopt;
  const int n = a.n_qubits();
  Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
  for (int k = 0; k < n; ++k) {
    const Pauli letter = a.letter(k) != Pauli::I ? a.letter(k) : b.letter(k);
    const Eigen::Vector2cd site = plus_one_eigenvector(letter);
    Eigen::VectorXcd next(amps.size() * 2);
    for (long i = 0; i < amps.size(); ++i) {
      next(2 * i) = amps(i) * site(0);
      next(2 * i + 1) = amps(i) * site(1);
    }
    amps = next;
  }
  PureState psi{n, amps};
  psi.validate(1e-9);
  return psi;
}

std::vector<GhzBasisVector> ghz_basis(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("GHZ basis needs at least 2 qubits");
  const long dim = 1L << n_qubits;
  std::vector<GhzBasisVector> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  const double s = 1.0 / std::sqrt(2.0);
  for (long code = 0; code < dim; ++code) {
    std::vector<int> label(static_cast<std::size_t>(n_qubits));
    for (int k = 1; k <= n_qubits; ++k) {
      label[static_cast<std::size_t>(k - 1)] = (code >> (n_qubits - k)) & 1;
    }
    // x_1 = 0 and x_k = x_{k-1} xor s_k fixes (-1)^{s_k} as the Z^{k-1}Z^k
    // eigenvalue; the overall sign is (-1)^{s_1}.
    long x = 0;
    int prev = 0;
    for (int k = 2; k <= n_qubits; ++k) {
      const int bit = prev ^ label[static_cast<std::size_t>(k - 1)];
      x |= static_cast<long>(bit) << (n_qubits - k);
      prev = bit;
    }
    const long x_bar = ~x & (dim - 1);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    amps(x) = s;
    amps(x_bar) = label[0] ? -s : s;
    basis.push_back({std::move(label), PureState{n_qubits, std::move(amps)}});
  }
  return basis;
}

bool MeasurementSetting::compatible(const std::string& term) const {
  for (std::size_t k = 0; k < term.size(); ++k) {
    if (term[k] == 'I') continue;
    if (letters[k] != '.' && letters[k] != term[k]) return false;
  }
  return true;
}

void MeasurementSetting::absorb(const std::string& term) {
  for (std::size_t k = 0; k < term.size(); ++k) {
    if (term[k] != 'I') letters[k] = term[k];
  }
}

SettingPartition partition_into_settings(const HermitianOperator& op) {
  SettingPartition part;
  for (const auto& [letters, coeff] : op.terms()) {
    (void)coeff;
    part.terms.push_back(letters);
  }
  std::sort(part.terms.begin(), part.terms.end(), [](const std::string& a, const std::string& b) {
    const auto wa = std::count_if(a.begin(), a.end(), [](char c) { return c != 'I'; });
    const auto wb = std::count_if(b.begin(), b.end(), [](char c) { return c != 'I'; });
    if (wa != wb) return wa > wb;
    return a < b;
  });
  part.assignment.resize(part.terms.size(), -1);
  for (std::size_t i = 0; i < part.terms.size(); ++i) {
    const std::string& term = part.terms[i];
    int slot = -1;
    for (std::size_t s = 0; s < part.settings.size(); ++s) {
      if (part.settings[s].compatible(term)) {
        slot = static_cast<int>(s);
        break;
      }
    }
    if (slot < 0) {
      part.settings.push_back(
          MeasurementSetting{std::string(static_cast<std::size_t>(op.n_qubits()), '.')});
      slot = static_cast<int>(part.settings.size()) - 1;
    }
    part.settings[static_cast<std::size_t>(slot)].absorb(term);
    part.assignment[i] = slot;
  }
  return part;
}

SubgroupResult max_one_setting_subgroup(const StabilizerGroup& g) {
  const int n = static_cast<int>(g.generators.size());
  std::vector<unsigned long> masks;
  masks.reserve(1UL << n);
  for (unsigned long m = 0; m < (1UL << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](unsigned long a, unsigned long b) {
    const int pa = __builtin_popcountl(a), pb = __builtin_popcountl(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });
  for (unsigned long mask : masks) {
    // Enumerate the subgroup generated by this subset and try to fit all of
    // its elements into a single setting.
    std::vector<int> indices;
    for (int l = 0; l < n; ++l) {
      if (mask & (1UL << l)) indices.push_back(l);
    }
    MeasurementSetting setting{std::string(static_cast<std::size_t>(g.n_qubits), '.')};
    bool ok = true;
    const unsigned long count = 1UL << indices.size();
    for (unsigned long k = 0; k < count && ok; ++k) {
      PauliString element = PauliString::identity(g.n_qubits);
      for (std::size_t l = 0; l < indices.size(); ++l) {
        if (k & (1UL << l)) element = element * g.generators[static_cast<std::size_t>(indices[l])];
      }
      const std::string letters = element.letters_text();
      if (!setting.compatible(letters)) {
        ok = false;
      } else {
        setting.absorb(letters);
      }
    }
    if (ok) return SubgroupResult{count, indices};
  }
  return SubgroupResult{1, {}};
}

}  // namespace stabwit

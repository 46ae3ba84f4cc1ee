#include "stabwit/witnesses.hpp"

#include <cmath>
#include <stdexcept>

#include "stabwit/stabilizer.hpp"

namespace stabwit {

namespace {

/// Product of (S+1)/2 over the selected generators (1-based indices).
HermitianOperator half_product(const StabilizerGroup& g, const std::vector<int>& which) {
  HermitianOperator prod = HermitianOperator::identity(g.n_qubits);
  for (int k : which) {
    prod = prod * half_sum_with_identity(
                      HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(k - 1)]));
  }
  return prod;
}

int greedy_setting_count(const HermitianOperator& op) {
  return static_cast<int>(partition_into_settings(op).setting_count());
}

Witness make_witness(std::string name, HermitianOperator op, DensityMatrix target,
                     DetectionClass cls, double threshold, int settings) {
  return Witness{std::move(name), std::move(op), std::move(target), cls, threshold, settings};
}

}  // namespace

Witness ghz_two_term(int n_qubits, int m) {
  if (m < 2 || m > n_qubits) throw std::invalid_argument("m out of range");
  const StabilizerGroup g = ghz_generators(n_qubits);
  HermitianOperator op = HermitianOperator::identity(n_qubits);
  op -= HermitianOperator::from_pauli(g.generators[0]);
  op -= HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(m - 1)]);
  return make_witness("ghz_two_term", std::move(op),
                      DensityMatrix::from_pure(make_ghz(n_qubits)),
                      DetectionClass::FullSeparability, 0.5, 2);
}

Witness ghz_three_term(int n_qubits, int m) {
  if (m < 2 || m > n_qubits) throw std::invalid_argument("m out of range");
  const StabilizerGroup g = ghz_generators(n_qubits);
  const PauliString& s1 = g.generators[0];
  const PauliString& sm = g.generators[static_cast<std::size_t>(m - 1)];
  HermitianOperator op = HermitianOperator::identity(n_qubits);
  op -= HermitianOperator::from_pauli(s1);
  op -= HermitianOperator::from_pauli(sm);
  op -= HermitianOperator::from_pauli(s1 * sm);
  return make_witness("ghz_three_term", std::move(op),
                      DensityMatrix::from_pure(make_ghz(n_qubits)),
                      DetectionClass::FullSeparability, 2.0 / 3.0, 3);
}

Witness projector_witness(const PureState& target, double c, const std::string& name) {
  const int n = target.n_qubits;
  if (n > 6) throw std::invalid_argument("projector decomposition limited to 6 qubits");
  HermitianOperator op = HermitianOperator::identity(n, c);
  const long count = 1L << (2 * n);
  const double scale = 1.0 / static_cast<double>(1L << n);
  for (long code = 0; code < count; ++code) {
    std::vector<Pauli> letters(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      letters[static_cast<std::size_t>(k)] = static_cast<Pauli>((code >> (2 * k)) & 3);
    }
    const PauliString p(letters);
    const double coeff = expectation(p, target) * scale;
    if (std::abs(coeff) > 1e-12) op.add(p, -coeff);
  }
  Witness w = make_witness(name, std::move(op), DensityMatrix::from_pure(target),
                           DetectionClass::GenuineMultipartite, 0.0, 0);
  w.analytic_noise_threshold.reset();
  w.claimed_settings = greedy_setting_count(w.op);
  return w;
}

Witness ghz_projector(int n_qubits) {
  const StabilizerGroup g = ghz_generators(n_qubits);
  std::vector<int> all;
  for (int k = 1; k <= n_qubits; ++k) all.push_back(k);
  HermitianOperator op = HermitianOperator::identity(n_qubits, 0.5) - half_product(g, all);
  const int settings = greedy_setting_count(op);
  const double threshold = 1.0 / (2.0 - std::pow(2.0, 1 - n_qubits));
  return make_witness("ghz_projector", std::move(op),
                      DensityMatrix::from_pure(make_ghz(n_qubits)),
                      DetectionClass::GenuineMultipartite, threshold, settings);
}

Witness ghz_genuine_sum(int n_qubits) {
  const StabilizerGroup g = ghz_generators(n_qubits);
  HermitianOperator op = HermitianOperator::identity(n_qubits, n_qubits - 1.0);
  for (const PauliString& s : g.generators) op -= HermitianOperator::from_pauli(s);
  return make_witness("ghz_genuine_sum", std::move(op),
                      DensityMatrix::from_pure(make_ghz(n_qubits)),
                      DetectionClass::GenuineMultipartite, 1.0 / n_qubits, 2);
}

Witness ghz_genuine_two_settings(int n_qubits) {
  const StabilizerGroup g = ghz_generators(n_qubits);
  std::vector<int> tail;
  for (int k = 2; k <= n_qubits; ++k) tail.push_back(k);
  HermitianOperator op = HermitianOperator::identity(n_qubits, 3.0);
  op -= 2.0 * half_sum_with_identity(HermitianOperator::from_pauli(g.generators[0]));
  op -= 2.0 * half_product(g, tail);
  const double threshold = 1.0 / (3.0 - std::pow(2.0, 2 - n_qubits));
  return make_witness("ghz_genuine_two_settings", std::move(op),
                      DensityMatrix::from_pure(make_ghz(n_qubits)),
                      DetectionClass::GenuineMultipartite, threshold, 2);
}

HermitianOperator mermin_operator(int n_qubits) {
  const StabilizerGroup g = ghz_generators(n_qubits);
  std::vector<int> tail;
  for (int k = 2; k <= n_qubits; ++k) tail.push_back(k);
  return HermitianOperator::from_pauli(g.generators[0]) * half_product(g, tail);
}

Witness mermin_witness3() {
  HermitianOperator op = HermitianOperator::identity(3, 2.0) - 4.0 * mermin_operator(3);
  return make_witness("mermin_witness3", std::move(op), DensityMatrix::from_pure(make_ghz(3)),
                      DetectionClass::GenuineMultipartite, 0.5, 4);
}

Witness cluster_two_term(int n_qubits, int k) {
  if (k < 1 || k >= n_qubits) throw std::invalid_argument("k out of range");
  const StabilizerGroup g = cluster_generators(n_qubits);
  HermitianOperator op = HermitianOperator::identity(n_qubits);
  op -= HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(k - 1)]);
  op -= HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(k)]);
  return make_witness("cluster_two_term", std::move(op),
                      DensityMatrix::from_pure(make_cluster(n_qubits)),
                      DetectionClass::FullSeparability, 0.5, 2);
}

Witness cluster_three_term(int n_qubits, int k) {
  if (k < 1 || k >= n_qubits) throw std::invalid_argument("k out of range");
  const StabilizerGroup g = cluster_generators(n_qubits);
  const PauliString& sk = g.generators[static_cast<std::size_t>(k - 1)];
  const PauliString& sk1 = g.generators[static_cast<std::size_t>(k)];
  HermitianOperator op = HermitianOperator::identity(n_qubits);
  op -= HermitianOperator::from_pauli(sk);
  op -= HermitianOperator::from_pauli(sk1);
  op -= HermitianOperator::from_pauli(sk * sk1);
  return make_witness("cluster_three_term", std::move(op),
                      DensityMatrix::from_pure(make_cluster(n_qubits)),
                      DetectionClass::FullSeparability, 2.0 / 3.0, 3);
}

Witness cluster_composite(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("cluster witness needs at least 2 qubits");
  const StabilizerGroup g = cluster_generators(n_qubits);
  const int blocks = (n_qubits + 2) / 4;
  HermitianOperator prod = HermitianOperator::identity(n_qubits);
  for (int b = 0; b < blocks; ++b) {
    const PauliString& sa = g.generators[static_cast<std::size_t>(4 * b)];
    const PauliString& sb = g.generators[static_cast<std::size_t>(4 * b + 1)];
    HermitianOperator block = HermitianOperator::identity(n_qubits);
    block += HermitianOperator::from_pauli(sa);
    block += HermitianOperator::from_pauli(sb);
    block += HermitianOperator::from_pauli(sa * sb);
    prod = prod * block;
  }
  // Blocks enter with + signs: (1 - S - S - SS) blocks would give the product
  // eigenvalue (-2)^K on the cluster state, losing sign-definiteness for even
  // K, while (1 + S + S + SS) blocks give 4^K there and at most 2 per block on
  // product states, so the threshold 2^K/(2^K+1) holds for every K.
  HermitianOperator op =
      HermitianOperator::identity(n_qubits, std::pow(2.0, blocks)) - prod;
  const double pow_k = std::pow(2.0, blocks);
  return make_witness("cluster_composite", std::move(op),
                      DensityMatrix::from_pure(make_cluster(n_qubits)),
                      DetectionClass::FullSeparability, pow_k / (pow_k + 1.0),
                      greedy_setting_count(prod));
}

Witness cluster_genuine(int n_qubits) {
  const StabilizerGroup g = cluster_generators(n_qubits);
  std::vector<int> odd, even;
  for (int k = 1; k <= n_qubits; ++k) (k % 2 ? odd : even).push_back(k);
  HermitianOperator op = HermitianOperator::identity(n_qubits, 3.0);
  op -= 2.0 * half_product(g, odd);
  op -= 2.0 * half_product(g, even);
  const double a = std::pow(2.0, -static_cast<double>(odd.size()));
  const double b = std::pow(2.0, -static_cast<double>(even.size()));
  const double threshold = 1.0 / (4.0 - 2.0 * (a + b));
  return make_witness("cluster_genuine", std::move(op),
                      DensityMatrix::from_pure(make_cluster(n_qubits)),
                      DetectionClass::GenuineMultipartite, threshold, 2);
}

Witness graph_pair(const Graph& graph, int k, int l) {
  if (!graph.has_edge(k, l)) throw std::invalid_argument("vertices must be neighbors");
  const StabilizerGroup g = graph_generators(graph);
  HermitianOperator op = HermitianOperator::identity(graph.n_vertices);
  op -= HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(k - 1)]);
  op -= HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(l - 1)]);
  return make_witness("graph_pair", std::move(op),
                      DensityMatrix::from_pure(make_graph_state(graph)),
                      DetectionClass::FullSeparability, 0.5, 2);
}

Witness graph_genuine(const Graph& graph) {
  const StabilizerGroup g = graph_generators(graph);
  const int n = graph.n_vertices;
  HermitianOperator op = HermitianOperator::identity(n, n - 1.0);
  for (const PauliString& s : g.generators) op -= HermitianOperator::from_pauli(s);
  // Greedy proper coloring: each color class of vertices shares one setting.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  int colors = 0;
  for (int v = 1; v <= n; ++v) {
    std::vector<bool> used(static_cast<std::size_t>(colors), false);
    for (int u = 1; u < v; ++u) {
      if (graph.has_edge(u, v)) used[static_cast<std::size_t>(color[static_cast<std::size_t>(u - 1)])] = true;
    }
    int c = 0;
    while (c < colors && used[static_cast<std::size_t>(c)]) ++c;
    if (c == colors) ++colors;
    color[static_cast<std::size_t>(v - 1)] = c;
  }
  return make_witness("graph_genuine", std::move(op),
                      DensityMatrix::from_pure(make_graph_state(graph)),
                      DetectionClass::GenuineMultipartite, 1.0 / n, colors);
}

Witness rho3_witness() {
  HermitianOperator op = HermitianOperator::identity(3);
  op.add_term("ZZI", -1.0);
  op.add_term("XXZ", -1.0);
  return make_witness("rho3_witness", std::move(op), make_rho3(),
                      DetectionClass::FullSeparability, 0.5, 2);
}

Witness w3_projector_witness() {
  Witness w = projector_witness(make_w3(), 2.0 / 3.0, "w3_projector");
  w.analytic_noise_threshold = 8.0 / 21.0;
  w.claimed_settings = 5;
  return w;
}

Witness w3_witness() {
  HermitianOperator op = HermitianOperator::identity(3, 11.0 / 3.0);
  op.add_term("ZZZ", 2.0);
  const char* xx[] = {"XXI", "XIX", "IXX"};
  const char* yy[] = {"YYI", "YIY", "IYY"};
  const char* zz[] = {"ZZI", "ZIZ", "IZZ"};
  for (int i = 0; i < 3; ++i) {
    op.add_term(xx[i], -2.0 / 3.0);
    op.add_term(yy[i], -2.0 / 3.0);
    op.add_term(zz[i], 1.0 / 3.0);
  }
  return make_witness("w3_witness", std::move(op), DensityMatrix::from_pure(make_w3()),
                      DetectionClass::GenuineMultipartite, 4.0 / 15.0, 3);
}

Witness w3_two_setting_witness() {
  HermitianOperator op = HermitianOperator::identity(3, 1.0 + std::sqrt(5.0));
  const char* xx[] = {"XXI", "XIX", "IXX"};
  const char* yy[] = {"YYI", "YIY", "IYY"};
  for (int i = 0; i < 3; ++i) {
    op.add_term(xx[i], -1.0);
    op.add_term(yy[i], -1.0);
  }
  return make_witness("w3_two_setting", std::move(op), DensityMatrix::from_pure(make_w3()),
                      DetectionClass::GenuineMultipartite, (3.0 - std::sqrt(5.0)) / 4.0, 2);
}

HermitianOperator fidelity_bound_operator(StabilizerFamily family, int n_qubits) {
  const Witness w = family == StabilizerFamily::Ghz ? ghz_genuine_two_settings(n_qubits)
                                                    : cluster_genuine(n_qubits);
  return 0.5 * (HermitianOperator::identity(n_qubits) - w.op);
}

}  // namespace stabwit

#include "stabwit/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace stabwit {

namespace {

constexpr std::uint64_t kRestartStride = 0x9E3779B97F4A7C15ULL;

std::mt19937_64 restart_rng(std::uint64_t seed, int restart) {
  return std::mt19937_64(seed ^ (kRestartStride * static_cast<std::uint64_t>(restart + 1)));
}

Eigen::Matrix2cd pauli_matrix(char letter) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return m;
}

std::array<double, 4> site_means(const Eigen::Vector2cd& v) {
  const Complex z = std::conj(v(0)) * v(1);
  return {1.0, 2.0 * z.real(), 2.0 * z.imag(), std::norm(v(0)) - std::norm(v(1))};
}

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
  }
  throw std::invalid_argument("bad Pauli letter");
}

double product_value(const HermitianOperator& op, const std::vector<std::array<double, 4>>& means) {
  double value = 0.0;
  for (const auto& [letters, coeff] : op.terms()) {
    double term = coeff;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      term *= means[k][static_cast<std::size_t>(letter_index(letters[k]))];
    }
    value += term;
  }
  return value;
}

Eigen::Vector2cd top_eigenvector(const Eigen::Matrix2cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m);
  return solver.eigenvectors().col(1);
}

/// One coordinate-ascent run from the given start; returns the final value.
double ascend_product(const HermitianOperator& op, std::vector<Eigen::Vector2cd>& kets,
                      const OracleOptions& options, bool* converged) {
  const int n = op.n_qubits();
  std::vector<std::array<double, 4>> means(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) means[static_cast<std::size_t>(k)] = site_means(kets[static_cast<std::size_t>(k)]);
  double value = product_value(op, means);
  *converged = false;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    for (int site = 0; site < n; ++site) {
      Eigen::Matrix2cd effective = Eigen::Matrix2cd::Zero();
      for (const auto& [letters, coeff] : op.terms()) {
        double weight = coeff;
        for (int k = 0; k < n; ++k) {
          if (k == site) continue;
          weight *= means[static_cast<std::size_t>(k)]
                         [static_cast<std::size_t>(letter_index(letters[static_cast<std::size_t>(k)]))];
        }
        if (weight != 0.0) effective += weight * pauli_matrix(letters[static_cast<std::size_t>(site)]);
      }
      kets[static_cast<std::size_t>(site)] = top_eigenvector(effective);
      means[static_cast<std::size_t>(site)] = site_means(kets[static_cast<std::size_t>(site)]);
    }
    const double next = product_value(op, means);
    if (next - value < options.tol) {
      value = std::max(value, next);
      *converged = true;
      break;
    }
    value = next;
  }
  return value;
}

}  // namespace

OptimizationResult max_over_product_states(const HermitianOperator& op,
                                           const OracleOptions& options) {
  if (op.n_qubits() > 10) throw std::invalid_argument("product-state oracle limited to 10 qubits");
  if (options.restarts < 1) throw std::invalid_argument("restarts must be positive");
  OptimizationResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    std::mt19937_64 rng = restart_rng(options.seed, r);
    std::vector<Eigen::Vector2cd> kets = random_product_kets(op.n_qubits(), rng);
    bool converged = false;
    const double value = ascend_product(op, kets, options, &converged);
    if (value > best.value) {
      best.value = value;
      best.converged = converged;
      best.argmax_description = "product state, restart " + std::to_string(r);
    }
  }
  best.restarts_used = options.restarts;
  return best;
}

std::vector<long> bipartition_index_map(int n_qubits, unsigned mask_a) {
  std::vector<int> a_sites, b_sites;
  for (int k = 0; k < n_qubits; ++k) {
    ((mask_a >> k) & 1U ? a_sites : b_sites).push_back(k);
  }
  if (a_sites.empty() || b_sites.empty()) throw std::invalid_argument("bipartition must be nontrivial");
  const long dim_a = 1L << a_sites.size();
  const long dim_b = 1L << b_sites.size();
  std::vector<long> map(static_cast<std::size_t>(dim_a * dim_b));
  for (long a = 0; a < dim_a; ++a) {
    for (long b = 0; b < dim_b; ++b) {
      long global = 0;
      for (std::size_t j = 0; j < a_sites.size(); ++j) {
        const long bit = (a >> (a_sites.size() - 1 - j)) & 1;
        global |= bit << (n_qubits - 1 - a_sites[j]);
      }
      for (std::size_t j = 0; j < b_sites.size(); ++j) {
        const long bit = (b >> (b_sites.size() - 1 - j)) & 1;
        global |= bit << (n_qubits - 1 - b_sites[j]);
      }
      map[static_cast<std::size_t>(a * dim_b + b)] = global;
    }
  }
  return map;
}

PureState combine_bipartite(int n_qubits, unsigned mask_a, const Eigen::VectorXcd& a,
                            const Eigen::VectorXcd& b) {
  const std::vector<long> map = bipartition_index_map(n_qubits, mask_a);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(1L << n_qubits);
  for (long i = 0; i < a.size(); ++i) {
    for (long j = 0; j < b.size(); ++j) {
      amps(map[static_cast<std::size_t>(i * b.size() + j)]) = a(i) * b(j);
    }
  }
  return PureState{n_qubits, std::move(amps)};
}

namespace {

/// Alternating top-eigenvector optimization of a dense operator rearranged to
/// the A|B tensor order.
double ascend_bipartite(const Eigen::MatrixXcd& m, long dim_a, long dim_b, Eigen::VectorXcd& a,
                        Eigen::VectorXcd& b, const OracleOptions& options, bool* converged) {
  double value = -std::numeric_limits<double>::infinity();
  *converged = false;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    Eigen::MatrixXcd eff_a = Eigen::MatrixXcd::Zero(dim_a, dim_a);
    for (long i = 0; i < dim_a; ++i) {
      for (long j = 0; j < dim_a; ++j) {
        Complex sum = 0.0;
        for (long p = 0; p < dim_b; ++p) {
          for (long q = 0; q < dim_b; ++q) {
            sum += std::conj(b(p)) * m(i * dim_b + p, j * dim_b + q) * b(q);
          }
        }
        eff_a(i, j) = sum;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver_a(eff_a);
    a = solver_a.eigenvectors().col(dim_a - 1);

    Eigen::MatrixXcd eff_b = Eigen::MatrixXcd::Zero(dim_b, dim_b);
    for (long p = 0; p < dim_b; ++p) {
      for (long q = 0; q < dim_b; ++q) {
        Complex sum = 0.0;
        for (long i = 0; i < dim_a; ++i) {
          for (long j = 0; j < dim_a; ++j) {
            sum += std::conj(a(i)) * m(i * dim_b + p, j * dim_b + q) * a(j);
          }
        }
        eff_b(p, q) = sum;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver_b(eff_b);
    b = solver_b.eigenvectors().col(dim_b - 1);
    const double next = solver_b.eigenvalues()(dim_b - 1);
    if (next - value < options.tol) {
      value = std::max(value, next);
      *converged = true;
      break;
    }
    value = next;
  }
  return value;
}

}  // namespace

OptimizationResult max_over_biseparable(const HermitianOperator& op,
                                        const OracleOptions& options) {
  const int n = op.n_qubits();
  if (n > 10) throw std::invalid_argument("biseparable oracle limited to 10 qubits");
  if (n < 2) throw std::invalid_argument("biseparable oracle needs at least 2 qubits");
  const Eigen::MatrixXcd dense = op.to_dense();
  OptimizationResult best;
  best.value = -std::numeric_limits<double>::infinity();
  // Qubit 1 is pinned to side A so each split is visited once.
  for (unsigned rest = 0; rest + 1 < (1U << (n - 1)); ++rest) {
    const unsigned mask_a = (rest << 1) | 1U;
    const std::vector<long> map = bipartition_index_map(n, mask_a);
    const long dim_a = 1L << __builtin_popcount(mask_a);
    const long dim_b = (1L << n) / dim_a;
    Eigen::MatrixXcd rearranged(dim_a * dim_b, dim_a * dim_b);
    for (long i = 0; i < dim_a * dim_b; ++i) {
      for (long j = 0; j < dim_a * dim_b; ++j) {
        rearranged(i, j) = dense(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
      }
    }
    for (int r = 0; r < options.bisep_restarts; ++r) {
      std::mt19937_64 rng = restart_rng(options.seed + mask_a, r);
      Eigen::VectorXcd a(dim_a), b(dim_b);
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (long i = 0; i < dim_a; ++i) a(i) = Complex(gauss(rng), gauss(rng));
      for (long i = 0; i < dim_b; ++i) b(i) = Complex(gauss(rng), gauss(rng));
      a.normalize();
      b.normalize();
      bool converged = false;
      const double value = ascend_bipartite(rearranged, dim_a, dim_b, a, b, options, &converged);
      if (value > best.value) {
        best.value = value;
        best.converged = converged;
        best.argmax_description = "bipartition mask " + std::to_string(mask_a) + ", restart " +
                                  std::to_string(r);
      }
    }
  }
  best.restarts_used = options.bisep_restarts;
  return best;
}

OptimizationResult min_over_biseparable(const HermitianOperator& op,
                                        const OracleOptions& options) {
  OptimizationResult result = max_over_biseparable(-1.0 * op, options);
  result.value = -result.value;
  return result;
}

double min_over_biseparable_w3(const HermitianOperator& op, const OracleOptions& options) {
  if (op.n_qubits() != 3) throw std::invalid_argument("W3 oracle is three-qubit");
  return min_over_biseparable(op, options).value;
}

double w3_prime_lambda_min(double x, double y) {
  return std::sqrt(5.0) - std::sqrt(1.0 + 4.0 * (x * x + y * y));
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double min_eigenvalue(const HermitianOperator& op) { return min_eigenvalue(op.to_dense()); }

DominanceCertificate check_dominance(const HermitianOperator& w, const HermitianOperator& wtilde,
                                     double alpha, double slack) {
  DominanceCertificate cert;
  cert.alpha = alpha;
  cert.min_eigenvalue = min_eigenvalue(w - alpha * wtilde);
  cert.holds = cert.min_eigenvalue >= -slack;
  return cert;
}

double noise_threshold_analytic(const Witness& w) {
  const double on_target = expectation(w.op, w.target);
  const double denom = w.op.normalized_trace() - on_target;
  if (on_target >= 0.0 || denom <= 0.0) {
    throw std::runtime_error("noise threshold undefined for this witness");
  }
  return -on_target / denom;
}

double noise_threshold_empirical(const std::function<bool(const DensityMatrix&)>& detects,
                                 const DensityMatrix& target) {
  if (!detects(mix_with_white_noise(target, 0.0))) return 0.0;
  if (detects(mix_with_white_noise(target, 1.0))) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    (detects(mix_with_white_noise(target, mid)) ? lo : hi) = mid;
  }
  // Monotonicity spot check: detection may not reappear past the threshold.
  for (double p = hi; p <= 1.0; p += 0.1) {
    if (detects(mix_with_white_noise(target, std::min(p, 1.0)))) {
      throw std::runtime_error("detection is not monotone in the noise parameter");
    }
  }
  return 0.5 * (lo + hi);
}

double noise_threshold_empirical(const std::function<bool(const DensityMatrix&)>& detects,
                                 const PureState& target) {
  return noise_threshold_empirical(detects, DensityMatrix::from_pure(target));
}

double optimal_two_setting_noise(double d1, double d2) {
  return 1.0 / (4.0 - 2.0 / d1 - 2.0 / d2);
}

Eigen::Vector2cd random_qubit_ket(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector2cd v(Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)));
  v.normalize();
  return v;
}

PureState random_pure_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amps(1L << n_qubits);
  for (long i = 0; i < amps.size(); ++i) amps(i) = Complex(gauss(rng), gauss(rng));
  amps.normalize();
  return PureState{n_qubits, std::move(amps)};
}

std::vector<Eigen::Vector2cd> random_product_kets(int n_qubits, std::mt19937_64& rng) {
  std::vector<Eigen::Vector2cd> kets;
  kets.reserve(static_cast<std::size_t>(n_qubits));
  for (int k = 0; k < n_qubits; ++k) kets.push_back(random_qubit_ket(rng));
  return kets;
}

PureState product_of_kets(const std::vector<Eigen::Vector2cd>& kets) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Ones(1);
  for (const Eigen::Vector2cd& ket : kets) {
    Eigen::VectorXcd next(amps.size() * 2);
    for (long i = 0; i < amps.size(); ++i) {
      next(2 * i) = amps(i) * ket(0);
      next(2 * i + 1) = amps(i) * ket(1);
    }
    amps = next;
  }
  return PureState{static_cast<int>(kets.size()), std::move(amps)};
}

PureState random_product_state(int n_qubits, std::mt19937_64& rng) {
  return product_of_kets(random_product_kets(n_qubits, rng));
}

PureState random_biseparable_state(int n_qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> pick(0, (1U << (n_qubits - 1)) - 2);
  const unsigned mask_a = (pick(rng) << 1) | 1U;
  const int size_a = __builtin_popcount(mask_a);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd a(1L << size_a), b(1L << (n_qubits - size_a));
  for (long i = 0; i < a.size(); ++i) a(i) = Complex(gauss(rng), gauss(rng));
  for (long i = 0; i < b.size(); ++i) b(i) = Complex(gauss(rng), gauss(rng));
  a.normalize();
  b.normalize();
  return combine_bipartite(n_qubits, mask_a, a, b);
}

}  // namespace stabwit

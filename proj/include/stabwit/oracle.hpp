#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stabwit/operators.hpp"
#include "stabwit/states.hpp"
#include "stabwit/witnesses.hpp"

namespace stabwit {

struct OracleOptions {
  int restarts = 64;
  int bisep_restarts = 32;
  std::uint64_t seed = 0xC0FFEE;
  int max_sweeps = 500;
  double tol = 1e-10;
};

struct OptimizationResult {
  double value = 0.0;
  std::string argmax_description;
  int restarts_used = 0;
  bool converged = false;
};

/// Multistart coordinate ascent over pure product states; each site update
/// solves the exact 2x2 subproblem.
OptimizationResult max_over_product_states(const HermitianOperator& op,
                                           const OracleOptions& options = {});

/// Alternating optimization over both factors of every bipartition.
OptimizationResult max_over_biseparable(const HermitianOperator& op,
                                        const OracleOptions& options = {});
OptimizationResult min_over_biseparable(const HermitianOperator& op,
                                        const OracleOptions& options = {});
double min_over_biseparable_w3(const HermitianOperator& op, const OracleOptions& options = {});

/// Closed-form smallest eigenvalue of the contracted W3 two-setting witness
/// on the Bloch disk x^2 + y^2 <= 1.
double w3_prime_lambda_min(double x, double y);

double min_eigenvalue(const Eigen::MatrixXcd& m);
double min_eigenvalue(const HermitianOperator& op);

struct DominanceCertificate {
  double alpha = 0.0;
  double min_eigenvalue = 0.0;
  bool holds = false;
};

DominanceCertificate check_dominance(const HermitianOperator& w, const HermitianOperator& wtilde,
                                     double alpha, double slack = 1e-9);

/// White-noise limit -<W>_t / (Tr(W)/2^N - <W>_t) of a witness on its target.
double noise_threshold_analytic(const Witness& w);

/// Largest p (to width 1e-4) at which the criterion still fires on
/// mix_with_white_noise(target, p). Detection must be monotone along the
/// family; spot-checked by sampling.
double noise_threshold_empirical(const std::function<bool(const DensityMatrix&)>& detects,
                                 const DensityMatrix& target);
double noise_threshold_empirical(const std::function<bool(const DensityMatrix&)>& detects,
                                 const PureState& target);

double optimal_two_setting_noise(double d1, double d2);

// Randomized state generators used by the oracles and the property tests.
Eigen::Vector2cd random_qubit_ket(std::mt19937_64& rng);
PureState random_pure_state(int n_qubits, std::mt19937_64& rng);
std::vector<Eigen::Vector2cd> random_product_kets(int n_qubits, std::mt19937_64& rng);
PureState random_product_state(int n_qubits, std::mt19937_64& rng);
/// Haar factors on a uniformly random nontrivial bipartition.
PureState random_biseparable_state(int n_qubits, std::mt19937_64& rng);
PureState product_of_kets(const std::vector<Eigen::Vector2cd>& kets);

/// Global index of (row-in-A, row-in-B) for the bipartition whose A side is
/// the set bits of mask (bit k = qubit k+1).
std::vector<long> bipartition_index_map(int n_qubits, unsigned mask_a);

/// Pure state assembled from factors on a bipartition.
PureState combine_bipartite(int n_qubits, unsigned mask_a, const Eigen::VectorXcd& a,
                            const Eigen::VectorXcd& b);

}  // namespace stabwit

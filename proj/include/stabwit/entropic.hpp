#pragma once

#include <vector>

#include "stabwit/operators.hpp"
#include "stabwit/states.hpp"

namespace stabwit {

struct OutcomeDistribution {
  std::vector<double> eigenvalues;    // distinct, ascending
  std::vector<double> probabilities;  // spectral projector traces
};

/// Measurement statistics of op on rho; eigenvalues closer than 1e-8 are
/// merged into one outcome.
OutcomeDistribution outcome_distribution(const HermitianOperator& op, const DensityMatrix& rho);

/// Shannon entropy in nats, with 0 ln 0 := 0.
double shannon_entropy(const OutcomeDistribution& d);

/// Maassen-Uffink style bound: -2 ln max_ij ||P_i Q_j|| over the spectral
/// projectors of the two observables (ln 2 for mutually unbiased qubit
/// observables, 0 when they share an eigenspace).
double eur_bound(const HermitianOperator& m, const HermitianOperator& n);

struct EurReport {
  std::vector<double> entropies;  // one per generator
  double lhs = 0.0;               // sum of entropies
  double bound = 0.0;             // ln 2
  bool detected = false;          // lhs < ln 2, certifies genuine entanglement
};

EurReport eur_criterion_ghz(const DensityMatrix& rho, int n_qubits);
EurReport eur_criterion_cluster(const DensityMatrix& rho, int n_qubits);

}  // namespace stabwit

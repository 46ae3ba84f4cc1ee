#pragma once

#include <vector>

#include "stabwit/operators.hpp"
#include "stabwit/states.hpp"

namespace stabwit {

struct LurReport {
  double linear_part = 0.0;
  double correction = 0.0;  // sum of squared means, always >= 0
  double total = 0.0;       // linear_part - correction
  bool detected = false;    // total < -1e-12
};

/// <op^2> - <op>^2, clipped at zero.
double variance(const HermitianOperator& op, const DensityMatrix& rho);

/// Two-term GHZ witness sharpened by squared means across the cut after
/// qubit k (1 <= k <= N-1).
LurReport lur_ghz(const DensityMatrix& rho, int n_qubits, int k);

/// Three-term variant; m indexes the Z pair generator as in the witness,
/// with the cut placed at k = m-1.
LurReport lur_ghz_three(const DensityMatrix& rho, int n_qubits, int m);

/// Cluster-state counterpart at cut k; absent neighbours at the chain ends
/// are dropped from the correction observables.
LurReport lur_cluster(const DensityMatrix& rho, int n_qubits, int k);

/// Sum of squared means of pairwise-anticommuting +-1 observables; the value
/// is at most 1 on any state.
double anticommuting_mean_bound(const std::vector<HermitianOperator>& ops,
                                const DensityMatrix& rho);

}  // namespace stabwit

// Acceptance suite: one line per criterion, exit code = number of failures.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stabwit/entropic.hpp"
#include "stabwit/nonlinear.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/operators.hpp"
#include "stabwit/stabilizer.hpp"
#include "stabwit/states.hpp"
#include "stabwit/witnesses.hpp"

using namespace stabwit;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", number, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

HermitianOperator projector_from_group(const StabilizerGroup& g) {
  HermitianOperator prod = HermitianOperator::identity(g.n_qubits);
  for (const PauliString& s : g.generators) {
    prod = prod * half_sum_with_identity(HermitianOperator::from_pauli(s));
  }
  return prod;
}

HermitianOperator single_term(int n, const std::string& letters) {
  HermitianOperator op(n);
  op.add_term(letters, 1.0);
  return op;
}

bool witness_detects(const Witness& w, const DensityMatrix& rho) {
  return expectation(w.op, rho) < -1e-12;
}

double empirical_threshold(const Witness& w) {
  return noise_threshold_empirical(
      [&w](const DensityMatrix& rho) { return witness_detects(w, rho); }, w.target);
}

double cluster_genuine_threshold(int n) {
  const int a = (n + 1) / 2;
  const int b = n / 2;
  return 1.0 / (4.0 - 2.0 * (std::pow(2.0, -a) + std::pow(2.0, -b)));
}

// Mixed 3-qubit state found by randomized search; the two-term witness value
// is positive here while the squared-mean correction flips the sign.
DensityMatrix lur_fixture() {
  const double amps[8][2] = {
      {0.13363191424031773, -0.24206128039471636},
      {0.45978269504596003, -0.077854901093038567},
      {0.37052110671138377, 0.060593406114809074},
      {0.02899573820415547, 0.39473343732109184},
      {-0.085277821967880862, 0.014406468081215379},
      {0.015401457026185441, 0.054115231692696754},
      {0.23526071503950569, -0.064011128232137601},
      {-0.16575906057440939, -0.55759127846734569},
  };
  Eigen::VectorXcd v(8);
  for (int i = 0; i < 8; ++i) v(i) = Complex(amps[i][0], amps[i][1]);
  return DensityMatrix::from_pure(PureState{3, v});
}

void criterion_1() {
  bool ok = true;
  std::ostringstream bad;
  auto check = [&](const Witness& w, double expected) {
    const double analytic = noise_threshold_analytic(w);
    const bool row_ok = std::abs(analytic - expected) <= 1e-12 &&
                        std::abs(*w.analytic_noise_threshold - expected) <= 1e-12;
    if (!row_ok) bad << " " << w.name;
    ok = ok && row_ok;
  };
  for (int n = 3; n <= 8; ++n) {
    check(ghz_two_term(n), 0.5);
    check(ghz_three_term(n), 2.0 / 3.0);
    check(ghz_genuine_sum(n), 1.0 / n);
    check(ghz_genuine_two_settings(n), 1.0 / (3.0 - std::pow(2.0, 2 - n)));
    check(cluster_two_term(n), 0.5);
    check(cluster_three_term(n), 2.0 / 3.0);
    const double pow_k = std::pow(2.0, (n + 2) / 4);
    check(cluster_composite(n), pow_k / (pow_k + 1.0));
    check(cluster_genuine(n), cluster_genuine_threshold(n));
    ok = ok && cluster_genuine_threshold(n) > 0.25;
  }
  for (int n = 3; n <= 6; ++n) {
    check(ghz_projector(n), 1.0 / (2.0 - std::pow(2.0, 1 - n)));
  }
  check(mermin_witness3(), 0.5);
  check(rho3_witness(), 0.5);
  check(w3_projector_witness(), 8.0 / 21.0);
  check(w3_witness(), 4.0 / 15.0);
  check(w3_two_setting_witness(), (3.0 - std::sqrt(5.0)) / 4.0);
  check(ghz_genuine_two_settings(3), 0.4);
  check(cluster_genuine(4), 1.0 / 3.0);
  report(1, ok, ok ? "analytic noise thresholds match the closed forms to 1e-12"
                   : "analytic threshold mismatch:" + bad.str());
}

void criterion_2() {
  bool ok = true;
  double worst = 0.0;
  std::string worst_name;
  auto check = [&](const Witness& w) {
    const double gap = std::abs(empirical_threshold(w) - noise_threshold_analytic(w));
    if (gap > worst) {
      worst = gap;
      worst_name = w.name;
    }
    ok = ok && gap <= 1e-3;
  };
  for (int n = 3; n <= 8; ++n) {
    check(ghz_two_term(n));
    check(ghz_three_term(n));
    check(ghz_genuine_sum(n));
    check(ghz_genuine_two_settings(n));
    check(cluster_two_term(n));
    check(cluster_three_term(n));
    check(cluster_composite(n));
    check(cluster_genuine(n));
    check(graph_pair(Graph::star(n), 1, 2));
    check(graph_genuine(Graph::star(n)));
  }
  for (int n = 3; n <= 6; ++n) check(ghz_projector(n));
  check(mermin_witness3());
  check(rho3_witness());
  check(w3_projector_witness());
  check(w3_witness());
  check(w3_two_setting_witness());
  std::ostringstream detail;
  detail << "empirical vs analytic thresholds, worst |gap| = " << worst << " (" << worst_name
         << ")";
  report(2, ok, detail.str());
}

void criterion_3() {
  const OracleOptions options;
  bool ok = true;
  std::ostringstream bad;
  for (int n = 3; n <= 6; ++n) {
    const StabilizerGroup g = ghz_generators(n);
    HermitianOperator two = HermitianOperator::from_pauli(g.generators[0]);
    two += HermitianOperator::from_pauli(g.generators[1]);
    if (std::abs(max_over_product_states(two, options).value - 1.0) > 1e-4) {
      ok = false;
      bad << " product(S1+S2,n=" << n << ")";
    }
    if (std::abs(max_over_biseparable(projector_from_group(g), options).value - 0.5) > 1e-3) {
      ok = false;
      bad << " bisep(projector,n=" << n << ")";
    }
    if (std::abs(max_over_biseparable(mermin_operator(n), options).value - 0.5) > 1e-3) {
      ok = false;
      bad << " bisep(mermin,n=" << n << ")";
    }
  }
  const HermitianOperator wprime = w3_two_setting_witness().op;
  if (std::abs(min_over_biseparable_w3(wprime, options)) > 1e-4) {
    ok = false;
    bad << " bisep_min(W')";
  }
  if (std::abs(min_eigenvalue(wprime) - (std::sqrt(5.0) - 3.0)) > 1e-6) {
    ok = false;
    bad << " lambda_min(W')";
  }
  report(3, ok, ok ? "product/biseparable oracle maxima match the claimed bounds"
                   : "oracle bound mismatch:" + bad.str());
}

void criterion_4() {
  bool ok = true;
  double worst_eig = 0.0;
  for (int n = 3; n <= 8; ++n) {
    const HermitianOperator ghz_tilde =
        HermitianOperator::identity(n, 0.5) - projector_from_group(ghz_generators(n));
    const HermitianOperator cluster_tilde =
        HermitianOperator::identity(n, 0.5) - projector_from_group(cluster_generators(n));
    for (const auto& [w, tilde] :
         std::vector<std::pair<Witness, const HermitianOperator*>>{
             {ghz_genuine_sum(n), &ghz_tilde},
             {ghz_genuine_two_settings(n), &ghz_tilde},
             {cluster_genuine(n), &cluster_tilde}}) {
      const DominanceCertificate cert = check_dominance(w.op, *tilde, 2.0);
      worst_eig = std::min(worst_eig, cert.min_eigenvalue);
      ok = ok && cert.holds;
    }
  }
  double worst_proj = 0.0;
  for (int n = 3; n <= 6; ++n) {
    const Eigen::MatrixXcd sym = projector_from_group(ghz_generators(n)).to_dense();
    const PureState ghz = make_ghz(n);
    const Eigen::MatrixXcd dense = ghz.amplitudes * ghz.amplitudes.adjoint();
    worst_proj = std::max(worst_proj, (sym - dense).cwiseAbs().maxCoeff());
  }
  ok = ok && worst_proj <= 1e-12;
  std::ostringstream detail;
  detail << "dominance min eigenvalue >= " << worst_eig << ", projector identity gap "
         << worst_proj;
  report(4, ok, detail.str());
}

void criterion_5() {
  bool ok = true;
  for (int n = 3; n <= 10; ++n) {
    const double noise = optimal_two_setting_noise(2.0, std::pow(2.0, n - 1));
    ok = ok && std::abs(noise - 1.0 / (3.0 - std::pow(2.0, 2 - n))) <= 1e-12;
  }
  for (int n = 3; n <= 8; ++n) {
    const double d1 = std::pow(2.0, (n + 1) / 2);
    const double d2 = std::pow(2.0, n / 2);
    ok = ok && std::abs(optimal_two_setting_noise(d1, d2) - cluster_genuine_threshold(n)) <= 1e-12;
  }
  ok = ok && std::abs(optimal_two_setting_noise(4.0, 4.0) - 1.0 / 3.0) <= 1e-12;

  // Lemma 1: cluster-group elements containing different neighbour generators
  // are never measurable within one local setting.
  long cross_pairs = 0;
  bool incompatible = true;
  for (int n = 3; n <= 6 && incompatible; ++n) {
    const StabilizerGroup g = cluster_generators(n);
    const std::vector<PauliString> elements = enumerate_group(g);
    for (int l = 1; l < n; ++l) {
      std::vector<std::vector<PauliString>> classes(3);
      for (unsigned long k = 1; k < elements.size(); ++k) {
        const bool has_l = (k >> (n - l)) & 1;
        const bool has_l1 = (k >> (n - l - 1)) & 1;
        if (has_l && !has_l1) classes[0].push_back(elements[k]);
        if (!has_l && has_l1) classes[1].push_back(elements[k]);
        if (has_l && has_l1) classes[2].push_back(elements[k]);
      }
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
          for (const PauliString& p : classes[a]) {
            for (const PauliString& q : classes[b]) {
              ++cross_pairs;
              incompatible = incompatible && !commutes_locally(p, q);
            }
          }
        }
      }
    }
  }
  ok = ok && incompatible;
  std::ostringstream detail;
  detail << "two-setting noise formulas exact; " << cross_pairs
         << " cross-class pairs locally incompatible";
  report(5, ok, detail.str());
}

void criterion_6() {
  bool ok = true;
  double worst = 0.0;
  for (int n = 3; n <= 6; ++n) {
    const PureState ghz = make_ghz(n);
    const HermitianOperator bound_op = fidelity_bound_operator(StabilizerFamily::Ghz, n);
    for (int step = 0; step <= 9; ++step) {
      const double p = 0.1 * step;
      const DensityMatrix rho = mix_with_white_noise(ghz, p);
      const double f = fidelity_with_pure(ghz, rho);
      const double fprime = expectation(bound_op, rho);
      worst = std::max(worst, std::abs(f - (1.0 - p * (1.0 - std::pow(2.0, -n)))));
      worst = std::max(worst, std::abs(fprime - (1.0 - p * (1.5 - std::pow(2.0, 1 - n)))));
      ok = ok && fprime <= f + 1e-12;
    }
  }
  ok = ok && worst <= 1e-10;
  std::ostringstream detail;
  detail << "fidelity closed forms, worst gap " << worst << ", F' <= F throughout";
  report(6, ok, detail.str());
}

void criterion_7() {
  bool ok = true;
  double worst_total = 0.0;
  for (int n : {3, 4}) {
    std::mt19937_64 rng(0xACCE7 + static_cast<std::uint64_t>(n));
    for (int i = 0; i < 5000; ++i) {
      const DensityMatrix rho = DensityMatrix::from_pure(random_product_state(n, rng));
      for (int k = 1; k < n; ++k) {
        const LurReport r = lur_ghz(rho, n, k);
        worst_total = std::min(worst_total, r.total);
        ok = ok && r.total >= -1e-9 && r.correction >= 0.0;
      }
    }
  }
  const DensityMatrix fx = lur_fixture();
  const LurReport r = lur_ghz(fx, 3, 1);
  ok = ok && r.detected && r.linear_part > 0.0 && !witness_detects(ghz_two_term(3), fx);

  const std::vector<HermitianOperator> anti = {single_term(3, "XXX"), single_term(3, "ZII"),
                                               single_term(3, "YII")};
  double worst_sum = 0.0;
  std::mt19937_64 rng(0xA117);
  for (int i = 0; i < 10000; ++i) {
    const double s =
        anticommuting_mean_bound(anti, DensityMatrix::from_pure(random_pure_state(3, rng)));
    worst_sum = std::max(worst_sum, s);
  }
  ok = ok && worst_sum <= 1.0 + 1e-9;
  std::ostringstream detail;
  detail << "LUR total >= " << worst_total << " on product states, fixture detected, "
         << "anticommuting sum <= " << worst_sum;
  report(7, ok, detail.str());
}

void criterion_8() {
  bool ok = std::abs(eur_bound(single_term(1, "X"), single_term(1, "Y")) - std::log(2.0)) <= 1e-10;
  for (int n = 3; n <= 5; ++n) {
    ok = ok && eur_criterion_ghz(DensityMatrix::from_pure(make_ghz(n)), n).lhs <= 1e-9;
    ok = ok && eur_criterion_cluster(DensityMatrix::from_pure(make_cluster(n)), n).lhs <= 1e-9;
  }
  double worst_lhs = 1e9;
  for (int n : {3, 4}) {
    std::mt19937_64 rng(0xE4 + static_cast<std::uint64_t>(n));
    for (int i = 0; i < 5000; ++i) {
      const DensityMatrix rho = DensityMatrix::from_pure(random_biseparable_state(n, rng));
      worst_lhs = std::min(worst_lhs, eur_criterion_ghz(rho, n).lhs);
      worst_lhs = std::min(worst_lhs, eur_criterion_cluster(rho, n).lhs);
    }
  }
  ok = ok && worst_lhs >= std::log(2.0) - 1e-9;
  double t3 = 0.0, t4 = 0.0;
  {
    t3 = noise_threshold_empirical(
        [](const DensityMatrix& rho) { return eur_criterion_ghz(rho, 3).detected; }, make_ghz(3));
    t4 = noise_threshold_empirical(
        [](const DensityMatrix& rho) { return eur_criterion_ghz(rho, 4).detected; }, make_ghz(4));
  }
  ok = ok && std::abs(t3 - 0.123) <= 5e-3 && std::abs(t4 - 0.083) <= 5e-3;
  std::ostringstream detail;
  detail << "entropy bound ln 2, biseparable lhs >= " << worst_lhs << ", thresholds " << t3
         << " / " << t4;
  report(8, ok, detail.str());
}

void criterion_9() {
  const Eigen::MatrixXcd u = w3_preparation_unitary();
  const PureState w3 = make_w3();
  bool ok = (u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-10;
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(8);
  zero(0) = 1.0;
  ok = ok && (u * zero - w3.amplitudes).cwiseAbs().maxCoeff() <= 1e-10;
  const std::vector<HermitianOperator> ops = w3_stabilizing_ops();
  Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(8, 8);
  for (const HermitianOperator& s : ops) {
    const Eigen::MatrixXcd dense = s.to_dense();
    ok = ok && (dense * w3.amplitudes - w3.amplitudes).cwiseAbs().maxCoeff() <= 1e-10;
    product = product * dense;
  }
  ok = ok && (product + single_term(3, "ZZZ").to_dense()).cwiseAbs().maxCoeff() <= 1e-12;
  report(9, ok, "W3 preparation unitary, stabilizing operators, and S1S2S3 = -ZZZ verified");
}

void criterion_10() {
  auto settings = [](const Witness& w) {
    return static_cast<int>(partition_into_settings(w.op).setting_count());
  };
  bool counts_ok = settings(ghz_two_term(3)) == 2 && settings(ghz_three_term(3)) == 3 &&
                   settings(ghz_genuine_two_settings(3)) == 2 &&
                   settings(cluster_genuine(4)) == 2 && settings(w3_witness()) == 3;
  const int projector_settings = settings(w3_projector_witness());
  const bool ok = counts_ok && projector_settings <= 5;
  std::ostringstream detail;
  if (ok) {
    detail << "setting counts match";
  } else if (counts_ok) {
    detail << "named witnesses need 2/3/2/2/3 settings as claimed, but the W3 projector "
           << "decomposition needs " << projector_settings
           << " Pauli settings (> 5); its six weight-3 mixed terms plus ZZZ are pairwise "
           << "locally incompatible, so no Pauli-product partition reaches 5";
  } else {
    detail << "setting-count mismatch among the named witnesses";
  }
  report(10, ok, detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", failures);
  }
  return failures;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "stabwit/oracle.hpp"
#include "stabwit/stabilizer.hpp"
#include "stabwit/witnesses.hpp"

using namespace stabwit;

namespace {

HermitianOperator ghz_pair_sum(int n, int m = 2) {
  const StabilizerGroup g = ghz_generators(n);
  HermitianOperator op = HermitianOperator::from_pauli(g.generators[0]);
  op += HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(m - 1)]);
  return op;
}

HermitianOperator ghz_projector_op(int n) {
  HermitianOperator prod = HermitianOperator::identity(n);
  for (const PauliString& s : ghz_generators(n).generators) {
    prod = prod * half_sum_with_identity(HermitianOperator::from_pauli(s));
  }
  return prod;
}

/// Brute-force Bloch-angle grid scan; independent of the ascent code path.
double grid_scan_max(const HermitianOperator& op, int points) {
  const int n = op.n_qubits();
  std::vector<Eigen::Vector2cd> site_states;
  for (int t = 0; t <= points; ++t) {
    const double theta = std::numbers::pi * t / points;
    for (int f = 0; f < points; ++f) {
      const double phi = 2.0 * std::numbers::pi * f / points;
      site_states.emplace_back(std::cos(theta / 2.0),
                               std::polar(std::sin(theta / 2.0), phi));
    }
  }
  double best = -1e300;
  std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Vector2cd> kets(static_cast<std::size_t>(n), site_states[0]);
  while (true) {
    for (int k = 0; k < n; ++k) kets[static_cast<std::size_t>(k)] = site_states[index[static_cast<std::size_t>(k)]];
    best = std::max(best, expectation_product(op, kets));
    int k = n - 1;
    while (k >= 0 && ++index[static_cast<std::size_t>(k)] == site_states.size()) {
      index[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return best;
}

}  // namespace

TEST_CASE("product-state maxima of stabilizer sums") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(max_over_product_states(ghz_pair_sum(n)).value == doctest::Approx(1.0).epsilon(1e-6));
  }
  const StabilizerGroup g = ghz_generators(4);
  HermitianOperator three = ghz_pair_sum(4, 2);
  three += HermitianOperator::from_pauli(g.generators[0] * g.generators[1]);
  CHECK(max_over_product_states(three).value == doctest::Approx(1.0).epsilon(1e-6));

  HermitianOperator zz(2);
  zz.add_term("ZZ", 1.0);
  CHECK(max_over_product_states(zz).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("coordinate ascent agrees with an independent grid scan") {
  const std::vector<HermitianOperator> ops = {ghz_pair_sum(3), w3_two_setting_witness().op,
                                              mermin_operator(3)};
  for (const HermitianOperator& op : ops) {
    const double ascended = max_over_product_states(op).value;
    const double gridded = grid_scan_max(op, 12);
    CHECK(ascended >= gridded - 1e-9);
    CHECK(std::abs(ascended - gridded) < 1e-3);
  }
  const HermitianOperator four = ghz_pair_sum(4);
  const double ascended = max_over_product_states(four).value;
  const double gridded = grid_scan_max(four, 8);
  CHECK(ascended >= gridded - 1e-9);
  CHECK(std::abs(ascended - gridded) < 1e-3);
}

TEST_CASE("biseparable maxima") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(max_over_biseparable(ghz_projector_op(n)).value == doctest::Approx(0.5).epsilon(2e-3));
    CHECK(max_over_biseparable(mermin_operator(n)).value == doctest::Approx(0.5).epsilon(2e-3));
  }
  // product states are biseparable, so the biseparable maximum dominates
  const HermitianOperator op = ghz_pair_sum(3);
  CHECK(max_over_biseparable(op).value >= max_over_product_states(op).value - 1e-9);
}

TEST_CASE("W3 two-setting witness minima") {
  const HermitianOperator wprime = w3_two_setting_witness().op;
  CHECK(std::abs(min_over_biseparable_w3(wprime)) < 1e-4);
  CHECK(min_eigenvalue(wprime) == doctest::Approx(std::sqrt(5.0) - 3.0).epsilon(1e-6));
  CHECK(w3_prime_lambda_min(0.0, 0.0) == doctest::Approx(std::sqrt(5.0) - 1.0).epsilon(1e-12));
  double disk_min = 1e300;
  for (int i = 0; i <= 200; ++i) {
    const double r = i / 200.0;
    disk_min = std::min(disk_min, w3_prime_lambda_min(r, 0.0));
  }
  CHECK(std::abs(disk_min) < 1e-12);
}

TEST_CASE("dominance certificates") {
  CHECK(min_eigenvalue(HermitianOperator::identity(3)) == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 3; n <= 6; ++n) {
    const HermitianOperator tilde =
        HermitianOperator::identity(n, 0.5) - ghz_projector_op(n);
    CHECK(check_dominance(ghz_genuine_sum(n).op, tilde, 2.0).holds);
    CHECK(check_dominance(ghz_genuine_two_settings(n).op, tilde, 2.0).holds);
  }
}

TEST_CASE("analytic vs empirical noise thresholds") {
  for (const Witness& w : {ghz_two_term(4), ghz_genuine_two_settings(4), cluster_genuine(5),
                           w3_witness(), rho3_witness()}) {
    const double analytic = noise_threshold_analytic(w);
    const double empirical = noise_threshold_empirical(
        [&w](const DensityMatrix& rho) { return expectation(w.op, rho) < -1e-12; }, w.target);
    CHECK(std::abs(analytic - empirical) < 1e-3);
  }
  Witness never = ghz_two_term(3);
  never.op = HermitianOperator::identity(3);  // positive everywhere
  CHECK_THROWS(noise_threshold_analytic(never));
}

TEST_CASE("two-setting optimality formula") {
  for (int n = 3; n <= 10; ++n) {
    const double from_subgroups = optimal_two_setting_noise(2.0, std::pow(2.0, n - 1));
    CHECK(std::abs(from_subgroups - 1.0 / (3.0 - std::pow(2.0, 2 - n))) < 1e-12);
  }
  CHECK(optimal_two_setting_noise(4.0, 4.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(optimal_two_setting_noise(1e12, 1e12) == doctest::Approx(0.25).epsilon(1e-6));
  // cluster subgroup dimensions reproduce the genuine-witness thresholds
  for (int n = 4; n <= 8; ++n) {
    const double d1 = std::pow(2.0, (n + 1) / 2);
    const double d2 = std::pow(2.0, n / 2);
    CHECK(std::abs(optimal_two_setting_noise(d1, d2) -
                   *cluster_genuine(n).analytic_noise_threshold) < 1e-12);
  }
}

TEST_CASE("oracles are deterministic for a fixed seed") {
  OracleOptions options;
  options.seed = 42;
  const HermitianOperator op = mermin_operator(3);
  const OptimizationResult a = max_over_biseparable(op, options);
  const OptimizationResult b = max_over_biseparable(op, options);
  CHECK(a.value == b.value);
  CHECK(a.argmax_description == b.argmax_description);
}

TEST_CASE("witness soundness: non-constant part never beats the constant term") {
  for (const Witness& w : {ghz_two_term(3), ghz_three_term(3), cluster_two_term(4),
                           w3_two_setting_witness()}) {
    const double c0 = w.op.coefficient(std::string(static_cast<std::size_t>(w.op.n_qubits()), 'I'));
    HermitianOperator rest = w.op;
    rest.add_term(std::string(static_cast<std::size_t>(w.op.n_qubits()), 'I'), -c0);
    rest *= -1.0;  // witnesses enter as c0*1 - (detection part)
    CHECK(max_over_product_states(rest).value <= c0 + 1e-6);
  }
}

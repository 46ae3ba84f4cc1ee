#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "stabwit/oracle.hpp"
#include "stabwit/stabilizer.hpp"
#include "stabwit/witnesses.hpp"

using namespace stabwit;

namespace {

double on_target(const Witness& w) { return expectation(w.op, w.target); }

void check_nonnegative_on_product_states(const Witness& w, int samples) {
  std::mt19937_64 rng(0xFEED ^ static_cast<std::uint64_t>(w.op.n_qubits()));
  for (int i = 0; i < samples; ++i) {
    const auto kets = random_product_kets(w.op.n_qubits(), rng);
    CHECK(expectation_product(w.op, kets) >= -1e-9);
  }
}

void check_nonnegative_on_biseparable(const Witness& w, int samples) {
  std::mt19937_64 rng(0xBEEF ^ static_cast<std::uint64_t>(w.op.n_qubits()));
  for (int i = 0; i < samples; ++i) {
    const PureState psi = random_biseparable_state(w.op.n_qubits(), rng);
    CHECK(expectation(w.op, psi) >= -1e-9);
  }
}

}  // namespace

TEST_CASE("GHZ witnesses hit their target expectations and thresholds") {
  for (int n = 3; n <= 6; ++n) {
    const Witness two = ghz_two_term(n);
    CHECK(on_target(two) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(noise_threshold_analytic(two) == doctest::Approx(0.5).epsilon(1e-12));

    const Witness three = ghz_three_term(n);
    CHECK(on_target(three) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(noise_threshold_analytic(three) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    const Witness sum = ghz_genuine_sum(n);
    CHECK(on_target(sum) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(noise_threshold_analytic(sum) == doctest::Approx(1.0 / n).epsilon(1e-12));

    const Witness best = ghz_genuine_two_settings(n);
    CHECK(on_target(best) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(noise_threshold_analytic(best) ==
          doctest::Approx(1.0 / (3.0 - std::pow(2.0, 2 - n))).epsilon(1e-12));
  }
  CHECK(*ghz_genuine_two_settings(3).analytic_noise_threshold == doctest::Approx(0.4));
  CHECK_THROWS(ghz_two_term(4, 1));
  CHECK_THROWS(ghz_two_term(4, 5));
}

TEST_CASE("three-term witness contains the -YYX cross term for N=3") {
  const Witness w = ghz_three_term(3, 2);
  CHECK(w.op.coefficient("YYX") == doctest::Approx(1.0));  // -(S1 S2) = +YYX
  CHECK(w.op.coefficient("XXX") == doctest::Approx(-1.0));
  CHECK(w.op.coefficient("ZZI") == doctest::Approx(-1.0));
}

TEST_CASE("two-settings witness equals its projector form") {
  for (int n = 3; n <= 5; ++n) {
    const long dim = 1L << n;
    Eigen::MatrixXcd expected = 2.0 * Eigen::MatrixXcd::Identity(dim, dim);
    expected -= to_dense(PauliString(std::vector<Pauli>(n, Pauli::X)));
    expected(0, 0) -= 2.0;
    expected(dim - 1, dim - 1) -= 2.0;
    CHECK((ghz_genuine_two_settings(n).op.to_dense() - expected).norm() < 1e-12);

    // the Z-generator half-product is the projector onto the repetition span
    const StabilizerGroup g = ghz_generators(n);
    HermitianOperator tail = HermitianOperator::identity(n);
    for (int k = 2; k <= n; ++k) {
      tail = tail * half_sum_with_identity(
                        HermitianOperator::from_pauli(g.generators[static_cast<std::size_t>(k - 1)]));
    }
    Eigen::MatrixXcd span = Eigen::MatrixXcd::Zero(dim, dim);
    span(0, 0) = 1.0;
    span(dim - 1, dim - 1) = 1.0;
    CHECK((tail.to_dense() - span).norm() < 1e-12);
  }
}

TEST_CASE("GHZ projector witness via the stabilizer product") {
  for (int n = 3; n <= 6; ++n) {
    const StabilizerGroup g = ghz_generators(n);
    HermitianOperator prod = HermitianOperator::identity(n);
    for (const PauliString& s : g.generators) {
      prod = prod * half_sum_with_identity(HermitianOperator::from_pauli(s));
    }
    CHECK(prod.term_count() == (1UL << n));
    CHECK(prod.normalized_trace() * std::pow(2.0, n) == doctest::Approx(1.0).epsilon(1e-12));
    const PureState ghz = make_ghz(n);
    const Eigen::MatrixXcd dense_projector = ghz.amplitudes * ghz.amplitudes.adjoint();
    CHECK((prod.to_dense() - dense_projector).norm() < 1e-12);

    const Witness w = ghz_projector(n);
    CHECK(on_target(w) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(noise_threshold_analytic(w) ==
          doctest::Approx(1.0 / (2.0 - std::pow(2.0, 1 - n))).epsilon(1e-12));
  }
}

TEST_CASE("Mermin operator equals the two-corner flip operator") {
  for (int n = 3; n <= 5; ++n) {
    const Eigen::MatrixXcd dense = mermin_operator(n).to_dense();
    const long dim = 1L << n;
    Eigen::MatrixXcd flip = Eigen::MatrixXcd::Zero(dim, dim);
    flip(0, dim - 1) = 1.0;
    flip(dim - 1, 0) = 1.0;
    CHECK((dense - flip).norm() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues()(dim - 1) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const Witness w = mermin_witness3();
  CHECK(on_target(w) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(noise_threshold_analytic(w) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.op.coefficient("XXX") == doctest::Approx(-1.0));
  CHECK(w.op.coefficient("YYX") == doctest::Approx(1.0));
}

TEST_CASE("cluster witnesses") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(on_target(cluster_two_term(n, k)) == doctest::Approx(-1.0).epsilon(1e-12));
      const Witness three = cluster_three_term(n, k);
      CHECK(on_target(three) == doctest::Approx(-2.0).epsilon(1e-12));
      CHECK(noise_threshold_analytic(three) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
      int support = 0;
      for (const auto& [letters, coeff] : three.op.terms()) {
        (void)coeff;
        int lo = n, hi = -1;
        for (int s = 0; s < n; ++s) {
          if (letters[static_cast<std::size_t>(s)] != 'I') {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
          }
        }
        if (hi >= 0) support = std::max(support, hi - lo + 1);
      }
      CHECK(support <= 4);
    }
  }
  CHECK(noise_threshold_analytic(cluster_composite(2)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(noise_threshold_analytic(cluster_composite(6)) == doctest::Approx(0.8).epsilon(1e-12));
  for (int n = 3; n <= 8; ++n) {
    const int blocks = (n + 2) / 4;
    CHECK(on_target(cluster_composite(n)) ==
          doctest::Approx(std::pow(2.0, blocks) - std::pow(4.0, blocks)).epsilon(1e-12));
    const double threshold = noise_threshold_analytic(cluster_genuine(n));
    CHECK(threshold > 0.25);
    CHECK(on_target(cluster_genuine(n)) == doctest::Approx(-1.0).epsilon(1e-12));
  }
  CHECK(noise_threshold_analytic(cluster_genuine(4)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("composite witness blocks act on disjoint qubits") {
  for (int n : {2, 6, 8}) {
    const StabilizerGroup g = cluster_generators(n);
    const int blocks = (n + 2) / 4;
    int previous_end = -1;
    for (int b = 0; b < blocks; ++b) {
      int lo = n, hi = -1;
      for (int idx : {4 * b, 4 * b + 1}) {
        const PauliString& s = g.generators[static_cast<std::size_t>(idx)];
        for (int site = 0; site < n; ++site) {
          if (s.letter(site) != Pauli::I) {
            lo = std::min(lo, site);
            hi = std::max(hi, site);
          }
        }
      }
      CHECK(lo > previous_end);
      previous_end = hi;
    }
  }
}

TEST_CASE("graph witnesses") {
  const Graph star = Graph::star(5);
  const Witness pair = graph_pair(star, 1, 2);
  CHECK(on_target(pair) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(noise_threshold_analytic(pair) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS(graph_pair(star, 2, 3));  // leaves are not adjacent

  const Witness genuine = graph_genuine(star);
  CHECK(on_target(genuine) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(noise_threshold_analytic(genuine) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(genuine.claimed_settings == 2);  // star graphs are two-colorable

  // the path graph reproduces the cluster constructions
  const Graph path = Graph::path(4);
  CHECK(graph_pair(path, 1, 2).op.to_dense().isApprox(cluster_two_term(4, 1).op.to_dense(), 1e-12));
  CHECK(graph_genuine(path).claimed_settings == 2);
}

TEST_CASE("three-qubit special witnesses") {
  const Witness rho3 = rho3_witness();
  CHECK(expectation(rho3.op, rho3.target) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(noise_threshold_analytic(rho3) == doctest::Approx(0.5).epsilon(1e-12));
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(8);
  zero(0) = 1.0;
  CHECK(expectation(rho3.op, PureState{3, zero}) >= 0.0);

  const Witness proj = w3_projector_witness();
  CHECK(on_target(proj) == doctest::Approx(-1.0 / 3.0).epsilon(1e-10));
  CHECK(noise_threshold_analytic(proj) == doctest::Approx(8.0 / 21.0).epsilon(1e-10));

  const Witness w = w3_witness();
  CHECK(on_target(w) == doctest::Approx(-4.0 / 3.0).epsilon(1e-10));
  CHECK(noise_threshold_analytic(w) == doctest::Approx(4.0 / 15.0).epsilon(1e-10));

  const Witness two = w3_two_setting_witness();
  CHECK(on_target(two) == doctest::Approx(std::sqrt(5.0) - 3.0).epsilon(1e-10));
  CHECK(noise_threshold_analytic(two) ==
        doctest::Approx((3.0 - std::sqrt(5.0)) / 4.0).epsilon(1e-10));
}

TEST_CASE("full-separability witnesses are nonnegative on random product states") {
  for (const Witness& w : {ghz_two_term(3), ghz_three_term(4), cluster_two_term(4),
                           cluster_three_term(5), cluster_composite(6), rho3_witness()}) {
    check_nonnegative_on_product_states(w, 2000);
  }
}

TEST_CASE("genuine-multipartite witnesses are nonnegative on random biseparable states") {
  for (const Witness& w :
       {ghz_genuine_sum(3), ghz_genuine_two_settings(4), mermin_witness3(), cluster_genuine(4),
        w3_projector_witness(), w3_witness(), w3_two_setting_witness()}) {
    check_nonnegative_on_biseparable(w, 2000);
  }
}

TEST_CASE("fidelity bound operator closed forms") {
  for (int n = 3; n <= 6; ++n) {
    const PureState ghz = make_ghz(n);
    const HermitianOperator bound = fidelity_bound_operator(StabilizerFamily::Ghz, n);
    for (double p : {0.0, 0.2, 0.5, 0.9}) {
      const DensityMatrix rho = mix_with_white_noise(ghz, p);
      const double fprime = expectation(bound, rho);
      const double f = fidelity_with_pure(ghz, rho);
      CHECK(fprime == doctest::Approx(1.0 - p * (1.5 - std::pow(2.0, 1 - n))).epsilon(1e-10));
      CHECK(fprime <= f + 1e-12);
    }
  }
}

#include <doctest.h>

#include <cmath>

#include "fermitrap/bcs_model.hpp"
#include "fermitrap/entanglement.hpp"
#include "fermitrap/oracle.hpp"
#include "fermitrap/spin_density.hpp"
#include "test_support.hpp"

using namespace fermitrap;
using namespace fermitrap::test;

namespace {
double max_diff(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void check_valid(const TwoSpinDensityMatrix<double>& rho, bool symmetric_x) {
  CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
  CHECK(max_diff(rho.matrix(), rho.matrix().transpose()) == 0.0);
  CHECK(rho.min_eigenvalue() >= -1e-12);
  if (symmetric_x) CHECK(rho.is_symmetric_x_state());
}
}  // namespace

TEST_CASE("validated construction") {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity() / 4.0;
  CHECK_NOTHROW(TwoSpinDensityMatrix<double>{m});

  Eigen::Matrix4d asym = m;
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(TwoSpinDensityMatrix<double>{asym}, InvalidStateError);

  CHECK_THROWS_AS(TwoSpinDensityMatrix<double>{2.0 * m}, InvalidStateError);

  Eigen::Matrix4d neg = Eigen::Vector4d(0.6, 0.5, 0.0, -0.1).asDiagonal();
  CHECK_THROWS_AS(TwoSpinDensityMatrix<double>{neg}, InvalidStateError);
}

TEST_CASE("rho_even at coincidence is the singlet projector") {
  for (int n : {2, 10, 40}) {
    const auto k = pair_kernels(TrapConfiguration::from_particles(n), 0.8, 0.8);
    const auto rho = rho_even(k);
    check_valid(rho, true);
    CHECK(max_diff(rho.matrix(), singlet()) < 1e-15);
  }
}

TEST_CASE("rho_even with zero overlap is maximally mixed") {
  const auto rho = rho_even(PairKernels<double>{0.0, 1.0, 1.0});
  CHECK(max_diff(rho.matrix(), Eigen::Matrix4d::Identity() / 4.0) == 0.0);
}

TEST_CASE("rho_even matches the Fock oracle at M=10") {
  const auto cfg = TrapConfiguration::from_particles(20);
  const auto rho = rho_even(pair_kernels(cfg, 0.5, 1.5));
  check_valid(rho, true);
  oracle::FockOptions opts;
  opts.level_limit = 10;
  const auto fock = oracle::fock_rho(cfg, 0.5, 1.5, opts);
  CHECK(max_diff(rho.matrix(), fock.normalized.matrix()) < 1e-10);
}

TEST_CASE("rho_even degenerate far outside the cloud") {
  const auto k = pair_kernels(TrapConfiguration::from_particles(4), 40.0, 41.0);
  CHECK_THROWS_AS(rho_even(k), DegeneratePointError);
  CHECK_THROWS_AS(rho_even(PairKernels<double>{0.0, 0.0, 0.0}), DegeneratePointError);
}

TEST_CASE("rho_odd at the origin for N=3 is the singlet") {
  const auto cfg = TrapConfiguration::from_particles(3);
  const auto rho = rho_odd(cfg, 0.0, 0.0);
  check_valid(rho, true);
  const auto even = rho_even(pair_kernels(TrapConfiguration::from_particles(2), 0.0, 0.0));
  CHECK(max_diff(rho.matrix(), even.matrix()) < 1e-15);
}

TEST_CASE("rho_odd for N=21 at coincidence is near maximal") {
  const auto rho = rho_odd(TrapConfiguration::from_particles(21), 0.5, 0.5);
  check_valid(rho, false);
  const double c = wootters_concurrence(rho).value;
  CHECK(c > 0.95);
  CHECK(c <= 1.0);
}

TEST_CASE("rho_odd stays valid and X-shaped off coincidence") {
  for (int n : {3, 5, 9, 21})
    for (double xp : linspace(-2.0, 2.0, 9)) {
      const auto rho = rho_odd(TrapConfiguration::from_particles(n), 0.4, xp);
      check_valid(rho, false);
      CHECK(rho.is_x_state());
    }
}

TEST_CASE("rho_odd(21) and rho_even(20) concurrences agree on the 11x11 grid") {
  const auto odd = TrapConfiguration::from_particles(21);
  const auto even = TrapConfiguration::from_particles(20);
  double worst = 0.0;
  for (double x : linspace(-2.0, 2.0, 11))
    for (double xp : linspace(-2.0, 2.0, 11))
      worst = std::max(worst, std::abs(wootters_concurrence(rho_odd(odd, x, xp)).value -
                                       concurrence_pair(pair_kernels(even, x, xp)).value));
  CHECK(worst < 0.1);
}

TEST_CASE("rho_bcs examples") {
  CHECK(max_diff(rho_bcs(1.0, 1.0).matrix(), singlet()) < 1e-15);
  CHECK(max_diff(rho_bcs(1.0, 0.0).matrix(), Eigen::Matrix4d::Identity() / 4.0) == 0.0);
  // Uniform overlap with |y|^2 = Q/M.
  const double q = 4.0;
  const int m = 8;
  const auto rho = rho_bcs(q, uniform_overlap_re_fv2(0.5, q, m));
  check_valid(rho, true);
  CHECK(wootters_concurrence(rho).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rho_bcs errors") {
  CHECK_THROWS_AS(rho_bcs(0.0, 0.0), DegeneratePointError);
  CHECK_THROWS_AS(rho_bcs(1.0, 2.0), DegeneratePointError);
  CHECK_THROWS_AS(rho_bcs(1.0, 1.5), InvalidKernelError);
}

TEST_CASE("concurrence is 1 at coincidence for every M <= 50") {
  for (int m = 1; m <= 50; ++m) {
    const auto cfg = TrapConfiguration::from_particles(2 * m);
    for (double xi : linspace(-4.0, 4.0, 17)) {
      const auto rho = rho_even(pair_kernels(cfg, xi, xi));
      CHECK(wootters_concurrence(rho).value == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("exchanging the positions leaves the state invariant") {
  for (int n : {4, 10, 21})
    for (auto [x, xp] : {std::pair{0.2, 1.3}, std::pair{-1.0, 0.5}}) {
      const auto cfg = TrapConfiguration::from_particles(n);
      const auto a = cfg.parity() == Parity::even ? rho_even(pair_kernels(cfg, x, xp))
                                                  : rho_odd(cfg, x, xp);
      const auto b = cfg.parity() == Parity::even ? rho_even(pair_kernels(cfg, xp, x))
                                                  : rho_odd(cfg, xp, x);
      CHECK(max_diff(swap_conjugate(a.matrix()), b.matrix()) < 1e-14);
      if (cfg.parity() == Parity::even) CHECK(max_diff(swap_conjugate(a.matrix()), a.matrix()) < 1e-15);
    }
}

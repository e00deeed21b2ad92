#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "etastrip/series.hpp"
#include "oracles.hpp"

using namespace etastrip;

TEST_CASE("StripPoint validates the open strip") {
  CHECK_THROWS_AS(StripPoint(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(StripPoint(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(StripPoint(-0.3, 1.0), DomainError);
  const StripPoint p(0.5, -2.0);
  CHECK(p.value() == Cplx(0.5, -2.0));
}

TEST_CASE("eta at closed-form points") {
  const SeriesValue one = eta(Cplx(1.0, 0.0), 1e-13);
  CHECK(std::abs(one.value.real() - std::numbers::ln2) < 1e-13);
  CHECK(std::abs(one.value.imag()) < 1e-15);
  CHECK(one.error_bound <= 1e-13);

  const SeriesValue two = eta(Cplx(2.0, 0.0), 1e-13);
  CHECK(std::abs(two.value.real() - kPi * kPi / 12.0) < 1e-13);

  CHECK_THROWS_AS(eta(Cplx(-1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(eta(Cplx(0.0, 5.0)), DomainError);
  CHECK_THROWS_AS(eta(Cplx(0.5, 0.0), -1.0), DomainError);
}

TEST_CASE("eta(1/2) against both targets") {
  const SeriesValue v = eta(Cplx(0.5, 0.0), 1e-12);
  // quoted figure (0.60440) is ~5e-4 away from the true value; both facts
  // are part of the contract.
  CHECK(std::abs(v.value.real() - 0.60440) < 1e-3);
  CHECK(std::abs(v.value.real() - oracles::kEtaHalf) < 1e-11);
  const Cplx indep = oracles::eta_euler_averaging(Cplx(0.5, 0.0));
  CHECK(std::abs(v.value.real() - indep.real()) < 1e-9);
}

TEST_CASE("eta vanishes at the first critical zero") {
  const SeriesValue v = eta(Cplx(0.5, oracles::kFirstZeros[0]), 1e-10);
  CHECK(std::abs(v.value) < 1e-8);
}

TEST_CASE("eta against the Euler-averaging oracle on the strip") {
  // The averaging oracle itself converges like ~2^-levels degraded by
  // oscillation, so keep beta moderate and the tolerance above its floor.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> a_dist(0.1, 0.95);
  std::uniform_real_distribution<double> b_dist(-15.0, 15.0);
  for (int i = 0; i < 40; ++i) {
    const Cplx s(a_dist(rng), b_dist(rng));
    const Cplx accelerated = eta(s, 1e-12).value;
    const Cplx reference = oracles::eta_euler_averaging(s, 64);
    CHECK(std::abs(accelerated - reference) < 1e-9);
  }
}

TEST_CASE("eta against plain partial summation for Re s >= 2") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> a_dist(2.0, 5.0);
  std::uniform_real_distribution<double> b_dist(-40.0, 40.0);
  for (int i = 0; i < 5; ++i) {
    const Cplx s(a_dist(rng), b_dist(rng));
    const Cplx slow = oracles::eta_partial_sum(s, 1000000);
    const Cplx fast = eta(s, 1e-12).value;
    CHECK(std::abs(slow - fast) < 1e-8);
  }
}

TEST_CASE("acceleration consistency between tolerances") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> a_dist(0.1, 0.9);
  std::uniform_real_distribution<double> b_dist(-60.0, 60.0);
  for (int i = 0; i < 200; ++i) {
    const Cplx s(a_dist(rng), b_dist(rng));
    const Cplx coarse = eta(s, 1e-10).value;
    const Cplx fine = eta(s, 1e-12).value;
    CHECK(std::abs(coarse - fine) < 2e-10);
  }
}

TEST_CASE("conjugate symmetry") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> a_dist(0.1, 0.9);
  std::uniform_real_distribution<double> b_dist(0.0, 60.0);
  for (int i = 0; i < 50; ++i) {
    const Cplx s(a_dist(rng), b_dist(rng));
    const Cplx direct = eta(std::conj(s), 1e-10).value;
    const Cplx mirrored = std::conj(eta(s, 1e-10).value);
    CHECK(std::abs(direct - mirrored) < 2e-10);
  }
}

TEST_CASE("eta error bound is honest against the tight-tolerance value") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> a_dist(0.1, 0.9);
  std::uniform_real_distribution<double> b_dist(-60.0, 60.0);
  for (int i = 0; i < 100; ++i) {
    const Cplx s(a_dist(rng), b_dist(rng));
    const SeriesValue coarse = eta(s, 1e-8);
    const Cplx fine = eta(s, 1e-13).value;
    CHECK(std::abs(coarse.value - fine) <= coarse.error_bound + 1e-13);
  }
}

TEST_CASE("eta_components: real point collapses the four series") {
  const EtaComponents c = eta_components(StripPoint(0.5, 0.0), 1e-11);
  CHECK(c.y == 0.0);
  CHECK(c.v == 0.0);
  CHECK(c.x == c.u);
  CHECK(std::abs(c.x - oracles::kEtaHalf) < 1e-10);
}

TEST_CASE("eta_components tie to eta(s) and eta(1-s)") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> a_dist(0.1, 0.9);
  std::uniform_real_distribution<double> b_dist(-30.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const StripPoint sp(a_dist(rng), b_dist(rng));
    const double tol = 1e-10;
    const EtaComponents c = eta_components(sp, tol);
    const Cplx via_eta = eta(sp.value(), tol).value;
    CHECK(std::abs(Cplx(c.x, c.y) - via_eta) < 2.0 * tol);
    const Cplx one_minus_s(1.0 - sp.alpha(), -sp.beta());
    const Cplx via_eta_1ms = eta(one_minus_s, tol).value;
    CHECK(std::abs(Cplx(c.u, c.v) - via_eta_1ms) < 2.0 * tol);
  }
}

TEST_CASE("zeta_from_eta: Basel point, pole, factor zeros") {
  const SeriesValue basel = zeta_from_eta(Cplx(2.0, 0.0), 1e-13);
  CHECK(std::abs(basel.value.real() - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(basel.value.imag()) < 1e-13);

  CHECK_THROWS_AS(zeta_from_eta(Cplx(1.0, 0.0)), PoleError);
  const double factor_zero_im = kTwoPi / std::numbers::ln2;
  CHECK_THROWS_AS(zeta_from_eta(Cplx(1.0, factor_zero_im)), FactorZeroError);

  const SeriesValue half = zeta_from_eta(Cplx(0.5, 0.0), 1e-12);
  CHECK(std::abs(half.value.real() - oracles::kZetaHalf) < 1e-10);
  // cross-check against eta(1/2) / (1 - sqrt 2)
  const double via_eta = eta(Cplx(0.5, 0.0), 1e-12).value.real() /
                         (1.0 - std::sqrt(2.0));
  CHECK(std::abs(half.value.real() - via_eta) < 1e-12);
}

TEST_CASE("unreachable tolerance raises ConvergenceError") {
  CHECK_THROWS_AS(eta(Cplx(0.5, 4000.0), 1e-10), ConvergenceError);
}

#include <cmath>
#include <random>

#include "doctest.h"
#include "etastrip/angle.hpp"

using namespace etastrip;

TEST_CASE("arctan2 follows the case table with principal range (-pi, pi]") {
  CHECK(arctan2(1.0, 1.0).value() == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(arctan2(0.0, 1.0).value() == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(arctan2(0.0, -1.0).value() == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(arctan2(-1.0, 0.0).value() == kPi);
  CHECK(arctan2(1.0, 0.0).value() == 0.0);
  CHECK(arctan2(1.0, -0.0).value() == 0.0);
  CHECK_THROWS_AS(arctan2(0.0, 0.0), DomainError);
}

TEST_CASE("normalize_angle reduces into (-pi, pi]") {
  CHECK(normalize_angle(0.0).value() == 0.0);
  CHECK(normalize_angle(3.0 * kPi).value() == kPi);
  CHECK(normalize_angle(-kPi).value() == kPi);
  CHECK(normalize_angle(kPi).value() == kPi);
  CHECK(normalize_angle(7.1).value() == doctest::Approx(7.1 - kTwoPi).epsilon(1e-15));
  CHECK_THROWS_AS(normalize_angle(std::nan("")), DomainError);
}

TEST_CASE("normalize_angle is idempotent and inverts arctan2(cos, sin)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    const Angle a = normalize_angle(x);
    CHECK(a.value() > -kPi);
    CHECK(a.value() <= kPi);
    CHECK(normalize_angle(a.value()).value() == a.value());
    const Angle b = arctan2(std::cos(x), std::sin(x));
    CHECK(circular_distance(a, b) < 1e-12);
  }
}

TEST_CASE("circular_distance handles wraparound and antipodes") {
  CHECK(circular_distance(normalize_angle(kPi), normalize_angle(-kPi + 1e-12)) ==
        doctest::Approx(1e-12).epsilon(1e-3));
  CHECK(circular_distance(normalize_angle(0.0), normalize_angle(0.0)) == 0.0);
  CHECK(circular_distance(normalize_angle(kPi / 2), normalize_angle(-kPi / 2)) ==
        doctest::Approx(kPi).epsilon(1e-15));
}

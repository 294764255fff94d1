#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dirac1d/specfun.hpp"
#include "oracles.hpp"

using namespace dirac1d;
using dirac1d::testing::rel_err;

TEST_CASE("kummer_phi closed forms") {
  CHECK(kummer_phi(0.3, 1.7, 0.0) == 1.0);
  CHECK(kummer_phi(-2.5, 0.5, 0.0) == 1.0);
  CHECK(kummer_phi(1.0, 1.0, 1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  // Terminating case: Phi(-1, 1/2; z^2) = 1 - 2 z^2.
  CHECK(kummer_phi(-1.0, 0.5, 1.0) == -1.0);
  const double z2 = 2.25;
  CHECK(kummer_phi(-3.0, 0.5, z2) ==
        doctest::Approx(1.0 - 6.0 * z2 + 4.0 * z2 * z2 - 8.0 / 15.0 * z2 * z2 * z2).epsilon(1e-15));
}

TEST_CASE("kummer_phi against an exact rational partial sum") {
  using dirac1d::testing::Rational;
  const double oracle = dirac1d::testing::kummer_rational(Rational(1, 4), Rational(3, 4), Rational(2), 200);
  CHECK(oracle == doctest::Approx(2.5718911158197165).epsilon(1e-15));
  CHECK(rel_err(kummer_phi(0.25, 0.75, 2.0), oracle) < 1e-15);
}

TEST_CASE("kummer_phi polynomial case sums every term") {
  // A tiny intermediate term must not stop a terminating series early.
  const double z = 1e-9;
  const double got = kummer_phi(-2.0, 0.5, z);
  CHECK(got == doctest::Approx(1.0 - 4.0 * z + 4.0 / 3.0 * z * z).epsilon(1e-16));
}

TEST_CASE("kummer_phi satisfies Kummer's transformation") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ua(-4.0, 4.0), ub(0.2, 5.0), uz(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = ua(rng), b = ub(rng), z = uz(rng);
    const double lhs = kummer_phi(a, b, z);
    const double rhs = std::exp(z) * kummer_phi(b - a, b, -z);
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    INFO("a=" << a << " b=" << b << " z=" << z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("kummer_phi error paths") {
  CHECK_THROWS_AS(kummer_phi(0.5, 0.0, 1.0), InvalidPole);
  CHECK_THROWS_AS(kummer_phi(0.5, -3.0, 1.0), InvalidPole);
  CHECK_NOTHROW(kummer_phi(0.5, -2.5, 1.0));
  SeriesConfig tight{1e-16, 50};
  CHECK_THROWS_AS(kummer_phi(0.5, 1.5, 200.0, tight), NoConvergence);
  CHECK_THROWS_AS(kummer_phi(0.5, 1.5, 1.0, SeriesConfig{0.0, 500}), std::invalid_argument);
  CHECK_THROWS_AS(kummer_phi(0.5, 1.5, 1.0, SeriesConfig{1e-16, 10}), std::invalid_argument);
}

TEST_CASE("reciprocal_gamma special values") {
  CHECK(reciprocal_gamma(1.0) == 1.0);
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-1.0) == 0.0);
  CHECK(reciprocal_gamma(-17.0) == 0.0);
  CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(reciprocal_gamma(-0.5) == doctest::Approx(-0.5 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("reciprocal_gamma matches factorials") {
  double factorial = 1.0;  // (n-1)!
  for (int n = 1; n <= 45; ++n) {
    if (n > 1) factorial *= (n - 1);
    INFO("n=" << n);
    CHECK(rel_err(reciprocal_gamma(static_cast<double>(n)), 1.0 / factorial) < 1e-13);
  }
}

TEST_CASE("reciprocal_gamma obeys the duplication formula on [-45, 45]") {
  // 1/G(x) 1/G(x+1/2) = 2^(2x-1) / sqrt(pi) * 1/G(2x)
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (double x = -22.4; x <= 22.4; x += 0.37) {
    const double lhs = reciprocal_gamma(x) * reciprocal_gamma(x + 0.5);
    const double rhs = std::exp2(2.0 * x - 1.0) / sqrt_pi * reciprocal_gamma(2.0 * x);
    INFO("x=" << x);
    CHECK(rel_err(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("reciprocal_gamma reflection against boost") {
  for (double x = -44.83; x < 45.0; x += 0.71) {
    INFO("x=" << x);
    CHECK(rel_err(reciprocal_gamma(x), 1.0 / boost::math::tgamma(x)) < 1e-13);
  }
}

TEST_CASE("hermite_fn low integer orders") {
  for (double z : {-3.0, -0.4, 0.0, 0.7, 2.0, 5.5}) {
    CHECK(hermite_fn(HermiteOrder{0.0}, z) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(hermite_fn(HermiteOrder{1.0}, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hermite_fn(HermiteOrder{2.0}, 0.0) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("hermite_fn at the origin reduces to a gamma ratio") {
  const double nu = 0.345459;
  const double expected = std::exp2(nu) * std::sqrt(std::numbers::pi) * reciprocal_gamma((1.0 - nu) / 2.0);
  CHECK(hermite_fn(HermiteOrder{nu}, 0.0) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("hermite_fn against 50-digit series") {
  const double oracle = dirac1d::testing::hermite_float50(1.5, 2.0);
  CHECK(oracle == doctest::Approx(7.6325903711425342).epsilon(1e-15));
  CHECK(rel_err(hermite_fn(HermiteOrder{1.5}, 2.0), oracle) < 1e-13);

  for (double nu : {-0.7, 0.3, 2.5, 4.7, 9.3}) {
    for (double z : {-5.5, -2.0, -0.3, 0.6, 1.9, 2.9}) {
      INFO("nu=" << nu << " z=" << z);
      CHECK(rel_err(hermite_fn(HermiteOrder{nu}, z), dirac1d::testing::hermite_float50(nu, z, 600)) < 1e-10);
    }
  }
}

TEST_CASE("series and integral routes agree where both are accurate") {
  for (double nu : {-0.9, 0.2, 1.5, 3.75, 6.1}) {
    for (double z : {1.5, 2.0, 2.5}) {
      const auto continued = detail::hermite_pair_continued(nu, z);
      INFO("nu=" << nu << " z=" << z);
      CHECK(rel_err(continued.value, hermite_fn(HermiteOrder{nu}, z)) < 1e-11);
      CHECK(rel_err(continued.lower, hermite_fn(HermiteOrder{nu - 1.0}, z)) < 1e-11);
    }
  }
}

TEST_CASE("large-argument route reproduces closed forms") {
  // H_{-1}(z) = sqrt(pi)/2 exp(z^2) erfc(z); H_{-2}(z) = 1/2 - z H_{-1}(z).
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (double z : {3.5, 5.0, 8.0}) {
    const double hm1 = 0.5 * sqrt_pi * std::exp(z * z) * std::erfc(z);
    INFO("z=" << z);
    CHECK(rel_err(hermite_fn(HermiteOrder{-1.0}, z), hm1) < 1e-13);
    CHECK(rel_err(hermite_fn(HermiteOrder{-2.0}, z), 0.5 - z * hm1) < 1e-10);
  }
}

TEST_CASE("integer orders match recurrence polynomials on [-4, 4]") {
  for (int i = 0; i <= 40; ++i) {
    const double z = -4.0 + 0.2 * i;
    const auto poly = dirac1d::testing::hermite_polynomials(10, z);
    for (int n = 0; n <= 10; ++n) {
      const double got = hermite_fn(HermiteOrder{static_cast<double>(n)}, z);
      const double want = poly[static_cast<std::size_t>(n)];
      INFO("n=" << n << " z=" << z);
      CHECK((rel_err(got, want) <= 1e-9 || std::abs(got - want) <= 1e-12));
    }
  }
}

TEST_CASE("odd integer order vanishes exactly at the origin") {
  for (int n = 1; n <= 21; n += 2) CHECK(hermite_fn(HermiteOrder{static_cast<double>(n)}, 0.0) == 0.0);
}

TEST_CASE("hermite_fn_deriv") {
  CHECK(hermite_fn_deriv(HermiteOrder{0.0}, 1.3) == 0.0);
  CHECK(hermite_fn_deriv(HermiteOrder{1.0}, 5.0) == doctest::Approx(2.0).epsilon(1e-14));
  for (double nu : {0.3, 1.5, 2.5, 4.7}) {
    for (double z : {0.5, 1.0, 2.0}) {
      const double fd = dirac1d::testing::central_difference(
          [nu](double x) { return hermite_fn(HermiteOrder{nu}, x); }, z, 1e-5);
      INFO("nu=" << nu << " z=" << z);
      CHECK(rel_err(hermite_fn_deriv(HermiteOrder{nu}, z), fd) <= 1e-6);
    }
  }
}

TEST_CASE("three-term recurrence holds at non-integer order") {
  for (double nu : {0.3, 1.7, 2.5, 4.7, 7.25}) {
    for (double z : {-2.0, -0.5, 0.5, 1.0, 2.0, 3.5, 5.0, 9.0}) {
      const double up = hermite_fn(HermiteOrder{nu + 1.0}, z);
      const double mid = 2.0 * z * hermite_fn(HermiteOrder{nu}, z);
      const double down = 2.0 * nu * hermite_fn(HermiteOrder{nu - 1.0}, z);
      const double scale = std::max({std::abs(up), std::abs(mid), std::abs(down)});
      INFO("nu=" << nu << " z=" << z);
      CHECK(std::abs(up - mid + down) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("hermite_asymptotic") {
  CHECK(hermite_asymptotic(HermiteOrder{0.0}, 10.0) == 1.0);
  CHECK(hermite_asymptotic(HermiteOrder{1.0}, 3.0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(hermite_asymptotic(HermiteOrder{1.0}, 0.0), std::domain_error);
  for (double nu : {0.5, 1.5, 2.5}) {
    const double ratio = hermite_fn(HermiteOrder{nu}, 15.0) / hermite_asymptotic(HermiteOrder{nu}, 15.0);
    INFO("nu=" << nu);
    CHECK(std::abs(ratio - 1.0) < 0.01);
  }
  // Leading correction is -nu(nu-1)/(4 z^2).
  const double r = hermite_fn(HermiteOrder{0.5}, 15.0) / hermite_asymptotic(HermiteOrder{0.5}, 15.0);
  CHECK(r == doctest::Approx(1.000277202416788727).epsilon(1e-13));
}

TEST_CASE("hermite_fn input validation") {
  CHECK_THROWS_AS(HermiteOrder{std::nan("")}, std::invalid_argument);
  CHECK_THROWS_AS(hermite_fn(HermiteOrder{0.5}, -6.5), std::domain_error);
  CHECK_THROWS_AS(hermite_fn(HermiteOrder{0.5}, std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("long double instantiation agrees with double") {
  for (double nu : {0.3, 2.5}) {
    for (double z : {0.8, 4.0}) {
      const long double wide = hermite_fn(HermiteOrder<long double>{nu}, static_cast<long double>(z));
      CHECK(rel_err(static_cast<double>(wide), hermite_fn(HermiteOrder{nu}, z)) < 1e-13);
    }
  }
}

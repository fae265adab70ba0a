#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

#include "qrmt/quadrature.hpp"
#include "qrmt/specfun.hpp"

using namespace qrmt;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("ln_gamma against extended precision") {
  using big = boost::multiprecision::cpp_bin_float_50;
  for (double x : {0.01, 0.3, 0.5, 1.0, 1.5, 2.0, 7.25, 33.3, 1234.5}) {
    const double ref = static_cast<double>(boost::multiprecision::lgamma(big(x)));
    CHECK(std::abs(ln_gamma(x) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
  }
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  const SignedLog g = gamma_signed_log(-0.5);
  CHECK(g.sign == -1);
  CHECK(std::exp(g.log_abs) == doctest::Approx(2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("erf anchors") {
  CHECK(qrmt::erf(1.0) == doctest::Approx(0.84270079294971486934).epsilon(1e-15));
  CHECK(qrmt::erf(0.0) == 0.0);
  CHECK(qrmt::erfc(3.0) == doctest::Approx(2.2090496998585441373e-5).epsilon(1e-14));
}

TEST_CASE("bessel_k over a grid") {
  for (double nu : {0.0, 0.25, 0.5, 1.0, 1.5, 2.75, 5.0, 10.5, 40.0}) {
    for (double z : {1e-3, 0.1, 0.5, 1.0, 1.99, 2.01, 5.0, 20.0, 80.0}) {
      const double ref = boost::math::cyl_bessel_k(nu, z);
      if (!std::isfinite(ref) || ref == 0.0) continue;
      CAPTURE(nu);
      CAPTURE(z);
      CHECK(rel(bessel_k(nu, z), ref) < 1e-10);
    }
  }
}

TEST_CASE("bessel_k closed forms and shape") {
  CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.46106850444789455844).epsilon(1e-14));
  CHECK(bessel_k(1.0, 1.0) == doctest::Approx(0.60190723019723457474).epsilon(1e-14));
  for (double z : {0.3, 2.0, 9.0}) {
    CHECK(bessel_k(0.5, z) == doctest::Approx(std::sqrt(std::numbers::pi / (2 * z)) * std::exp(-z)).epsilon(1e-13));
  }
  double prev = bessel_k(1.3, 0.05);
  for (double z = 0.1; z < 30.0; z += 0.1) {
    const double k = bessel_k(1.3, z);
    CHECK(k > 0.0);
    CHECK(k < prev);
    prev = k;
  }
}

TEST_CASE("z^nu K_nu small-argument limit") {
  for (double nu : {0.5, 1.0, 3.0, 25.0, 120.0}) {
    const double lim = std::exp((nu - 1.0) * std::log(2.0) + ln_gamma(nu));
    CHECK(rel(bessel_k_zpow(nu, 1e-8), lim) < 1e-6);
  }
  CHECK(rel(bessel_k_zpow(2.5, 3.0), std::pow(3.0, 2.5) * boost::math::cyl_bessel_k(2.5, 3.0)) < 1e-12);
}

TEST_CASE("kummer_m against boost") {
  for (double a : {0.5, 1.0, 2.5, 10.5, 50.5}) {
    for (double db : {0.5, 1.5, 3.0}) {
      const double b = a + db;
      for (double z : {-0.1, -1.0, -5.0, -29.0, -31.0, -80.0, -300.0}) {
        const double ref = boost::math::hypergeometric_1F1(a, b, z);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(z);
        CHECK(rel(kummer_m(a, b, z), ref) < 1e-10);
      }
    }
  }
}

TEST_CASE("kummer_m anchors and shape") {
  CHECK(kummer_m(1.0, 2.0, -1.0) == doctest::Approx(0.63212055882855767840).epsilon(1e-14));
  CHECK(kummer_m(1.5, 3.0, -40.0) == doctest::Approx(0.0087506222183288665356).epsilon(1e-13));
  CHECK(kummer_m(10.5, 12.0, -2.5) == doctest::Approx(0.11547743803305803627).epsilon(1e-13));
  CHECK(kummer_m(2.0, 3.0, 0.0) == 1.0);
  double prev = 1.0;
  for (double z = -0.5; z > -200.0; z -= 0.5) {
    const double m = kummer_m(1.5, 4.0, z);
    CHECK(m > 0.0);
    CHECK(m < prev);
    prev = m;
  }
}

TEST_CASE("kummer routes agree where both are valid") {
  const double s = kummer_m_series(0.75, 2.25, -50.0);
  const double a = kummer_m_asymptotic(0.75, 2.25, -50.0);
  CHECK(rel(s, a) < 1e-12);
}

TEST_CASE("levy_density anchors") {
  // sigma = 2: Normal(0, 2 Lambda)
  CHECK(levy_density(0.7, 2.0, 1.5) ==
        doctest::Approx(std::exp(-0.49 / 6.0) / std::sqrt(6.0 * std::numbers::pi)).epsilon(1e-14));
  // sigma = 1: Cauchy(Lambda)
  CHECK(levy_density(2.0, 1.0, 0.5) == doctest::Approx(0.5 / (std::numbers::pi * 4.25)).epsilon(1e-14));
  // x = 0
  CHECK(levy_density(0.0, 1.5, 2.0) ==
        doctest::Approx(gamma_fn(1.0 + 1.0 / 1.5) / (std::numbers::pi * std::pow(2.0, 1.0 / 1.5))).epsilon(1e-14));
  CHECK(levy_density(0.7, 1.5, 1.0) == doctest::Approx(0.24078419849668683105).epsilon(1e-10));
  CHECK(levy_density(2.0, 0.8, 1.3) == doctest::Approx(0.061691899849092736046).epsilon(1e-9));
}

TEST_CASE("levy_density is a normalized even density") {
  for (double sigma : {0.8, 1.3, 1.7}) {
    CAPTURE(sigma);
    CHECK(levy_density(1.3, sigma, 1.0) == levy_density(-1.3, sigma, 1.0));
    const auto r = integrate_to_infinity([&](double x) { return levy_density(x, sigma, 1.0); }, 0.0);
    CHECK(std::abs(2.0 * r.value - 1.0) < 1e-6);
  }
}

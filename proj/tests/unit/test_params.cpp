#include <doctest.h>

#include <cmath>
#include <limits>

#include "qrmt/params.hpp"
#include "qrmt/specfun.hpp"
#include "test_util.hpp"

using namespace qrmt;

TEST_CASE("dof counts independent entries") {
  CHECK(dof(1) == 1);
  CHECK(dof(2) == 3);
  CHECK(dof(50) == 1275);
  CHECK(error_code([] { dof(0); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("lambda_from_q") {
  CHECK(lambda_from_q(1.4, 3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lambda_from_q(0.0, 3) == doctest::Approx(-2.5).epsilon(1e-14));
  CHECK(q_from_lambda(1.0, 1275) == doctest::Approx(1.0 + 1.0 / 638.5).epsilon(1e-15));
  CHECK(q_from_lambda(1.0, 1275) < q_max(1275));
  CHECK(error_code([] { lambda_from_q(1.0, 3); }) == ErrorCode::GaussianRegime);
  CHECK(error_code([] { lambda_from_q(q_max(3), 3); }) == ErrorCode::BoundaryInvalid);
  CHECK(lambda_from_q(-std::numeric_limits<double>::infinity(), 6) == -3.0);
}

TEST_CASE("q round trip") {
  for (std::int64_t f : {1, 3, 10, 1275}) {
    for (double q : {0.5, 1.001, 1.0 + 1.0 / static_cast<double>(f)}) {
      if (q >= q_max(f)) continue;
      const double back = q_from_lambda(lambda_from_q(q, f), f);
      CHECK(std::abs(back - q) / q < 1e-14);
    }
  }
}

TEST_CASE("q_max") {
  CHECK(q_max(1) == 3.0);
  CHECK(q_max(3) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(q_max(1275) == doctest::Approx(1.0015686).epsilon(1e-7));
}

TEST_CASE("regime classification is total with explicit boundaries") {
  const std::int64_t f = 6;
  CHECK(classify_regime(0.3, f) == Regime::RestrictedTrace);
  CHECK(classify_regime(-std::numeric_limits<double>::infinity(), f) == Regime::RestrictedTrace);
  CHECK(classify_regime(1.0, f) == Regime::Gaussian);
  CHECK(classify_regime(1.2, f) == Regime::LevyBranch);
  CHECK(error_code([] { classify_regime(q_max(6), 6); }) == ErrorCode::BoundaryInvalid);
  CHECK(error_code([] { classify_regime(1.9, 6); }) == ErrorCode::OutOfBranch);
  try {
    classify_regime(1.9, 6);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("q_max") != std::string::npos);
  }
  // Every q < 1 lands below -f/2.
  for (double q : {0.99, 0.5, 0.0, -3.0}) CHECK(lambda_from_q(q, f) < -0.5 * static_cast<double>(f));
}

TEST_CASE("tail parameters") {
  const TailParams a = tail_params(2.0);
  CHECK(a.sigma == 2.0);
  CHECK(a.big_lambda == doctest::Approx(0.25).epsilon(1e-15));
  const TailParams b = tail_params(0.5);
  CHECK(b.sigma == 1.0);
  CHECK(b.big_lambda == doctest::Approx(2.0).epsilon(1e-13));
  const TailParams c = tail_params(0.25);
  CHECK(c.sigma == 0.5);
  CHECK(c.big_lambda == doctest::Approx(gamma_fn(0.75) / gamma_fn(1.25)).epsilon(1e-13));
  CHECK(c.big_lambda == doctest::Approx(1.35197).epsilon(1e-5));
  CHECK(error_code([] { tail_params(1.0); }) == ErrorCode::MarginalCase);
  CHECK(error_code([] { tail_params(0.0); }) == ErrorCode::OutOfBranch);
  CHECK(error_code([] { tail_params(-1.0); }) == ErrorCode::OutOfBranch);
}

TEST_CASE("sigma is continuous from below at lambda = 1") {
  double prev = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double s = tail_params(1.0 - eps).sigma;
    CHECK(s > prev);
    prev = s;
  }
  CHECK(2.0 - prev < 1e-7);
  CHECK(scaling_sigma(1.0) == 2.0);
}

TEST_CASE("alpha scaling") {
  CHECK(alpha_scaling(50, 2.0) == doctest::Approx(25.0).epsilon(1e-15));
  CHECK(alpha_scaling(50, 1.0) == doctest::Approx(1250.0).epsilon(1e-15));
  CHECK(alpha_scaling(1, 2.0) == 0.5);
  CHECK(error_code([] { alpha_scaling(10, 0.0); }) == ErrorCode::Domain);
}

TEST_CASE("characteristic energy") {
  for (int n : {2, 20, 500}) {
    const auto p = EnsembleParams::from_lambda(n, 1.0, 0.5 * n);
    CHECK(characteristic_energy(p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }
  CHECK(characteristic_energy(EnsembleParams::from_lambda(50, 0.5, 25.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(characteristic_energy(EnsembleParams::from_lambda(50, 10.0, 25.0)) ==
        doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
  CHECK(error_code([] { characteristic_energy(EnsembleParams::from_q(3, 0.0, 1.0)); }) == ErrorCode::WrongRegime);
}

TEST_CASE("EnsembleParams factories agree and carry derived fields") {
  const auto a = EnsembleParams::from_q(4, q_from_lambda(0.75, 10), 2.0);
  const auto b = EnsembleParams::from_lambda(4, 0.75, 2.0);
  CHECK(a.lambda() == doctest::Approx(b.lambda()).epsilon(1e-12));
  CHECK(a.f() == 10);
  CHECK(b.regime() == Regime::LevyBranch);
  CHECK(b.mu() * 2.0 * b.alpha() == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(b.sigma() == 1.5);
  REQUIRE(b.big_lambda());
  CHECK(*b.big_lambda() == doctest::Approx(gamma_fn(0.25) / gamma_fn(1.75)).epsilon(1e-13));
  CHECK(b.kernel_exponent() == doctest::Approx(-(0.75 + 5.0)).epsilon(1e-15));

  const auto m = EnsembleParams::from_lambda_auto(20, 1.0);
  CHECK(m.alpha() == 10.0);
  CHECK_FALSE(m.big_lambda());

  const auto g = EnsembleParams::from_q(5, 1.0, 3.0);
  CHECK(g.regime() == Regime::Gaussian);
  CHECK(std::isinf(g.lambda()));
  CHECK_FALSE(g.e_char());

  const auto r = EnsembleParams::from_q(3, 0.0, 2.0);
  CHECK(r.regime() == Regime::RestrictedTrace);
  CHECK(r.trace_bound() == doctest::Approx(4.0 / 2.0).epsilon(1e-15));
  const auto bt = EnsembleParams::bounded_trace(3, 2.0);
  CHECK(bt.lambda() == -3.0);
  CHECK(bt.trace_bound() == doctest::Approx(6.0 / 4.0).epsilon(1e-15));

  CHECK(error_code([] { EnsembleParams::from_lambda(3, -1.0, 1.0); }) == ErrorCode::OutOfBranch);
  CHECK(error_code([] { EnsembleParams::from_lambda(3, 1.0, 0.0); }) == ErrorCode::Domain);
  CHECK(error_code([] { EnsembleParams::from_q(0, 0.5, 1.0); }) == ErrorCode::InvalidDimension);
  CHECK(error_code([] { (void)EnsembleParams::from_lambda(3, 1.0, 1.0).trace_bound(); }) == ErrorCode::WrongRegime);
}

#include "qrmt/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qrmt/error.hpp"
#include "qrmt/specfun.hpp"

namespace qrmt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void require_dimension(int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidDimension, "matrix dimension must be >= 1, got " + std::to_string(n));
  }
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::Domain, "alpha must be finite and > 0, got " + fmt(alpha));
  }
}

}  // namespace

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::RestrictedTrace: return "restricted_trace";
    case Regime::Gaussian: return "gaussian";
    case Regime::LevyBranch: return "levy_branch";
  }
  return "unknown";
}

std::int64_t dof(int n) {
  require_dimension(n);
  const auto m = static_cast<std::int64_t>(n);
  return m * (m + 1) / 2;
}

double q_max(std::int64_t f) { return 1.0 + 2.0 / static_cast<double>(f); }

double lambda_from_q(double q, std::int64_t f) {
  if (q == 1.0) {
    throw Error(ErrorCode::GaussianRegime, "q == 1 is the Gaussian ensemble; lambda is infinite");
  }
  if (std::isinf(q) && q < 0.0) return -0.5 * static_cast<double>(f);
  const double lambda = 1.0 / (q - 1.0) - 0.5 * static_cast<double>(f);
  if (lambda == 0.0 || q == q_max(f)) {
    throw Error(ErrorCode::BoundaryInvalid, "q == q_max = " + fmt(q_max(f)) + " is not normalizable (lambda == 0)");
  }
  return lambda;
}

double q_from_lambda(double lambda, std::int64_t f) {
  if (std::isinf(lambda)) return 1.0;
  return 1.0 + 1.0 / (lambda + 0.5 * static_cast<double>(f));
}

Regime classify_regime(double q, std::int64_t f) {
  if (std::isnan(q)) throw Error(ErrorCode::Domain, "q is NaN");
  if (q < 1.0) return Regime::RestrictedTrace;
  if (q == 1.0) return Regime::Gaussian;
  const double qm = q_max(f);
  if (q == qm) {
    throw Error(ErrorCode::BoundaryInvalid, "q == q_max = " + fmt(qm) + " is not normalizable (lambda == 0)");
  }
  if (q > qm) {
    throw Error(ErrorCode::OutOfBranch,
                "q = " + fmt(q) + " exceeds q_max = " + fmt(qm) + " for f = " + std::to_string(f));
  }
  return Regime::LevyBranch;
}

TailParams tail_params(double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(ErrorCode::OutOfBranch, "tail parameters need lambda > 0, got " + fmt(lambda));
  }
  if (lambda == 1.0) {
    throw Error(ErrorCode::MarginalCase, "lambda == 1 is the marginal case between the Gaussian and Levy laws");
  }
  if (std::isinf(lambda)) return {2.0, 0.0};
  if (lambda > 1.0) return {2.0, 1.0 / (4.0 * (lambda - 1.0))};
  return {2.0 * lambda, std::exp(ln_gamma(1.0 - lambda) - ln_gamma(1.0 + lambda))};
}

double scaling_sigma(double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(ErrorCode::OutOfBranch, "alpha scaling needs lambda > 0, got " + fmt(lambda));
  }
  return lambda >= 1.0 ? 2.0 : 2.0 * lambda;
}

double alpha_scaling(int n, double sigma) {
  require_dimension(n);
  if (!(sigma > 0.0) || sigma > 2.0) {
    throw Error(ErrorCode::Domain, "sigma must lie in (0, 2], got " + fmt(sigma));
  }
  return 0.5 * std::pow(static_cast<double>(n), 2.0 / sigma);
}

EnsembleParams::EnsembleParams(int n, double q, double lambda, double alpha, Regime regime)
    : n_(n), f_(dof(n)), q_(q), lambda_(lambda), alpha_(alpha), regime_(regime) {
  mu_ = static_cast<double>(f_) / (2.0 * alpha_);
  sigma_ = 2.0;
  if (regime_ == Regime::LevyBranch) {
    sigma_ = scaling_sigma(lambda_);
    if (lambda_ != 1.0) big_lambda_ = tail_params(lambda_).big_lambda;
    e_char_ = std::sqrt(static_cast<double>(n_) * lambda_ / alpha_);
  }
}

EnsembleParams EnsembleParams::from_q(int n, double q, double alpha) {
  require_dimension(n);
  require_alpha(alpha);
  const std::int64_t f = dof(n);
  const Regime regime = classify_regime(q, f);
  if (regime == Regime::Gaussian) return EnsembleParams(n, 1.0, kInf, alpha, regime);
  return EnsembleParams(n, q, lambda_from_q(q, f), alpha, regime);
}

EnsembleParams EnsembleParams::from_lambda(int n, double lambda, double alpha) {
  require_dimension(n);
  require_alpha(alpha);
  if (std::isinf(lambda) && lambda > 0.0) return gaussian(n, alpha);
  if (!(lambda > 0.0)) {
    // The restricted-trace side is parameterized by q only.
    throw Error(ErrorCode::OutOfBranch,
                "lambda must be > 0 (Levy branch); specify q < 1 for the restricted-trace ensemble, got lambda = " +
                    fmt(lambda));
  }
  const std::int64_t f = dof(n);
  return EnsembleParams(n, q_from_lambda(lambda, f), lambda, alpha, Regime::LevyBranch);
}

EnsembleParams EnsembleParams::from_lambda_auto(int n, double lambda) {
  require_dimension(n);
  if (std::isinf(lambda) && lambda > 0.0) return gaussian(n, alpha_scaling(n, 2.0));
  return from_lambda(n, lambda, alpha_scaling(n, scaling_sigma(lambda)));
}

EnsembleParams EnsembleParams::gaussian(int n, double alpha) {
  require_dimension(n);
  require_alpha(alpha);
  return EnsembleParams(n, 1.0, kInf, alpha, Regime::Gaussian);
}

EnsembleParams EnsembleParams::bounded_trace(int n, double alpha) {
  return from_q(n, -kInf, alpha);
}

double EnsembleParams::inv_q_minus_one() const noexcept {
  return lambda_ + 0.5 * static_cast<double>(f_);
}

double EnsembleParams::trace_bound() const {
  if (regime_ != Regime::RestrictedTrace) {
    throw Error(ErrorCode::WrongRegime, "trace bound exists only for q < 1");
  }
  return -lambda_ / alpha_;
}

double characteristic_energy(const EnsembleParams& p) {
  if (!p.e_char()) throw Error(ErrorCode::WrongRegime, "characteristic energy is defined on the Levy branch only");
  return *p.e_char();
}

}  // namespace qrmt

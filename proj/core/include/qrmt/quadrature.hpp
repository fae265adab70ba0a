#pragma once

#include <functional>

namespace qrmt {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]: the interval with
/// the largest error estimate is bisected until the summed estimate is
/// below max(abs_tol, rel_tol * |value|).  Integrable endpoint
/// singularities are handled by repeated bisection.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts = {});

/// Integral over [a, inf) through x = a + t / (1 - t).
QuadratureResult integrate_to_infinity(const Integrand& f, double a, const QuadratureOptions& opts = {});

/// int_0^upper exp(-xi) xi^(shape-1) g(xi) dxi.  For shape < 1 the
/// substitution w = xi^shape removes the power singularity at the origin.
QuadratureResult integrate_gamma_weight(const Integrand& g, double shape, double upper,
                                        const QuadratureOptions& opts = {});

}  // namespace qrmt

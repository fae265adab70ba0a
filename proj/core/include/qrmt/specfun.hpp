#pragma once

#include "qrmt/quadrature.hpp"

namespace qrmt {

/// log Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 terms), with
/// log Gamma(x) = log Gamma(x + 1) - log x below x = 1/2.  The relative
/// error of exp(ln_gamma(x)) is below 1e-13 for x in (0, 1e6].
double ln_gamma(double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

struct SignedLog {
  double log_abs;
  int sign;
};

/// log|Gamma(x)| and sign of Gamma(x) for any real x that is not a pole.
SignedLog gamma_signed_log(double x);

double erf(double x);
double erfc(double x);

/// Modified Bessel function of the second kind K_nu(z), nu >= 0, z > 0.
///
/// K_mu for |mu| <= 1/2 comes from Temme's series when z <= 2 and from
/// Steed's continued fraction (CF2) when z > 2; the order is then raised
/// by the forward recurrence, which is stable for K.
double bessel_k(double nu, double z);

/// z^nu K_nu(z).  Finite as z -> 0+, where it tends to 2^(nu-1) Gamma(nu);
/// the recurrence is run on this scaled quantity so it does not overflow
/// for large nu and small z.
double bessel_k_zpow(double nu, double z);

/// Kummer's confluent hypergeometric function M(a, b, z) for z <= 0.
///
/// For |z| >= 30 the large-argument expansion
///   Gamma(b)/Gamma(b-a) |z|^(-a) sum_n (a)_n (a-b+1)_n / n! |z|^(-n)
/// is used when it converges before its terms start to grow and the
/// exponentially small companion term is below 1e-17 relative; otherwise
/// (and always for |z| < 30) the Kummer transform
/// M(a, b, z) = e^z M(b-a, b, -z) is summed as a power series with a
/// running exponent to avoid overflow.
double kummer_m(double a, double b, double z);

/// The Kummer-transform power-series route on its own.
double kummer_m_series(double a, double b, double z);

/// The large-|z| asymptotic route on its own; throws Domain if the
/// expansion does not reach full precision at this z.
double kummer_m_asymptotic(double a, double b, double z);

/// Symmetric stable density L(x; sigma, Lambda) =
/// (1/pi) int_0^inf exp(-Lambda t^sigma) cos(x t) dt.
///
/// Closed forms for sigma = 1 and sigma = 2 and at x = 0.  Otherwise the
/// integral is split at the zeros of cos(x t); the alternating sequence of
/// partial sums is accelerated by repeated averaging (Euler transform)
/// when the envelope has not decayed after 200 half-periods.
double levy_density(double x, double sigma, double big_lambda);

/// As levy_density, but reports the error estimate of the generic path.
QuadratureResult levy_density_detail(double x, double sigma, double big_lambda);

}  // namespace qrmt

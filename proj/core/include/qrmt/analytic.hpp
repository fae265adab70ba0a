#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qrmt/matrix.hpp"
#include "qrmt/params.hpp"
#include "qrmt/quadrature.hpp"

namespace qrmt {

/// Diagonal entries use the density as written; off-diagonal entries H_ij
/// follow it in the coordinate sqrt(2) H_ij, which is the coordinate the
/// volume element 2^(N(N-1)/4) prod dH_ij makes Euclidean.
enum class ElementKind { Diagonal, OffDiagonal };

enum class CurveKind { ElementPdf, LevelDensity, GapProbability, CharFn, Semicircle };

std::string_view to_string(CurveKind k) noexcept;

struct AnalyticCurve {
  CurveKind kind;
  EnsembleParams params;
  std::vector<double> abscissae;
  std::vector<double> values;
  std::vector<double> errors;  // per-point quadrature error estimate (0 for closed forms)
  double quadrature_error = 0.0;
};

/// Truncation point for the improper xi integrals, max(50, lambda + 20 sqrt(lambda)).
double xi_cutoff(double lambda);

// Matrix-level laws.

/// log Z_N.  Levy branch: (f/2) log(pi lambda/alpha) + log Gamma(lambda)
/// - log Gamma(lambda + f/2).  Restricted trace:
/// (f/2) log(pi |lambda|/alpha) + log Gamma(1/(1-q) + 1) - log Gamma(1 - lambda).
/// Gaussian: (f/2) log(pi/alpha).
double log_partition(const EnsembleParams& p);

/// Ensemble density with respect to 2^(N(N-1)/4) prod_{i<=j} dH_ij.
double matrix_pdf(const SymmetricMatrix& h, const EnsembleParams& p);

// Single-element laws.

/// Marginal density of one matrix element.
///
/// Levy branch: Student-t with 2 lambda degrees of freedom and scale
/// 1/sqrt(2 alpha), normalized by sqrt(alpha/(pi lambda)) Gamma(lambda+1/2)/Gamma(lambda).
/// Restricted trace: the same kernel on |x| < sqrt(|lambda|/alpha) with
/// sqrt(alpha/(pi |lambda|)) Gamma(1-lambda)/Gamma(1/2-lambda).
/// Gaussian: sqrt(alpha/pi) exp(-alpha x^2).
double element_pdf(double x, const EnsembleParams& p, ElementKind kind = ElementKind::Diagonal);
double element_cdf(double x, const EnsembleParams& p, ElementKind kind = ElementKind::Diagonal);

/// Large-lambda Gaussian approximation of the diagonal element law,
/// variance lambda / (2 alpha (lambda - 1)).  Needs lambda > 1 or q < 1.
double element_gaussian_limit(double x, const EnsembleParams& p);

/// Stable law with the same tail as the diagonal element for 0 < lambda < 1:
/// 2 sqrt(alpha/lambda) L(2 sqrt(alpha/lambda) x; 2 lambda, Gamma(1-lambda)/Gamma(1+lambda)).
double element_levy_limit(double x, const EnsembleParams& p);

/// Characteristic function of the diagonal element law (Levy branch):
/// 2^(1-lambda)/Gamma(lambda) (|k| c)^lambda K_lambda(|k| c), c = sqrt(lambda/alpha).
double element_char_fn(double k, const EnsembleParams& p);

/// Leading small-k form of element_char_fn.  0 < lambda < 1:
/// exp(-Lambda |k c / 2|^(2 lambda)).  lambda > 1: exp(-Lambda (k c)^2),
/// which carries the variance of element_gaussian_limit.
double element_char_fn_small_k(double k, const EnsembleParams& p);

/// <h^2>; throws MomentDivergence for 0 < lambda <= 1.
double element_second_moment(const EnsembleParams& p, ElementKind kind = ElementKind::Diagonal);

/// C = <h^2>^2 - <h1^2 h2^2> for two distinct elements of the same kind:
/// lambda^2 / (4 alpha^2 (2 - lambda)(1 - lambda)^2) for diagonal entries
/// and a quarter of that off the diagonal.  Needs lambda > 2 on the Levy
/// branch (MomentDivergence otherwise); zero for the Gaussian ensemble.
double element_correlation(const EnsembleParams& p, ElementKind kind = ElementKind::Diagonal);

// Spectral laws.

/// Wigner semicircle (2 alpha / pi) sqrt(n/alpha - E^2), normalized to n.
double semicircle_density(double e, int n, double alpha);

/// Mean level density normalized to n, evaluated from the confluent
/// hypergeometric closed form.  Gaussian regime returns the semicircle.
double level_density(double e, const EnsembleParams& p);

/// The same density from its xi-integral over truncated semicircle arcs.
QuadratureResult level_density_integral(double e, const EnsembleParams& p);

/// Gamma(lambda)-weighted average of semicircle_density(e, n, alpha xi / lambda).
QuadratureResult level_density_mixture(double e, const EnsembleParams& p);

/// s(theta) = 2 int_0^theta level_density, the mean number of levels in (-theta, theta).
QuadratureResult level_count(double theta, const EnsembleParams& p);

/// theta with level_count(theta) == s, by bisection; needs 0 <= s < n.
double level_count_inverse(double s, const EnsembleParams& p);

/// y(x) = 2 int_0^x rho(t) dt for the semicircle in rescaled units
/// (alpha = 1/2, radius sqrt(2n)); equals n for x >= sqrt(2n).
double goe_counting(double x, int n);

/// Surmise-based GOE gap probability, 1 - erf(y sqrt(pi)/2).
double goe_gap_surmise(double y);

/// Probability that (-theta, theta) holds no eigenvalue, as the
/// Gamma-weighted average of goe_gap_surmise(goe_counting(sqrt(2 alpha xi/lambda) theta)).
QuadratureResult gap_probability(double theta, const EnsembleParams& p);

/// The same quantity after the substitution x = sqrt(2 alpha xi / lambda) theta.
QuadratureResult gap_probability_rescaled(double theta, const EnsembleParams& p);

/// 1 / (2 s^2), the large-s law at lambda = 1.
double gap_power_law(double s);

// Joint eigenvalue law.

/// log K_GOE,N, the normalization of exp(-sum x^2/2) prod|x_j - x_i| over R^n
/// (Mehta's integral at beta = 1).
double ln_goe_eigen_constant(int n);

/// Joint density of the (unordered) eigenvalues, normalized over R^n.
double joint_eigen_density(std::span<const double> e, const EnsembleParams& p);

/// Levy branch: the Laplace-type xi integral of exp(-(alpha/lambda) xi sum E^2)
/// with weight xi^(1/(q-1) - 1).
QuadratureResult joint_eigen_density_laplace(std::span<const double> e, const EnsembleParams& p);

/// Levy branch: Gamma-type average of the standard-unit GOE joint density
/// at rescaled eigenvalues sqrt(xi) x_k, x_k = sqrt(2 alpha/lambda) E_k.
QuadratureResult joint_eigen_density_goe_mixture(std::span<const double> e, const EnsembleParams& p);

// Curves.

AnalyticCurve element_curve(const EnsembleParams& p, std::span<const double> grid,
                            ElementKind kind = ElementKind::Diagonal);
AnalyticCurve char_fn_curve(const EnsembleParams& p, std::span<const double> grid);
AnalyticCurve level_density_curve(const EnsembleParams& p, std::span<const double> grid);
AnalyticCurve semicircle_curve(int n, double alpha, std::span<const double> grid);
/// Parametric gap curve: abscissae are s(theta), values E(theta).
AnalyticCurve gap_curve(const EnsembleParams& p, std::span<const double> theta_grid);

}  // namespace qrmt

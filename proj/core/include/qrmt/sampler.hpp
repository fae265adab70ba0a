#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrmt/matrix.hpp"
#include "qrmt/params.hpp"
#include "qrmt/rng.hpp"

namespace qrmt {

/// One draw from an ensemble together with how it was generated.
struct MatrixSample {
  SymmetricMatrix h;
  EnsembleParams params;
  /// Gamma(lambda, 1) mixing variable; set only for Levy-branch draws.
  std::optional<double> xi;
  std::uint64_t sample_index = 0;
  std::uint64_t master_seed = 0;
};

// Scalar variates.

double sample_gaussian(double mean, double variance, RngStream& rng);
/// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 uses the
/// Gamma(shape + 1) * U^(1/shape) boost.
double sample_gamma(double shape, RngStream& rng);
/// Beta(a, b) as X / (X + Y) with X ~ Gamma(a), Y ~ Gamma(b).
double sample_beta(double a, double b, RngStream& rng);
/// Student-t with `dof` degrees of freedom times `scale`, drawn with
/// Bailey's polar method (no Gamma variate involved).
double sample_student_t(double dof, double scale, RngStream& rng);
/// Symmetric stable variate with characteristic function
/// exp(-|scale * k|^sigma), Chambers-Mallows-Stuck transform.
/// sigma = 2 is Normal(0, 2 scale^2); sigma = 1 is Cauchy(scale).
double sample_levy_stable(double sigma, double scale, RngStream& rng);

// Matrix ensembles.

/// GOE with density proportional to exp(-alpha tr H^2): diagonal entries
/// Normal(0, 1/(2 alpha)), off-diagonal Normal(0, 1/(4 alpha)).
SymmetricMatrix goe_matrix(int n, double alpha, RngStream& rng);

MatrixSample sample_goe(int n, double alpha, RngStream& rng);

/// Levy branch as a Gamma mixture of GOEs: xi ~ Gamma(lambda, 1), then
/// H ~ GOE(alpha xi / lambda).  The marginal of H is the q > 1 ensemble.
MatrixSample sample_q_gt1(const EnsembleParams& p, RngStream& rng);

/// Exact draw from the restricted-trace ensemble (q < 1).
///
/// With x the f-vector (H_ii, sqrt(2) H_ij for i < j) we have
/// tr H^2 = |x|^2, and the density depends only on |x|.  The direction is
/// uniform on the sphere and u = alpha |x|^2 / |lambda| is
/// Beta(f/2, 1/(1-q) + 1).  q = -inf gives Beta(f/2, 1), the uniform ball.
MatrixSample sample_q_lt1(const EnsembleParams& p, RngStream& rng);

/// Uniform on the ball tr H^2 < f/(2 alpha).
MatrixSample sample_bounded_trace(int n, double alpha, RngStream& rng);

/// Dispatches on the regime of `p`.
MatrixSample sample_ensemble(const EnsembleParams& p, RngStream& rng);

/// Draw number `index` of the run seeded with `master_seed`.  The result
/// depends only on these arguments.
MatrixSample sample_ensemble(const EnsembleParams& p, std::uint64_t master_seed, std::uint64_t index);

/// Haar-distributed orthogonal matrix, row-major.
std::vector<double> random_orthogonal(int n, RngStream& rng);

}  // namespace qrmt

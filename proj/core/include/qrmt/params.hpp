#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace qrmt {

enum class Regime {
  RestrictedTrace,  // q < 1: support confined to the ball tr H^2 < -lambda/alpha
  Gaussian,         // q == 1: GOE
  LevyBranch,       // 1 < q < q_max, lambda > 0
};

std::string_view to_string(Regime r) noexcept;

struct TailParams {
  double sigma;       // stable exponent
  double big_lambda;  // coefficient of |k|^sigma in the small-k expansion
};

/// Number of independent entries of an n x n real symmetric matrix.
std::int64_t dof(int n);

/// lambda = 1/(q-1) - f/2.  Throws GaussianRegime for q == 1 and
/// BoundaryInvalid when the result is exactly zero (q == q_max).
double lambda_from_q(double q, std::int64_t f);

/// Inverse map q = 1 + 1/(lambda + f/2).
double q_from_lambda(double lambda, std::int64_t f);

/// Upper edge of the normalizable q > 1 interval, 1 + 2/f.
double q_max(std::int64_t f);

/// Which regime a q value falls in.  Boundaries (q == q_max) and the
/// non-normalizable side (q > q_max) throw.
Regime classify_regime(double q, std::int64_t f);

/// (sigma, Lambda) of the limiting element law.  lambda > 1 gives the
/// Gaussian pair (2, 1/(4(lambda-1))); 0 < lambda < 1 gives
/// (2 lambda, Gamma(1-lambda)/Gamma(1+lambda)).  lambda == 1 throws
/// MarginalCase, lambda <= 0 throws OutOfBranch.
TailParams tail_params(double lambda);

/// Exponent used by the alpha scaling convention.  Unlike tail_params this
/// accepts lambda == 1 (giving 2) and lambda == +inf (Gaussian, giving 2).
double scaling_sigma(double lambda);

/// alpha = n^(2/sigma) / 2, the convention that keeps spectra O(1) as n grows.
double alpha_scaling(int n, double sigma);

/// Validated parameter bundle with every derived quantity precomputed.
///
/// Construct through one of the named factories; the object is immutable
/// afterwards.  For the Gaussian regime lambda() is +inf and q() is 1.
/// On the restricted-trace side q may be -inf, which is the bounded-trace
/// (uniform ball) ensemble with lambda = -f/2.
class EnsembleParams {
 public:
  static EnsembleParams from_q(int n, double q, double alpha);
  static EnsembleParams from_lambda(int n, double lambda, double alpha);
  /// alpha chosen by alpha_scaling(n, scaling_sigma(lambda)).
  static EnsembleParams from_lambda_auto(int n, double lambda);
  static EnsembleParams gaussian(int n, double alpha);
  static EnsembleParams bounded_trace(int n, double alpha);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::int64_t f() const noexcept { return f_; }
  [[nodiscard]] double q() const noexcept { return q_; }
  [[nodiscard]] double lambda() const noexcept { return lambda_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double mu() const noexcept { return mu_; }
  [[nodiscard]] Regime regime() const noexcept { return regime_; }
  [[nodiscard]] double sigma() const noexcept { return sigma_; }
  /// Absent outside the Levy branch and at the marginal point lambda == 1.
  [[nodiscard]] std::optional<double> big_lambda() const noexcept { return big_lambda_; }
  /// sqrt(n lambda / alpha); Levy branch only.
  [[nodiscard]] std::optional<double> e_char() const noexcept { return e_char_; }

  /// 1/(q-1) = lambda + f/2, computed without going through q.
  [[nodiscard]] double inv_q_minus_one() const noexcept;
  /// Exponent 1/(1-q) of the ensemble density kernel.
  [[nodiscard]] double kernel_exponent() const noexcept { return -inv_q_minus_one(); }
  /// Radius squared of the support ball, -lambda/alpha (restricted trace only).
  [[nodiscard]] double trace_bound() const;

 private:
  EnsembleParams(int n, double q, double lambda, double alpha, Regime regime);

  int n_;
  std::int64_t f_;
  double q_;
  double lambda_;
  double alpha_;
  double mu_;
  Regime regime_;
  double sigma_;
  std::optional<double> big_lambda_;
  std::optional<double> e_char_;
};

/// sqrt(n lambda / alpha).  Throws WrongRegime outside the Levy branch.
double characteristic_energy(const EnsembleParams& p);

}  // namespace qrmt

#include "qrmt/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qrmt/error.hpp"
#include "qrmt/specfun.hpp"

namespace qrmt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

QuadratureOptions tight() {
  QuadratureOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-13;
  o.max_intervals = 8000;
  return o;
}

// For densities that span many decades: stop on relative error only.
QuadratureOptions relative_only() {
  QuadratureOptions o = tight();
  o.abs_tol = 0.0;
  return o;
}

void require_levy(const EnsembleParams& p, const char* what) {
  if (p.regime() != Regime::LevyBranch) {
    throw Error(ErrorCode::WrongRegime, std::string(what) + " needs the Levy branch (lambda > 0)");
  }
}

double half_f(const EnsembleParams& p) { return 0.5 * static_cast<double>(p.f()); }

// Diagonal-element density.
double element_pdf_diag(double x, const EnsembleParams& p) {
  const double alpha = p.alpha();
  switch (p.regime()) {
    case Regime::Gaussian: return std::sqrt(alpha / kPi) * std::exp(-alpha * x * x);
    case Regime::LevyBranch: {
      const double lam = p.lambda();
      const double log_c = 0.5 * std::log(alpha / (kPi * lam)) + ln_gamma(lam + 0.5) - ln_gamma(lam);
      return std::exp(log_c - (lam + 0.5) * std::log1p(alpha / lam * x * x));
    }
    case Regime::RestrictedTrace: {
      const double a = -p.lambda();
      const double t = alpha / a * x * x;
      if (t >= 1.0) return 0.0;
      const double log_c = 0.5 * std::log(alpha / (kPi * a)) + ln_gamma(1.0 + a) - ln_gamma(0.5 + a);
      return std::exp(log_c + (a - 0.5) * std::log1p(-t));
    }
  }
  return 0.0;
}

double element_cdf_diag(double x, const EnsembleParams& p) {
  const double ax = std::abs(x);
  double half_mass = 0.0;  // int_0^|x| pdf
  switch (p.regime()) {
    case Regime::Gaussian: return 0.5 * erfc(-std::sqrt(p.alpha()) * x);
    case Regime::RestrictedTrace: {
      const double r = std::sqrt(-p.lambda() / p.alpha());
      const auto pdf = [&p](double t) { return element_pdf_diag(t, p); };
      half_mass = integrate(pdf, 0.0, std::min(ax, r), tight()).value;
      break;
    }
    case Regime::LevyBranch: {
      const double scale = std::sqrt(p.lambda() / p.alpha());
      const auto pdf = [&p](double t) { return element_pdf_diag(t, p); };
      if (ax <= 20.0 * scale) {
        half_mass = integrate(pdf, 0.0, ax, tight()).value;
      } else {
        // Tail mass with t = |x| / (1 - u), which keeps the power tail smooth.
        const auto tail = [&](double u) {
          if (u >= 1.0) return 0.0;
          const double s = 1.0 - u;
          return pdf(ax / s) * ax / (s * s);
        };
        half_mass = 0.5 - integrate(tail, 0.0, 1.0, tight()).value;
      }
      break;
    }
  }
  return x >= 0.0 ? 0.5 + half_mass : 0.5 - half_mass;
}

}  // namespace

std::string_view to_string(CurveKind k) noexcept {
  switch (k) {
    case CurveKind::ElementPdf: return "element_pdf";
    case CurveKind::LevelDensity: return "level_density";
    case CurveKind::GapProbability: return "gap_probability";
    case CurveKind::CharFn: return "char_fn";
    case CurveKind::Semicircle: return "semicircle";
  }
  return "unknown";
}

double xi_cutoff(double lambda) { return std::max(50.0, lambda + 20.0 * std::sqrt(lambda)); }

double log_partition(const EnsembleParams& p) {
  const double hf = half_f(p);
  const double alpha = p.alpha();
  switch (p.regime()) {
    case Regime::Gaussian: return hf * std::log(kPi / alpha);
    case Regime::LevyBranch: {
      const double lam = p.lambda();
      return hf * std::log(kPi * lam / alpha) + ln_gamma(lam) - ln_gamma(lam + hf);
    }
    case Regime::RestrictedTrace: {
      const double lam = p.lambda();
      return hf * std::log(-kPi * lam / alpha) + ln_gamma(p.kernel_exponent() + 1.0) - ln_gamma(1.0 - lam);
    }
  }
  return 0.0;
}

double matrix_pdf(const SymmetricMatrix& h, const EnsembleParams& p) {
  if (h.size() != p.n()) throw Error(ErrorCode::InvalidDimension, "matrix size does not match params");
  const double t = h.trace_sq();
  const double log_z = log_partition(p);
  switch (p.regime()) {
    case Regime::Gaussian: return std::exp(-p.alpha() * t - log_z);
    case Regime::LevyBranch: return std::exp(p.kernel_exponent() * std::log1p(p.alpha() / p.lambda() * t) - log_z);
    case Regime::RestrictedTrace: {
      if (t >= p.trace_bound()) return 0.0;
      const double e = p.kernel_exponent();
      const double base = std::log1p(p.alpha() / p.lambda() * t);
      return std::exp((e == 0.0 ? 0.0 : e * base) - log_z);
    }
  }
  return 0.0;
}

double element_pdf(double x, const EnsembleParams& p, ElementKind kind) {
  if (kind == ElementKind::Diagonal) return element_pdf_diag(x, p);
  return std::numbers::sqrt2 * element_pdf_diag(std::numbers::sqrt2 * x, p);
}

double element_cdf(double x, const EnsembleParams& p, ElementKind kind) {
  return element_cdf_diag(kind == ElementKind::Diagonal ? x : std::numbers::sqrt2 * x, p);
}

double element_gaussian_limit(double x, const EnsembleParams& p) {
  double a = p.alpha();
  if (p.regime() != Regime::Gaussian) {
    const double lam = p.lambda();
    if (lam > 0.0 && lam <= 1.0) {
      throw Error(ErrorCode::OutOfBranch, "Gaussian element limit needs lambda > 1 or q < 1");
    }
    a = (lam - 1.0) * p.alpha() / lam;
  }
  return std::sqrt(a / kPi) * std::exp(-a * x * x);
}

double element_levy_limit(double x, const EnsembleParams& p) {
  require_levy(p, "element_levy_limit");
  const double lam = p.lambda();
  if (lam >= 1.0) throw Error(ErrorCode::OutOfBranch, "Levy element limit needs 0 < lambda < 1");
  const TailParams tp = tail_params(lam);
  const double s = 2.0 * std::sqrt(p.alpha() / lam);
  return s * levy_density(s * x, tp.sigma, tp.big_lambda);
}

double element_char_fn(double k, const EnsembleParams& p) {
  if (p.regime() == Regime::Gaussian) return std::exp(-k * k / (4.0 * p.alpha()));
  require_levy(p, "element_char_fn");
  const double lam = p.lambda();
  const double z = std::abs(k) * std::sqrt(lam / p.alpha());
  if (z == 0.0) return 1.0;
  const double g = bessel_k_zpow(lam, z);
  if (g == 0.0) return 0.0;
  return std::exp((1.0 - lam) * std::numbers::ln2 - ln_gamma(lam) + std::log(g));
}

double element_char_fn_small_k(double k, const EnsembleParams& p) {
  require_levy(p, "element_char_fn_small_k");
  const double lam = p.lambda();
  const TailParams tp = tail_params(lam);
  const double kc = std::abs(k) * std::sqrt(lam / p.alpha());
  if (lam < 1.0) return std::exp(-tp.big_lambda * std::pow(0.5 * kc, tp.sigma));
  return std::exp(-tp.big_lambda * kc * kc);
}

double element_second_moment(const EnsembleParams& p, ElementKind kind) {
  const double scale = kind == ElementKind::Diagonal ? 1.0 : 0.5;
  if (p.regime() == Regime::Gaussian) return scale / (2.0 * p.alpha());
  const double lam = p.lambda();
  if (lam > 0.0 && lam <= 1.0) {
    throw Error(ErrorCode::MomentDivergence, "second moment diverges for 0 < lambda <= 1");
  }
  return scale * lam / (2.0 * p.alpha() * (lam - 1.0));
}

double element_correlation(const EnsembleParams& p, ElementKind kind) {
  if (p.regime() == Regime::Gaussian) return 0.0;
  const double lam = p.lambda();
  if (lam > 0.0 && lam <= 2.0) {
    throw Error(ErrorCode::MomentDivergence,
                "fourth moments diverge for 0 < lambda <= 2 (strongly correlated regime)");
  }
  const double a = p.alpha();
  const double c = lam * lam / (4.0 * a * a * (2.0 - lam) * (1.0 - lam) * (1.0 - lam));
  return kind == ElementKind::Diagonal ? c : 0.25 * c;
}

double semicircle_density(double e, int n, double alpha) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "semicircle needs n >= 1");
  if (!(alpha > 0.0)) throw Error(ErrorCode::Domain, "semicircle needs alpha > 0");
  const double r2 = static_cast<double>(n) / alpha;
  const double d = r2 - e * e;
  return d > 0.0 ? 2.0 * alpha / kPi * std::sqrt(d) : 0.0;
}

double level_density(double e, const EnsembleParams& p) {
  if (p.regime() == Regime::Gaussian) return semicircle_density(e, p.n(), p.alpha());
  require_levy(p, "level_density");
  const double n = p.n();
  const double lam = p.lambda();
  const double alpha = p.alpha();
  if (e == 0.0) {
    return 2.0 / kPi * std::sqrt(n * alpha / lam) * std::exp(ln_gamma(lam + 0.5) - ln_gamma(lam));
  }
  const double ae = std::abs(e);
  const double x = n * lam / (alpha * ae * ae);
  const double m = kummer_m(lam + 0.5, lam + 2.0, -x);
  const double log_rho = std::log(n) - (2.0 * lam + 1.0) * std::log(ae) - 0.5 * std::log(kPi) +
                         lam * std::log(n * lam / alpha) + ln_gamma(lam + 0.5) - ln_gamma(lam) -
                         ln_gamma(lam + 2.0) + std::log(m);
  return std::exp(log_rho);
}

QuadratureResult level_density_integral(double e, const EnsembleParams& p) {
  require_levy(p, "level_density_integral");
  const double n = p.n();
  const double lam = p.lambda();
  const double alpha = p.alpha();
  const double e2 = e * e;
  double upper = xi_cutoff(lam);
  if (e2 > 0.0) upper = std::min(upper, n * lam / (alpha * e2));
  const Integrand g = [=](double xi) { return std::sqrt(std::max(0.0, 2.0 * n - 2.0 * alpha / lam * xi * e2)); };
  QuadratureResult r = integrate_gamma_weight(g, lam + 0.5, upper, relative_only());
  const double pref = std::sqrt(2.0 * alpha / lam) / (kPi * std::exp(ln_gamma(lam)));
  r.value *= pref;
  r.abs_error_estimate *= pref;
  return r;
}

QuadratureResult level_density_mixture(double e, const EnsembleParams& p) {
  require_levy(p, "level_density_mixture");
  const int n = p.n();
  const double lam = p.lambda();
  const double alpha = p.alpha();
  double upper = xi_cutoff(lam);
  if (e != 0.0) upper = std::min(upper, n * lam / (alpha * e * e));
  const Integrand g = [=](double xi) { return xi > 0.0 ? semicircle_density(e, n, alpha * xi / lam) : 0.0; };
  QuadratureResult r = integrate_gamma_weight(g, lam, upper, relative_only());
  const double inv_gamma = std::exp(-ln_gamma(lam));
  r.value *= inv_gamma;
  r.abs_error_estimate *= inv_gamma;
  return r;
}

namespace {

// 2 int_0^theta semicircle(E; n, alpha) dE.
double semicircle_count(double theta, int n, double alpha) {
  const double nn = n;
  const double r = std::sqrt(nn / alpha);
  const double u = std::min(theta / r, 1.0);
  return 2.0 * nn / kPi * (u * std::sqrt(std::max(0.0, 1.0 - u * u)) + std::asin(u));
}

}  // namespace

QuadratureResult level_count(double theta, const EnsembleParams& p) {
  if (theta < 0.0) throw Error(ErrorCode::Domain, "level_count needs theta >= 0");
  QuadratureResult r;
  r.converged = true;
  if (theta == 0.0) return r;
  if (p.regime() == Regime::Gaussian) {
    r.value = semicircle_count(theta, p.n(), p.alpha());
    return r;
  }
  require_levy(p, "level_count");
  const int n = p.n();
  const double lam = p.lambda();
  const double alpha = p.alpha();
  // Average of the semicircle counting function over xi; the kink where
  // the semicircle edge crosses theta is placed on a subinterval boundary.
  const Integrand g = [=](double xi) {
    return xi > 0.0 ? semicircle_count(theta, n, alpha * xi / lam) : 0.0;
  };
  const double cut = xi_cutoff(lam);
  const double kink = n * lam / (alpha * theta * theta);
  const double inv_gamma = std::exp(-ln_gamma(lam));
  if (kink < cut) {
    const QuadratureResult a = integrate_gamma_weight(g, lam, kink, tight());
    const Integrand w = [&](double xi) { return std::exp(-xi + (lam - 1.0) * std::log(xi)) * g(xi); };
    const QuadratureResult b = integrate(w, kink, cut, tight());
    r.value = a.value + b.value;
    r.abs_error_estimate = a.abs_error_estimate + b.abs_error_estimate;
    r.evaluations = a.evaluations + b.evaluations;
    r.converged = a.converged && b.converged;
  } else {
    r = integrate_gamma_weight(g, lam, cut, tight());
  }
  r.value *= inv_gamma;
  r.abs_error_estimate *= inv_gamma;
  return r;
}

double level_count_inverse(double s, const EnsembleParams& p) {
  const double n = p.n();
  if (!(s >= 0.0) || !(s < n)) throw Error(ErrorCode::Domain, "level_count_inverse needs 0 <= s < n");
  if (s == 0.0) return 0.0;
  double lo = 0.0;
  double hi = p.regime() == Regime::Gaussian ? std::sqrt(n / p.alpha()) : std::sqrt(n * p.lambda() / p.alpha());
  while (level_count(hi, p).value < s) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (level_count(mid, p).value < s ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double goe_counting(double x, int n) {
  if (x < 0.0) throw Error(ErrorCode::Domain, "goe_counting needs x >= 0");
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "goe_counting needs n >= 1");
  const double two_n = 2.0 * n;
  const double r = std::sqrt(two_n);
  if (x >= r) return static_cast<double>(n);
  return (x * std::sqrt(two_n - x * x) + two_n * std::asin(x / r)) / kPi;
}

double goe_gap_surmise(double y) { return erfc(0.5 * kSqrtPi * y); }

QuadratureResult gap_probability(double theta, const EnsembleParams& p) {
  if (theta < 0.0) throw Error(ErrorCode::Domain, "gap_probability needs theta >= 0");
  QuadratureResult r;
  r.converged = true;
  if (theta == 0.0) {
    r.value = 1.0;
    return r;
  }
  const int n = p.n();
  if (p.regime() == Regime::Gaussian) {
    r.value = goe_gap_surmise(goe_counting(std::sqrt(2.0 * p.alpha()) * theta, n));
    return r;
  }
  require_levy(p, "gap_probability");
  const double lam = p.lambda();
  const double c = 2.0 * p.alpha() / lam * theta * theta;
  const Integrand g = [=](double xi) { return goe_gap_surmise(goe_counting(std::sqrt(c * xi), n)); };
  // The integrand falls off once sqrt(c xi) is of order one, which for
  // large theta is far below the Gamma scale; cut at geometric points of
  // sqrt(c xi) so every piece resolves its own scale.
  const double cut = xi_cutoff(lam);
  double lo = std::min(cut, 1e-4 / c);
  r = integrate_gamma_weight(g, lam, lo, tight());
  const Integrand w = [&](double xi) { return std::exp(-xi + (lam - 1.0) * std::log(xi)) * g(xi); };
  while (lo < cut) {
    const double hi = std::min(cut, 4.0 * lo);
    const QuadratureResult piece = integrate(w, lo, hi, tight());
    r.value += piece.value;
    r.abs_error_estimate += piece.abs_error_estimate;
    r.evaluations += piece.evaluations;
    r.converged = r.converged && piece.converged;
    lo = hi;
  }
  const double inv_gamma = std::exp(-ln_gamma(lam));
  r.value *= inv_gamma;
  r.abs_error_estimate *= inv_gamma;
  return r;
}

QuadratureResult gap_probability_rescaled(double theta, const EnsembleParams& p) {
  if (theta < 0.0) throw Error(ErrorCode::Domain, "gap_probability needs theta >= 0");
  require_levy(p, "gap_probability_rescaled");
  QuadratureResult r;
  r.converged = true;
  if (theta == 0.0) {
    r.value = 1.0;
    return r;
  }
  const int n = p.n();
  const double lam = p.lambda();
  const double alpha = p.alpha();
  const double c = lam / (2.0 * alpha * theta * theta);
  const double x_max = theta * std::sqrt(2.0 * alpha * xi_cutoff(lam) / lam);
  const double two_lam = 2.0 * lam;
  const Integrand g = [=](double x) {
    if (x == 0.0) return two_lam == 1.0 ? 1.0 : 0.0;
    return std::exp(-c * x * x + (two_lam - 1.0) * std::log(x)) * goe_gap_surmise(goe_counting(x, n));
  };
  // Near the origin the weight x^(2 lambda - 1) may be singular.
  double lo = std::min(x_max, 0.01);
  if (two_lam < 1.0) {
    // x^(2 lambda - 1) dx = dv / (2 lambda), v = x^(2 lambda)
    const Integrand gv = [=](double v) {
      const double x = std::pow(v, 1.0 / two_lam);
      return std::exp(-c * x * x) * goe_gap_surmise(goe_counting(x, n)) / two_lam;
    };
    r = integrate(gv, 0.0, std::pow(lo, two_lam), tight());
  } else {
    r = integrate(g, 0.0, lo, tight());
  }
  while (lo < x_max) {
    const double hi = std::min(x_max, 2.0 * lo);
    const QuadratureResult piece = integrate(g, lo, hi, tight());
    r.value += piece.value;
    r.abs_error_estimate += piece.abs_error_estimate;
    r.evaluations += piece.evaluations;
    r.converged = r.converged && piece.converged;
    lo = hi;
  }
  const double log_pref = std::log(2.0) - ln_gamma(lam) + lam * std::log(lam / (2.0 * alpha)) - two_lam * std::log(theta);
  const double pref = std::exp(log_pref);
  r.value *= pref;
  r.abs_error_estimate *= pref;
  return r;
}

double gap_power_law(double s) { return 0.5 / (s * s); }

double ln_goe_eigen_constant(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "n must be >= 1");
  // int exp(-|x|^2/2) prod|x_j - x_i| dx = (2 pi)^(n/2) prod_j Gamma(1 + j/2) / Gamma(3/2)
  double log_integral = 0.5 * n * std::log(2.0 * kPi);
  for (int j = 1; j <= n; ++j) log_integral += ln_gamma(1.0 + 0.5 * j) - ln_gamma(1.5);
  return -log_integral;
}

namespace {

double log_vandermonde(std::span<const double> e) {
  double s = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) s += std::log(std::abs(e[j] - e[i]));
  }
  return s;
}

double sum_sq(std::span<const double> e) {
  double s = 0.0;
  for (double v : e) s += v * v;
  return s;
}

void require_size(std::span<const double> e, const EnsembleParams& p) {
  if (static_cast<int>(e.size()) != p.n()) {
    throw Error(ErrorCode::InvalidDimension, "eigenvalue count does not match params");
  }
}

}  // namespace

double joint_eigen_density(std::span<const double> e, const EnsembleParams& p) {
  require_size(e, p);
  const double hf = half_f(p);
  const double alpha = p.alpha();
  const double t = sum_sq(e);
  const double lv = log_vandermonde(e);
  if (!std::isfinite(lv)) return 0.0;
  const double lk_goe = ln_goe_eigen_constant(p.n());
  switch (p.regime()) {
    case Regime::Gaussian: return std::exp(hf * std::log(2.0 * alpha) + lk_goe - alpha * t + lv);
    case Regime::LevyBranch: {
      const double lam = p.lambda();
      const double lk = hf * std::log(2.0 * alpha / lam) + ln_gamma(lam + hf) - ln_gamma(lam) + lk_goe;
      return std::exp(lk + p.kernel_exponent() * std::log1p(alpha / lam * t) + lv);
    }
    case Regime::RestrictedTrace: {
      const double a = -p.lambda();
      if (t >= a / alpha) return 0.0;
      const double lk = hf * std::log(2.0 * alpha / a) + ln_gamma(1.0 + a) - ln_gamma(1.0 + a - hf) + lk_goe;
      const double ex = p.kernel_exponent();
      return std::exp(lk + (ex == 0.0 ? 0.0 : ex * std::log1p(-alpha / a * t)) + lv);
    }
  }
  return 0.0;
}

QuadratureResult joint_eigen_density_laplace(std::span<const double> e, const EnsembleParams& p) {
  require_size(e, p);
  require_levy(p, "joint_eigen_density_laplace");
  const double hf = half_f(p);
  const double alpha = p.alpha();
  const double lam = p.lambda();
  const double shape = p.inv_q_minus_one();
  const double t = sum_sq(e);
  const Integrand g = [=](double xi) { return std::exp(-alpha / lam * xi * t); };
  QuadratureResult r = integrate_gamma_weight(g, shape, xi_cutoff(shape), tight());
  const double lk = hf * std::log(2.0 * alpha / lam) + ln_gamma(shape) - ln_gamma(lam) + ln_goe_eigen_constant(p.n());
  const double pref = std::exp(lk - ln_gamma(shape) + log_vandermonde(e));
  r.value *= pref;
  r.abs_error_estimate *= pref;
  return r;
}

QuadratureResult joint_eigen_density_goe_mixture(std::span<const double> e, const EnsembleParams& p) {
  require_size(e, p);
  require_levy(p, "joint_eigen_density_goe_mixture");
  const int n = p.n();
  const double nn = n;
  const double alpha = p.alpha();
  const double lam = p.lambda();
  const double scale = std::sqrt(2.0 * alpha / lam);
  std::vector<double> x(e.begin(), e.end());
  for (double& v : x) v *= scale;
  const double lk_goe = ln_goe_eigen_constant(n);
  const double tx = sum_sq(x);
  const double lvx = log_vandermonde(x);
  // Standard-unit GOE density at sqrt(xi) x.
  const Integrand goe = [=](double xi) {
    const double lv = lvx + 0.25 * nn * (nn - 1.0) * std::log(xi);
    return std::exp(lk_goe - 0.5 * xi * tx + lv);
  };
  const double shape = lam + 0.5 * nn;
  QuadratureResult r = integrate_gamma_weight(goe, shape, xi_cutoff(shape + 0.25 * nn * (nn - 1.0)), tight());
  const double pref = std::exp(0.5 * nn * std::log(scale * scale) - ln_gamma(lam));
  r.value *= pref;
  r.abs_error_estimate *= pref;
  return r;
}

AnalyticCurve element_curve(const EnsembleParams& p, std::span<const double> grid, ElementKind kind) {
  AnalyticCurve c{CurveKind::ElementPdf, p, {grid.begin(), grid.end()}, {}, {}, 0.0};
  for (double x : grid) c.values.push_back(element_pdf(x, p, kind));
  c.errors.assign(grid.size(), 0.0);
  return c;
}

AnalyticCurve char_fn_curve(const EnsembleParams& p, std::span<const double> grid) {
  AnalyticCurve c{CurveKind::CharFn, p, {grid.begin(), grid.end()}, {}, {}, 0.0};
  for (double k : grid) c.values.push_back(element_char_fn(k, p));
  c.errors.assign(grid.size(), 0.0);
  return c;
}

AnalyticCurve level_density_curve(const EnsembleParams& p, std::span<const double> grid) {
  AnalyticCurve c{CurveKind::LevelDensity, p, {grid.begin(), grid.end()}, {}, {}, 0.0};
  for (double e : grid) c.values.push_back(level_density(e, p));
  c.errors.assign(grid.size(), 0.0);
  return c;
}

AnalyticCurve semicircle_curve(int n, double alpha, std::span<const double> grid) {
  AnalyticCurve c{CurveKind::Semicircle, EnsembleParams::gaussian(n, alpha), {grid.begin(), grid.end()}, {}, {}, 0.0};
  for (double e : grid) c.values.push_back(semicircle_density(e, n, alpha));
  c.errors.assign(grid.size(), 0.0);
  return c;
}

AnalyticCurve gap_curve(const EnsembleParams& p, std::span<const double> theta_grid) {
  AnalyticCurve c{CurveKind::GapProbability, p, {}, {}, {}, 0.0};
  for (double theta : theta_grid) {
    const QuadratureResult s = level_count(theta, p);
    const QuadratureResult g = gap_probability(theta, p);
    c.abscissae.push_back(s.value);
    c.values.push_back(g.value);
    const double err = g.abs_error_estimate;
    c.errors.push_back(err);
    c.quadrature_error = std::max({c.quadrature_error, err, s.abs_error_estimate});
  }
  return c;
}

}  // namespace qrmt

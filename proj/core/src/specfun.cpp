#include "qrmt/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qrmt/error.hpp"

namespace qrmt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// 1/Gamma(1 + x) = sum c_k x^k near x = 0 (Abramowitz & Stegun 6.1.34).
constexpr double kC1 = 0.5772156649015329;
constexpr double kC3 = -0.0420026350340952;
constexpr double kC5 = -0.0421977345555443;

struct TemmeGammas {
  double gam1;   // (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
  double gam2;   // (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  TemmeGammas g{};
  g.gampl = std::exp(-ln_gamma(1.0 + mu));
  g.gammi = std::exp(-ln_gamma(1.0 - mu));
  g.gam2 = 0.5 * (g.gammi + g.gampl);
  if (std::abs(mu) < 1e-3) {
    const double m2 = mu * mu;
    g.gam1 = -(kC1 + m2 * (kC3 + m2 * kC5));
  } else {
    g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
  }
  return g;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, each multiplied by x^mu and
// x^(mu+1) respectively.
struct KPair {
  double k_mu;
  double k_mu1;
};

KPair bessel_k_low_order(double mu, double x) {
  const double mu2 = mu * mu;
  if (x <= 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < 1e-15 ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < 1e-15 ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i < 500; ++i) {
      const double di = i;
      ff = (di * ff + p + q) / (di * di - mu2);
      c *= d / di;
      p /= di - mu;
      q /= di + mu;
      const double del = c * ff;
      sum += del;
      const double del1 = c * (p - di * ff);
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    // sum = K_mu, sum1 * 2/x = K_{mu+1}
    return {sum * std::pow(x, mu), sum1 * 2.0 * std::pow(x, mu)};
  }
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    const double di = i;
    a -= 2.0 * (di - 1.0);
    c = -a * c / di;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  const double kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  const double kmu1 = kmu * (mu + x + 0.5 - h) / x;
  const double xm = std::pow(x, mu);
  return {kmu * xm, kmu1 * xm * x};
}

void check_kummer_args(double b, double z) {
  if (is_nonpositive_integer(b)) {
    throw Error(ErrorCode::Domain, "kummer_m: b must not be a nonpositive integer");
  }
  if (!(z <= 0.0)) throw Error(ErrorCode::Domain, "kummer_m is implemented for z <= 0 only");
}

// M(a, b, z) as the plain power series; only used when a is a nonpositive
// integer, in which case it is a polynomial.
double kummer_polynomial(double a, double b, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; a + n != 0.0; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1);
    sum += term;
  }
  return sum;
}

bool try_kummer_asymptotic(double a, double b, double z, double& out) {
  const double x = -z;
  const double c = b - a;
  if (is_nonpositive_integer(c) || is_nonpositive_integer(a) || x <= 0.0) return false;

  double term = 1.0;
  double sum = 1.0;
  bool converged = false;
  for (int n = 0; n < 2000; ++n) {
    const double factor = (a + n) * (a - b + 1.0 + n) / ((n + 1.0) * x);
    if (factor == 0.0) {
      converged = true;
      break;
    }
    if (n > 0 && std::abs(factor) >= 1.0) break;  // terms about to grow
    term *= factor;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;

  const SignedLog gc = gamma_signed_log(c);
  // Relative size of the exponentially small companion series.
  const double log_ratio = -x + (2.0 * a - b) * std::log(x) + gc.log_abs - ln_gamma(a);
  if (log_ratio > std::log(kEps)) return false;

  const SignedLog gb = gamma_signed_log(b);
  out = gb.sign * gc.sign * std::exp(gb.log_abs - gc.log_abs - a * std::log(x)) * sum;
  return true;
}

// Repeated averaging of neighbouring partial sums of an alternating series.
double euler_average(std::vector<double> s) {
  while (s.size() > 1) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    s.pop_back();
  }
  return s.front();
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::Domain, "ln_gamma needs x > 0");
  if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
  const double y = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (y + static_cast<double>(i));
  const double t = y + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (y + 0.5) * std::log(t) - t + std::log(acc);
}

double gamma_fn(double x) { return std::exp(ln_gamma(x)); }

SignedLog gamma_signed_log(double x) {
  if (x > 0.0) return {ln_gamma(x), 1};
  if (is_nonpositive_integer(x)) throw Error(ErrorCode::Domain, "Gamma has a pole at nonpositive integers");
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
  const double s = std::sin(kPi * x);
  return {std::log(kPi) - std::log(std::abs(s)) - ln_gamma(1.0 - x), s > 0.0 ? 1 : -1};
}

double erf(double x) { return std::erf(x); }

double erfc(double x) { return std::erfc(x); }

double bessel_k_zpow(double nu, double z) {
  if (!(nu >= 0.0)) throw Error(ErrorCode::Domain, "bessel_k: order must be >= 0");
  if (!(z > 0.0)) throw Error(ErrorCode::Domain, "bessel_k: argument must be > 0");
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const KPair start = bessel_k_low_order(mu, z);
  double g_prev = start.k_mu;  // z^m K_m at m = mu
  double g_cur = start.k_mu1;  // m = mu + 1
  if (nl == 0) return g_prev;
  const double z2 = z * z;
  // G_{m+1} = z^2 G_{m-1} + 2 m G_m with G_m = z^m K_m.
  for (int i = 1; i < nl; ++i) {
    const double m = mu + i;
    const double g_next = z2 * g_prev + 2.0 * m * g_cur;
    g_prev = g_cur;
    g_cur = g_next;
  }
  return g_cur;
}

double bessel_k(double nu, double z) {
  const double g = bessel_k_zpow(nu, z);
  return std::exp(std::log(g) - nu * std::log(z));
}

double kummer_m_series(double a, double b, double z) {
  check_kummer_args(b, z);
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a)) return kummer_polynomial(a, b, z);
  const double x = -z;
  const double c = b - a;
  // sum_n (c)_n/(b)_n x^n/n!, times e^{-x}; `scale` carries the exponent.
  double scale = -x;
  double term = 1.0;
  double sum = 1.0;
  constexpr double kBig = 1e200;
  const double log_big = std::log(kBig);
  const int max_terms = static_cast<int>(10.0 * (x + std::abs(c) + 100.0)) + 1000;
  for (int n = 0; n < max_terms; ++n) {
    const double cn = c + n;
    if (cn == 0.0) break;
    const double ratio = cn / (b + n) * x / (n + 1.0);
    term *= ratio;
    sum += term;
    if (std::abs(term) > kBig) {
      term /= kBig;
      sum /= kBig;
      scale += log_big;
    }
    const double abs_ratio = std::abs(ratio);
    if (n > x && abs_ratio < 1.0 && std::abs(term) * abs_ratio / (1.0 - abs_ratio) < kEps * std::abs(sum)) break;
  }
  return sum * std::exp(scale);
}

double kummer_m_asymptotic(double a, double b, double z) {
  check_kummer_args(b, z);
  double out = 0.0;
  if (!try_kummer_asymptotic(a, b, z, out)) {
    throw Error(ErrorCode::Domain, "kummer_m: asymptotic expansion does not converge at z = " + std::to_string(z));
  }
  return out;
}

double kummer_m(double a, double b, double z) {
  check_kummer_args(b, z);
  if (z == 0.0) return 1.0;
  if (-z >= 30.0) {
    double out = 0.0;
    if (try_kummer_asymptotic(a, b, z, out)) return out;
  }
  return kummer_m_series(a, b, z);
}

QuadratureResult levy_density_detail(double x, double sigma, double big_lambda) {
  if (!(sigma > 0.0) || sigma > 2.0) throw Error(ErrorCode::Domain, "levy_density: sigma must lie in (0, 2]");
  if (!(big_lambda > 0.0)) throw Error(ErrorCode::Domain, "levy_density: Lambda must be > 0");
  QuadratureResult res;
  res.converged = true;
  const double ax = std::abs(x);
  if (sigma == 2.0) {
    res.value = std::exp(-ax * ax / (4.0 * big_lambda)) / (2.0 * std::sqrt(kPi * big_lambda));
    return res;
  }
  if (sigma == 1.0) {
    res.value = big_lambda / (kPi * (big_lambda * big_lambda + ax * ax));
    return res;
  }
  if (ax == 0.0) {
    res.value = std::exp(ln_gamma(1.0 + 1.0 / sigma)) / (kPi * std::pow(big_lambda, 1.0 / sigma));
    return res;
  }

  // With tau = x t: L = 1/(pi x) int_0^inf exp(-Lambda (tau/x)^sigma) cos(tau) dtau.
  auto envelope = [=](double tau) { return std::exp(-big_lambda * std::pow(tau / ax, sigma)); };
  const Integrand f = [&](double tau) { return envelope(tau) * std::cos(tau); };
  QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 1e-13;

  constexpr int kMaxSegments = 200;
  constexpr int kAveraged = 40;
  std::vector<double> partial;
  partial.reserve(kMaxSegments + 1);
  double lo = 0.0;
  double hi = 0.5 * kPi;
  double sum = 0.0;
  double err = 0.0;
  bool tail_negligible = false;
  for (int k = 0; k <= kMaxSegments; ++k) {
    const QuadratureResult seg = integrate(f, lo, hi, opts);
    res.evaluations += seg.evaluations;
    sum += seg.value;
    err += seg.abs_error_estimate;
    partial.push_back(sum);
    // Remaining alternating tail is bounded by the next segment, which is
    // at most 2 * envelope(hi).
    if (2.0 * envelope(hi) < 1e-17) {
      tail_negligible = true;
      break;
    }
    lo = hi;
    hi += kPi;
  }
  double value = sum;
  if (!tail_negligible) {
    const auto end = partial.end();
    value = euler_average({end - kAveraged, end});
    err += std::abs(value - euler_average({end - kAveraged - 1, end - 1}));
  }
  res.value = value / (kPi * ax);
  res.abs_error_estimate = err / (kPi * ax);
  res.converged = res.abs_error_estimate < 1e-9;
  return res;
}

double levy_density(double x, double sigma, double big_lambda) {
  return levy_density_detail(x, sigma, big_lambda).value;
}

}  // namespace qrmt

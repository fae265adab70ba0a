#include "qrmt/sampler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qrmt/error.hpp"

namespace qrmt {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::Domain, std::string(what) + " must be finite and > 0");
  }
}

// Marsaglia-Tsang for shape >= 1.
double gamma_mt(double shape, RngStream& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gaussian(double mean, double variance, RngStream& rng) {
  require_positive(variance, "variance");
  return mean + std::sqrt(variance) * rng.normal();
}

double sample_gamma(double shape, RngStream& rng) {
  require_positive(shape, "gamma shape");
  if (shape >= 1.0) return gamma_mt(shape, rng);
  const double g = gamma_mt(shape + 1.0, rng);
  return g * std::pow(rng.uniform_open(), 1.0 / shape);
}

double sample_beta(double a, double b, RngStream& rng) {
  require_positive(a, "beta parameter a");
  require_positive(b, "beta parameter b");
  const double x = sample_gamma(a, rng);
  const double y = sample_gamma(b, rng);
  return x / (x + y);
}

double sample_student_t(double dof, double scale, RngStream& rng) {
  require_positive(dof, "degrees of freedom");
  require_positive(scale, "scale");
  for (;;) {
    const double u = 2.0 * rng.uniform() - 1.0;
    const double v = 2.0 * rng.uniform() - 1.0;
    const double w = u * u + v * v;
    if (w > 1.0 || w == 0.0) continue;
    return scale * u * std::sqrt(dof * (std::pow(w, -2.0 / dof) - 1.0) / w);
  }
}

double sample_levy_stable(double sigma, double scale, RngStream& rng) {
  if (!(sigma > 0.0) || sigma > 2.0) throw Error(ErrorCode::Domain, "stable exponent must lie in (0, 2]");
  require_positive(scale, "scale");
  const double v = std::numbers::pi * (rng.uniform_open() - 0.5);
  if (sigma == 1.0) return scale * std::tan(v);
  const double w = rng.exponential();
  const double x = std::sin(sigma * v) / std::pow(std::cos(v), 1.0 / sigma) *
                   std::pow(std::cos((1.0 - sigma) * v) / w, (1.0 - sigma) / sigma);
  return scale * x;
}

SymmetricMatrix goe_matrix(int n, double alpha, RngStream& rng) {
  require_positive(alpha, "alpha");
  SymmetricMatrix h(n);
  const double sd_diag = std::sqrt(1.0 / (2.0 * alpha));
  const double sd_off = std::sqrt(1.0 / (4.0 * alpha));
  for (int i = 0; i < n; ++i) {
    h.set(i, i, sd_diag * rng.normal());
    for (int j = i + 1; j < n; ++j) h.set(i, j, sd_off * rng.normal());
  }
  return h;
}

MatrixSample sample_goe(int n, double alpha, RngStream& rng) {
  auto params = EnsembleParams::gaussian(n, alpha);
  return MatrixSample{goe_matrix(n, alpha, rng), params, std::nullopt, rng.stream_id(), rng.master_seed()};
}

MatrixSample sample_q_gt1(const EnsembleParams& p, RngStream& rng) {
  if (p.regime() != Regime::LevyBranch) {
    throw Error(ErrorCode::WrongRegime, "sample_q_gt1 needs the Levy branch (lambda > 0)");
  }
  const double xi = sample_gamma(p.lambda(), rng);
  return MatrixSample{goe_matrix(p.n(), p.alpha() * xi / p.lambda(), rng), p, xi, rng.stream_id(),
                      rng.master_seed()};
}

MatrixSample sample_q_lt1(const EnsembleParams& p, RngStream& rng) {
  if (p.regime() != Regime::RestrictedTrace) {
    throw Error(ErrorCode::WrongRegime, "sample_q_lt1 needs q < 1");
  }
  const int n = p.n();
  const auto f = static_cast<std::size_t>(p.f());
  const double bound = p.trace_bound();
  const double shape_a = 0.5 * static_cast<double>(f);
  const double shape_b = p.kernel_exponent() + 1.0;

  std::vector<double> dir(f);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& g : dir) {
      g = rng.normal();
      norm2 += g * g;
    }
  } while (norm2 == 0.0);
  const double inv_norm = 1.0 / std::sqrt(norm2);

  // Redraw the radius in the (measure-zero, rounding-only) event that the
  // assembled matrix lands on the boundary.
  for (;;) {
    const double u = sample_beta(shape_a, shape_b, rng);
    const double r = std::sqrt(u * bound);
    SymmetricMatrix h(n);
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j, ++k) {
        const double x = r * dir[k] * inv_norm;
        h.set(i, j, i == j ? x : x * std::numbers::sqrt2 * 0.5);
      }
    }
    if (h.trace_sq() < bound) return MatrixSample{std::move(h), p, std::nullopt, rng.stream_id(), rng.master_seed()};
  }
}

MatrixSample sample_bounded_trace(int n, double alpha, RngStream& rng) {
  return sample_q_lt1(EnsembleParams::bounded_trace(n, alpha), rng);
}

MatrixSample sample_ensemble(const EnsembleParams& p, RngStream& rng) {
  switch (p.regime()) {
    case Regime::Gaussian: {
      MatrixSample s{goe_matrix(p.n(), p.alpha(), rng), p, std::nullopt, rng.stream_id(), rng.master_seed()};
      return s;
    }
    case Regime::LevyBranch: return sample_q_gt1(p, rng);
    case Regime::RestrictedTrace: return sample_q_lt1(p, rng);
  }
  throw Error(ErrorCode::WrongRegime, "unknown regime");
}

MatrixSample sample_ensemble(const EnsembleParams& p, std::uint64_t master_seed, std::uint64_t index) {
  RngStream rng(master_seed, index);
  return sample_ensemble(p, rng);
}

std::vector<double> random_orthogonal(int n, RngStream& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidDimension, "matrix dimension must be >= 1");
  const auto nn = static_cast<std::size_t>(n);
  // Columns of a Gaussian matrix, orthonormalized by modified Gram-Schmidt.
  // The implied R has a positive diagonal, which makes the result Haar.
  std::vector<std::vector<double>> cols(nn, std::vector<double>(nn));
  for (auto& c : cols) {
    for (double& v : c) v = rng.normal();
  }
  for (std::size_t j = 0; j < nn; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < nn; ++i) dot += cols[k][i] * cols[j][i];
      for (std::size_t i = 0; i < nn; ++i) cols[j][i] -= dot * cols[k][i];
    }
    double norm = 0.0;
    for (double v : cols[j]) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : cols[j]) v /= norm;
  }
  std::vector<double> o(nn * nn);
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) o[i * nn + j] = cols[j][i];
  }
  return o;
}

}  // namespace qrmt

#include "qrmt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qrmt/analytic.hpp"
#include "qrmt/error.hpp"
#include "qrmt/sampler.hpp"

namespace qrmt {

std::vector<double> SpectrumBatch::pooled() const {
  std::vector<double> out;
  std::size_t total = 0;
  for (const auto& s : spectra) total += s.size();
  out.reserve(total);
  for (const auto& s : spectra) out.insert(out.end(), s.begin(), s.end());
  return out;
}

SpectrumBatch make_batch(const EnsembleParams& p, std::vector<std::vector<double>> spectra) {
  if (spectra.empty()) throw Error(ErrorCode::Domain, "batch needs at least one spectrum");
  for (const auto& s : spectra) {
    if (static_cast<int>(s.size()) != p.n()) throw Error(ErrorCode::InvalidDimension, "spectrum length differs from n");
    if (!std::is_sorted(s.begin(), s.end())) throw Error(ErrorCode::Domain, "spectrum not sorted");
  }
  return SpectrumBatch{std::move(spectra), p};
}

std::vector<double> sample_spectrum(const EnsembleParams& p, std::uint64_t seed, std::uint64_t index) {
  return eigenvalues(sample_ensemble(p, seed, index).h);
}

SpectrumBatch sample_spectra(const EnsembleParams& p, std::uint64_t seed, std::size_t count,
                             std::uint64_t first_index) {
  std::vector<std::vector<double>> spectra;
  spectra.reserve(count);
  for (std::size_t i = 0; i < count; ++i) spectra.push_back(sample_spectrum(p, seed, first_index + i));
  return make_batch(p, std::move(spectra));
}

double Histogram::integral() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < bins(); ++i) s += density[i] * width(i);
  return s;
}

std::vector<double> uniform_edges(double lo, double hi, std::size_t bins) {
  if (!(hi > lo) || bins == 0) throw Error(ErrorCode::Domain, "uniform_edges needs lo < hi and bins > 0");
  std::vector<double> e(bins + 1);
  const double w = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) e[i] = lo + w * static_cast<double>(i);
  e.back() = hi;
  return e;
}

std::vector<double> log_edges(double lo, double hi, std::size_t bins) {
  if (!(lo > 0.0) || !(hi > lo) || bins == 0) throw Error(ErrorCode::Domain, "log_edges needs 0 < lo < hi");
  std::vector<double> e(bins + 1);
  const double r = std::log(hi / lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) e[i] = lo * std::exp(r * static_cast<double>(i));
  e.front() = lo;
  e.back() = hi;
  return e;
}

Histogram make_histogram(std::span<const double> values, std::span<const double> edges, HistogramMode mode,
                         std::size_t spectra) {
  if (edges.size() < 2) throw Error(ErrorCode::Domain, "histogram needs at least two edges");
  if (!std::is_sorted(edges.begin(), edges.end())) throw Error(ErrorCode::Domain, "edges not sorted");
  Histogram h;
  h.edges.assign(edges.begin(), edges.end());
  h.mode = mode;
  h.counts.assign(edges.size() - 1, 0.0);
  h.total = values.size();
  for (double v : values) {
    if (v < edges.front()) {
      ++h.underflow;
    } else if (v > edges.back()) {
      ++h.overflow;
    } else {
      auto it = std::upper_bound(edges.begin(), edges.end(), v);
      std::size_t i = static_cast<std::size_t>(it - edges.begin());
      i = i == 0 ? 0 : i - 1;
      if (i >= h.counts.size()) i = h.counts.size() - 1;  // v == last edge
      h.counts[i] += 1.0;
    }
  }
  const double norm = mode == HistogramMode::LevelDensity ? static_cast<double>(spectra)
                                                           : static_cast<double>(values.size());
  h.density.resize(h.bins());
  h.errors.resize(h.bins());
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double d = norm > 0.0 ? norm * h.width(i) : 1.0;
    h.density[i] = norm > 0.0 ? h.counts[i] / d : 0.0;
    h.errors[i] = norm > 0.0 ? std::sqrt(h.counts[i]) / d : 0.0;
  }
  return h;
}

Histogram empirical_density(const SpectrumBatch& batch, std::span<const double> edges) {
  const std::vector<double> all = batch.pooled();
  Histogram h = make_histogram(all, edges, HistogramMode::LevelDensity, batch.count());
  // Levels of one matrix are not independent, so the error comes from the
  // spread of per-spectrum bin counts rather than from Poisson statistics.
  const std::size_t m = batch.count();
  std::vector<double> sum_sq(h.bins(), 0.0);
  for (const auto& spec : batch.spectra) {
    const Histogram one = make_histogram(spec, edges, HistogramMode::LevelDensity, 1);
    for (std::size_t i = 0; i < h.bins(); ++i) sum_sq[i] += one.counts[i] * one.counts[i];
  }
  const double md = static_cast<double>(m);
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double mean = h.counts[i] / md;
    const double var = m > 1 ? std::max(0.0, (sum_sq[i] - md * mean * mean) / (md - 1.0)) : mean;
    h.errors[i] = std::sqrt(var / md) / h.width(i);
  }
  return h;
}

Histogram empirical_density(const SpectrumBatch& batch, std::size_t bins) {
  const std::vector<double> all = batch.pooled();
  auto [lo, hi] = std::minmax_element(all.begin(), all.end());
  double a = *lo;
  double b = *hi;
  if (a == b) {
    const double pad = a == 0.0 ? 0.5 : 0.5 * std::abs(a);
    a -= pad;
    b += pad;
  }
  return make_histogram(all, uniform_edges(a, b, bins), HistogramMode::LevelDensity, batch.count());
}

GapEstimate empirical_gap(const SpectrumBatch& batch, std::span<const double> theta_grid, CountSource source) {
  const std::size_t m = batch.count();
  std::vector<double> nearest(m);
  for (std::size_t i = 0; i < m; ++i) {
    double best = INFINITY;
    for (double e : batch.spectra[i]) best = std::min(best, std::abs(e));
    nearest[i] = best;
  }
  std::vector<double> sorted_nearest = nearest;
  std::sort(sorted_nearest.begin(), sorted_nearest.end());
  std::vector<double> abs_all;
  if (source == CountSource::Empirical) {
    abs_all = batch.pooled();
    for (double& v : abs_all) v = std::abs(v);
    std::sort(abs_all.begin(), abs_all.end());
  }

  GapEstimate out;
  const double md = static_cast<double>(m);
  for (double theta : theta_grid) {
    if (theta < 0.0) throw Error(ErrorCode::Domain, "theta must be >= 0");
    // Spectra with every |E| >= theta have no level in the open interval.
    const auto below = std::lower_bound(sorted_nearest.begin(), sorted_nearest.end(), theta) - sorted_nearest.begin();
    const double e_hat = theta == 0.0 ? 1.0 : 1.0 - static_cast<double>(below) / md;
    double s = 0.0;
    if (theta > 0.0) {
      if (source == CountSource::Analytic) {
        s = level_count(theta, batch.params).value;
      } else {
        const auto inside = std::lower_bound(abs_all.begin(), abs_all.end(), theta) - abs_all.begin();
        s = static_cast<double>(inside) / md;
      }
    }
    out.theta.push_back(theta);
    out.s.push_back(s);
    out.e_hat.push_back(e_hat);
    out.errors.push_back(std::sqrt(e_hat * (1.0 - e_hat) / md));
  }
  return out;
}

std::vector<double> nn_spacings(const SpectrumBatch& batch, double window) {
  if (!(window > 0.0 && window <= 1.0)) throw Error(ErrorCode::Domain, "window must lie in (0, 1]");
  std::vector<double> out;
  for (const auto& spec : batch.spectra) {
    const std::size_t n = spec.size();
    const auto keep = static_cast<std::size_t>(std::lround(window * static_cast<double>(n)));
    if (keep < 2) continue;
    const std::size_t first = (n - keep) / 2;
    std::vector<double> gaps;
    gaps.reserve(keep - 1);
    for (std::size_t i = first; i + 1 < first + keep; ++i) gaps.push_back(spec[i + 1] - spec[i]);
    double mean = 0.0;
    for (double g : gaps) mean += g;
    mean /= static_cast<double>(gaps.size());
    if (mean <= 0.0) continue;
    for (double g : gaps) out.push_back(g / mean);
  }
  return out;
}

Histogram nn_spacing(const SpectrumBatch& batch, std::span<const double> edges, double window) {
  const std::vector<double> s = nn_spacings(batch, window);
  return make_histogram(s, edges, HistogramMode::ProbabilityDensity);
}

double wigner_surmise_pdf(double s) {
  if (s < 0.0) return 0.0;
  constexpr double pi = std::numbers::pi;
  return 0.5 * pi * s * std::exp(-0.25 * pi * s * s);
}

double wigner_surmise_cdf(double s) {
  if (s <= 0.0) return 0.0;
  return -std::expm1(-0.25 * std::numbers::pi * s * s);
}

std::size_t default_hill_k(std::size_t n) {
  auto k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  k = std::max<std::size_t>(k, 50);
  k = std::min<std::size_t>(k, n / 10);
  return k;
}

TailEstimate tail_index(std::span<const double> values, std::size_t k) {
  const std::size_t n = values.size();
  if (k == 0) k = default_hill_k(n);
  if (k < 1 || k >= n) throw Error(ErrorCode::Domain, "Hill estimator needs 1 <= k < sample size");
  std::vector<double> a(values.size());
  std::transform(values.begin(), values.end(), a.begin(), [](double v) { return std::abs(v); });
  std::nth_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), a.end(), std::greater<>());
  const double threshold = a[k];
  if (!(threshold > 0.0)) throw Error(ErrorCode::Domain, "Hill threshold is zero");
  double h = 0.0;
  for (std::size_t i = 0; i < k; ++i) h += std::log(a[i] / threshold);
  h /= static_cast<double>(k);
  TailEstimate t;
  t.index = 1.0 / h;
  t.error = t.index / std::sqrt(static_cast<double>(k));
  t.k = k;
  return t;
}

double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw Error(ErrorCode::Domain, "empty sample");
  std::vector<double> s(sample.begin(), sample.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::Domain, "empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

LineFit loglog_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::Domain, "x and y differ in length");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  const std::size_t n = lx.size();
  if (n < 2) throw Error(ErrorCode::Domain, "fit needs two positive points");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  LineFit f;
  f.points = n;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (n > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ly[i] - (f.intercept + f.slope * lx[i]);
      rss += r * r;
    }
    f.slope_error = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  }
  return f;
}

}  // namespace qrmt

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qrmt/eigensolver.hpp"
#include "qrmt/params.hpp"

namespace qrmt {

/// Sorted spectra of a batch of matrices drawn with the same parameters.
struct SpectrumBatch {
  std::vector<std::vector<double>> spectra;
  EnsembleParams params;

  [[nodiscard]] std::size_t count() const noexcept { return spectra.size(); }
  /// All eigenvalues pooled in one vector.
  [[nodiscard]] std::vector<double> pooled() const;
};

/// Checks that every spectrum is sorted with n entries and the batch is not empty.
SpectrumBatch make_batch(const EnsembleParams& p, std::vector<std::vector<double>> spectra);

/// Sorted eigenvalues of draw `index` of the run seeded with `seed`.
std::vector<double> sample_spectrum(const EnsembleParams& p, std::uint64_t seed, std::uint64_t index);

/// Draws first_index .. first_index + count - 1 serially.
SpectrumBatch sample_spectra(const EnsembleParams& p, std::uint64_t seed, std::size_t count,
                             std::uint64_t first_index = 0);

enum class HistogramMode { ProbabilityDensity, LevelDensity };

struct Histogram {
  std::vector<double> edges;
  std::vector<double> counts;
  std::vector<double> density;
  /// Standard error of each density value: Poisson for make_histogram,
  /// between-spectrum spread for empirical_density.
  std::vector<double> errors;
  HistogramMode mode = HistogramMode::ProbabilityDensity;
  std::size_t underflow = 0;
  std::size_t overflow = 0;
  std::size_t total = 0;

  [[nodiscard]] std::size_t bins() const noexcept { return counts.size(); }
  [[nodiscard]] double center(std::size_t i) const noexcept { return 0.5 * (edges[i] + edges[i + 1]); }
  [[nodiscard]] double width(std::size_t i) const noexcept { return edges[i + 1] - edges[i]; }
  /// sum density * width.
  [[nodiscard]] double integral() const noexcept;
};

std::vector<double> uniform_edges(double lo, double hi, std::size_t bins);
/// Geometric edges; needs 0 < lo < hi.
std::vector<double> log_edges(double lo, double hi, std::size_t bins);

/// Bins `values`; the density is counts / (norm * width), where norm is
/// values.size() for ProbabilityDensity and `spectra` for LevelDensity.
Histogram make_histogram(std::span<const double> values, std::span<const double> edges, HistogramMode mode,
                         std::size_t spectra = 1);

/// Level-density histogram (integrates to N over the full range).
Histogram empirical_density(const SpectrumBatch& batch, std::span<const double> edges);
/// Uniform bins spanning the pooled eigenvalue range.
Histogram empirical_density(const SpectrumBatch& batch, std::size_t bins);

enum class CountSource { Analytic, Empirical };

struct GapEstimate {
  std::vector<double> theta;
  std::vector<double> s;
  std::vector<double> e_hat;
  std::vector<double> errors;  // binomial standard error of e_hat
};

/// Fraction of spectra with no eigenvalue in (-theta, theta), paired with
/// the mean level count s(theta).  Analytic counts come from level_count;
/// Empirical counts average the observed numbers of levels.
GapEstimate empirical_gap(const SpectrumBatch& batch, std::span<const double> theta_grid,
                          CountSource source = CountSource::Analytic);

inline constexpr double kDefaultSpacingWindow = 0.6;

/// Nearest-neighbour spacings from the central `window` fraction of each
/// spectrum, each spectrum's spacings divided by their own mean.
std::vector<double> nn_spacings(const SpectrumBatch& batch, double window = kDefaultSpacingWindow);

/// Probability-density histogram of nn_spacings.
Histogram nn_spacing(const SpectrumBatch& batch, std::span<const double> edges,
                     double window = kDefaultSpacingWindow);

double wigner_surmise_pdf(double s);
double wigner_surmise_cdf(double s);

struct TailEstimate {
  double index = 0.0;
  double error = 0.0;
  std::size_t k = 0;
};

/// sqrt(n) clamped to [50, n/10] (n/10 wins when the two conflict).
std::size_t default_hill_k(std::size_t n);

/// Hill estimator of the survival exponent of |values| from the k largest
/// order statistics; k = 0 selects default_hill_k.
TailEstimate tail_index(std::span<const double> values, std::size_t k = 0);

/// sup |F_n - F| for the empirical cdf of `sample`.
double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf);

/// sup |F_a - F_b| between two empirical cdfs.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_error = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log y against log x over the points with x, y > 0.
LineFit loglog_fit(std::span<const double> x, std::span<const double> y);

}  // namespace qrmt

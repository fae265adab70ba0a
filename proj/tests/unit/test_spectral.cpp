#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qrmt/analytic.hpp"
#include "qrmt/matrix.hpp"
#include "qrmt/sampler.hpp"
#include "qrmt/spectral.hpp"
#include "test_util.hpp"

using namespace qrmt;

namespace {

double sup_over_center(const Histogram& h, const EnsembleParams& p, double half_width, bool semicircle) {
  double sup = 0.0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    const double c = h.center(i);
    if (std::abs(c) > half_width) continue;
    const double ref = semicircle ? semicircle_density(c, p.n(), p.alpha()) : level_density(c, p);
    sup = std::max(sup, std::abs(h.density[i] - ref));
  }
  return sup;
}

}  // namespace

TEST_CASE("batches are validated") {
  const auto p = EnsembleParams::gaussian(2, 1.0);
  CHECK(error_code([&] { make_batch(p, {}); }) == ErrorCode::Domain);
  CHECK(error_code([&] { make_batch(p, {{2.0, 1.0}}); }) == ErrorCode::Domain);
  CHECK(error_code([&] { make_batch(p, {{1.0}}); }) == ErrorCode::InvalidDimension);
  const auto b = make_batch(p, {{1.0, 2.0}, {-1.0, 0.5}});
  CHECK(b.count() == 2);
  CHECK(b.pooled().size() == 4);
}

TEST_CASE("GOE density histogram follows the semicircle") {
  const auto p = EnsembleParams::gaussian(50, 25.0);
  const auto batch = sample_spectra(p, 41, 1000);
  const double r = std::sqrt(50.0 / 25.0);
  const auto h = empirical_density(batch, uniform_edges(-1.2 * r, 1.2 * r, 48));
  CHECK(h.mode == HistogramMode::LevelDensity);
  CHECK(h.integral() == doctest::Approx(50.0).epsilon(1e-12));
  const double peak = semicircle_density(0.0, 50, 25.0);
  CHECK(sup_over_center(h, p, 0.8 * r, true) < 0.05 * peak);
}

TEST_CASE("identical diagonal matrices give point masses") {
  const auto p = EnsembleParams::gaussian(3, 1.0);
  const std::vector<double> spectrum = {-1.0, 0.25, 2.0};
  const auto batch = make_batch(p, std::vector<std::vector<double>>(100, spectrum));
  const auto h = empirical_density(batch, uniform_edges(-3.0, 3.0, 12));
  int nonzero = 0;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    if (h.counts[i] > 0) {
      ++nonzero;
      CHECK(h.counts[i] == 100.0);
      CHECK(h.errors[i] == 0.0);
    }
  }
  CHECK(nonzero == 3);
}

TEST_CASE("histogram bookkeeping") {
  const std::vector<double> v = {-5.0, 0.1, 0.2, 0.9, 3.0};
  const auto h = make_histogram(v, uniform_edges(0.0, 1.0, 2), HistogramMode::ProbabilityDensity);
  CHECK(h.underflow == 1);
  CHECK(h.overflow == 1);
  CHECK(h.total == 5);
  CHECK(h.counts == std::vector<double>{2.0, 1.0});
  CHECK(h.density[0] == doctest::Approx(2.0 / (5 * 0.5)));
  const auto e = log_edges(1.0, 100.0, 2);
  CHECK(e[1] == doctest::Approx(10.0));
}

TEST_CASE("heavy-tailed histogram slope") {
  const double lambda = 0.5;
  const auto p = EnsembleParams::from_lambda_auto(10, lambda);
  const auto batch = sample_spectra(p, 42, 4000);
  const double ec = *p.e_char();
  const auto edges = log_edges(20.0 * ec, 2000.0 * ec, 12);
  std::vector<double> abs;
  for (double e : batch.pooled()) abs.push_back(std::abs(e));
  const auto h = make_histogram(abs, edges, HistogramMode::LevelDensity, batch.count());
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < h.bins(); ++i) {
    x.push_back(std::sqrt(h.edges[i] * h.edges[i + 1]));
    y.push_back(h.density[i]);
  }
  CHECK(std::abs(loglog_fit(x, y).slope + (2.0 * lambda + 1.0)) < 0.15);
}

TEST_CASE("empirical gap") {
  const auto p = EnsembleParams::from_lambda(20, 1.0, 0.5);
  const auto batch = sample_spectra(p, 43, 10000);
  std::vector<double> grid;
  for (double t = 0.0; t <= level_count_inverse(4.0, p); t += 0.05) grid.push_back(t);
  const GapEstimate g = empirical_gap(batch, grid);
  CHECK(g.e_hat.front() == 1.0);
  CHECK(g.s.front() == 0.0);
  double worst = 0.0;
  int beyond = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double e = gap_probability(grid[i], p).value;
    worst = std::max(worst, std::abs(g.e_hat[i] - e));
    if (std::abs(g.e_hat[i] - e) > 4.0 * g.errors[i]) ++beyond;
  }
  CHECK(worst < 0.03);
  CHECK(beyond == 0);

  const auto emp = empirical_gap(batch, grid, CountSource::Empirical);
  CHECK(emp.e_hat == g.e_hat);
  CHECK(std::abs(emp.s.back() - g.s.back()) < 0.1 * g.s.back());
}

TEST_CASE("empirical gap sits within four standard errors at lambda = 3") {
  const auto p = EnsembleParams::from_lambda(8, 3.0, 1.0);
  const auto batch = sample_spectra(p, 44, 5000);
  const std::vector<double> grid = {0.1, 0.3, 0.6, 1.0};
  const GapEstimate g = empirical_gap(batch, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(g.e_hat[i] - gap_probability(grid[i], p).value) < 4.0 * g.errors[i]);
  }
}

TEST_CASE("GOE gap decays faster than a power law") {
  const auto p = EnsembleParams::gaussian(20, 0.5);
  const auto batch = sample_spectra(p, 45, 10000);
  // mean level density near zero is about sqrt(2n)/pi per unit
  const double rho0 = std::sqrt(40.0) / std::numbers::pi;
  std::vector<double> grid;
  for (double s : {1.0, 2.0, 3.0}) grid.push_back(s / (2.0 * rho0));
  const auto g = empirical_gap(batch, grid, CountSource::Empirical);
  double prev = 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = g.s[i] * g.s[i] * g.e_hat[i];
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("nearest-neighbour spacings") {
  const auto goe = sample_spectra(EnsembleParams::gaussian(50, 0.5), 46, 350);
  const auto s = nn_spacings(goe);
  CHECK(s.size() >= 10000);
  CHECK(ks_distance(s, wigner_surmise_cdf) < 0.03);

  const auto rt = sample_spectra(EnsembleParams::from_q(50, 0.0, 0.5), 47, 350);
  CHECK(ks_distance(nn_spacings(rt), wigner_surmise_cdf) < 0.03);

  const auto p = EnsembleParams::gaussian(10, 1.0);
  std::vector<double> ladder;
  for (int i = 0; i < 10; ++i) ladder.push_back(0.3 * i - 2.0);
  const auto flat = nn_spacings(make_batch(p, {ladder, ladder}), 1.0);
  for (double v : flat) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  const auto h = nn_spacing(make_batch(p, {ladder}), uniform_edges(0.05, 2.05, 20), 1.0);
  CHECK(h.counts[9] == 9.0);

  CHECK(wigner_surmise_cdf(0.0) == 0.0);
  CHECK(wigner_surmise_pdf(1.0) == doctest::Approx(std::numbers::pi / 2.0 * std::exp(-std::numbers::pi / 4.0)));
}

TEST_CASE("Hill estimator") {
  RngStream rng(48, 0);
  std::vector<double> pareto;
  for (int i = 0; i < 100000; ++i) pareto.push_back(1.0 / rng.uniform_open());
  const auto t = tail_index(pareto, 1000);
  CHECK(std::abs(t.index - 1.0) < 0.05);
  CHECK(t.k == 1000);
  CHECK(t.error == doctest::Approx(t.index / std::sqrt(1000.0)));
  CHECK(default_hill_k(100000) == 316);
  CHECK(default_hill_k(1000) == 50);
  CHECK(default_hill_k(100) == 10);

  const double lambda = 0.5;
  const auto p = EnsembleParams::from_lambda(1, lambda, 0.5);
  std::vector<double> entries;
  std::vector<double> sums;
  for (int i = 0; i < 200000; ++i) {
    const double a = sample_ensemble(p, rng).h(0, 0);
    const double b = sample_ensemble(p, rng).h(0, 0);
    entries.push_back(a);
    sums.push_back(a + b);
  }
  CHECK(std::abs(tail_index(entries).index - 2.0 * lambda) < 0.15);
  CHECK(std::abs(tail_index(sums).index - 2.0 * lambda) < 0.15);
}

TEST_CASE("KS statistics") {
  RngStream rng(49, 0);
  std::vector<double> u;
  for (int i = 0; i < 100000; ++i) u.push_back(rng.uniform());
  const auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_distance(u, cdf) < 1.95 / std::sqrt(1e5));
  CHECK(ks_distance(u, [](double x) { return std::clamp(x - 0.5, 0.0, 1.0); }) > 0.1);
  const std::vector<double> constant(100, 0.3);
  CHECK(ks_distance(constant, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }) >= 0.5);
  CHECK(ks_two_sample(u, u) == 0.0);
  CHECK(ks_two_sample(std::vector<double>{0.0, 1.0}, std::vector<double>{2.0, 3.0}) == 1.0);
}

TEST_CASE("density histogram converges with sample count") {
  const auto p = EnsembleParams::from_lambda_auto(10, 2.0);
  const double half = level_count_inverse(4.0, p);
  const auto edges = uniform_edges(-half, half, 16);
  double prev = 1e300;
  for (std::size_t count : {100, 1000, 10000}) {
    const auto h = empirical_density(sample_spectra(p, 50, count), edges);
    const double sup = sup_over_center(h, p, half, false);
    CHECK(sup < prev);
    prev = sup;
  }
}

TEST_CASE("log-log fit") {
  const std::vector<double> x = {1.0, 2.0, 4.0, 8.0, -1.0};
  const std::vector<double> y = {3.0, 0.75, 0.1875, 0.046875, 5.0};
  const auto f = loglog_fit(x, y);
  CHECK(f.slope == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(f.points == 4);
}

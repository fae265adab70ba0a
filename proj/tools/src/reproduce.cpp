#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "batch.hpp"
#include "checks.hpp"
#include "commands.hpp"
#include "manifest.hpp"
#include "output.hpp"
#include "qrmt/analytic.hpp"
#include "qrmt/error.hpp"

namespace fs = std::filesystem;

namespace qrmt::cli {

namespace {

constexpr int kFig1N = 50;
constexpr int kFig2N = 20;
const std::vector<double> kFig1Lambdas = {10.0, 1.0, 0.75, 0.5};

std::string lambda_tag(double lam) { return "lambda_" + format_number(lam); }

double bin_average(const EnsembleParams& p, double a, double b) {
  const auto r = integrate([&p](double e) { return level_density(e, p); }, a, b);
  return r.value / (b - a);
}

std::string report_text(const std::string& title, const std::vector<Check>& checks) {
  std::ostringstream s;
  s << "# " << title << "\n";
  print_tap(s, checks);
  return s.str();
}

int finish(RunManifest& m, const fs::path& dir, const std::string& title, const std::vector<Check>& checks,
           std::ostream& log) {
  write_text(dir / "report.txt", report_text(title, checks));
  record_output(m, dir, "report.txt");
  m.finished = utc_now();
  write_manifest(m, dir);
  print_tap(log, checks);
  return all_pass(checks) ? kOk : kAcceptanceFailure;
}

int reproduce_fig1(const ReproduceOptions& o, std::ostream& log) {
  const fs::path dir(o.out);
  const std::size_t samples = o.samples ? o.samples : 1000;
  const unsigned threads = resolve_threads(o.threads);
  std::vector<EnsembleParams> ps;
  for (double lam : kFig1Lambdas) ps.push_back(EnsembleParams::from_lambda_auto(kFig1N, lam));
  const EnsembleParams& p10 = ps.front();
  const double ref_alpha = (p10.lambda() - 1.0) * p10.alpha() / p10.lambda();

  RunManifest m;
  m.tool_version = QRMT_VERSION;
  m.command = "reproduce fig1";
  m.master_seed = o.seed;
  m.sample_count = samples;
  m.started = utc_now();

  // Analytic curves on a common energy grid.
  CsvTable curves;
  curves.comments = {"qrmt " + std::string(QRMT_VERSION) + " reproduce fig1",
                     "n=50 alpha=N^(2/sigma)/2; reference: semicircle with alpha'=(lambda-1)alpha/lambda at lambda=10"};
  curves.header = {"E"};
  for (double lam : kFig1Lambdas) curves.header.push_back(lambda_tag(lam));
  curves.header.push_back("semicircle_lambda_10");
  PlotSpec plot{"Level density, N=50", "E", "rho(E)", false, false, {}};
  const int points = 601;
  for (int i = 0; i < points; ++i) {
    const double e = -3.0 + 6.0 * i / (points - 1);
    std::vector<double> row{e};
    for (const auto& p : ps) row.push_back(level_density(e, p));
    row.push_back(semicircle_density(e, kFig1N, ref_alpha));
    curves.rows.push_back(std::move(row));
  }
  for (std::size_t k = 1; k < curves.header.size(); ++k) {
    PlotSeries s{curves.header[k], {}, {}, k + 1 == curves.header.size()};
    for (const auto& row : curves.rows) {
      s.x.push_back(row[0]);
      s.y.push_back(row[k]);
    }
    plot.series.push_back(std::move(s));
  }
  write_text(dir / "fig1_density.csv", render_csv(curves));
  record_output(m, dir, "fig1_density.csv");
  write_text(dir / "fig1.svg", render_svg(plot));
  record_output(m, dir, "fig1.svg");

  std::vector<Check> checks;
  checks.push_back({"fig1 has 4 density curves and 1 reference curve",
                    std::abs(static_cast<double>(curves.header.size()) - 6.0), 0.5});

  // Sup distance at lambda = 10 to the reference semicircle, relative to its peak.
  {
    const double r = std::sqrt(kFig1N / ref_alpha);
    double peak = 0.0;
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double e = -1.5 * r + 3.0 * r * i / 2000.0;
      const double ref = semicircle_density(e, kFig1N, ref_alpha);
      peak = std::max(peak, ref);
      worst = std::max(worst, std::abs(level_density(e, p10) - ref));
    }
    checks.push_back({"lambda=10 sup distance to reference semicircle / peak", worst / peak, 0.05});
  }

  // Tail slope at lambda = 0.5.
  {
    const EnsembleParams& p = ps.back();
    const double ec = *p.e_char();
    std::vector<double> x;
    std::vector<double> y;
    for (int i = 0; i < 60; ++i) {
      const double e = 3.0 * ec * std::pow(10.0, static_cast<double>(i) / 59.0);
      x.push_back(e);
      y.push_back(level_density(e, p));
    }
    const LineFit fit = loglog_fit(x, y);
    checks.push_back({"lambda=0.5 |tail slope + 2| on [3 E_c, 30 E_c]", std::abs(fit.slope + 2.0), 0.1});
  }

  // Monte Carlo overlay on the central 80% of the level mass.
  CsvTable mc;
  mc.comments = {"qrmt " + std::string(QRMT_VERSION) + " reproduce fig1 monte carlo",
                 "seed=" + std::to_string(o.seed) + " samples=" + std::to_string(samples)};
  mc.header = {"lambda", "center", "density", "error", "analytic"};
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const EnsembleParams& p = ps[k];
    const double e80 = level_count_inverse(0.8 * kFig1N, p);
    const auto edges = uniform_edges(-e80, e80, 40);
    const SpectrumBatch batch = sample_batch(p, o.seed + k, samples, threads);
    const Histogram h = empirical_density(batch, edges);
    double worst = 0.0;
    for (std::size_t i = 0; i < h.bins(); ++i) {
      const double expect = bin_average(p, edges[i], edges[i + 1]);
      mc.rows.push_back({p.lambda(), h.center(i), h.density[i], h.errors[i], expect});
      worst = std::max(worst, std::abs(h.density[i] - expect) / h.errors[i]);
    }
    checks.push_back({"lambda=" + format_number(p.lambda()) + " monte carlo max |deviation| / stderr", worst, 4.0});
  }
  write_text(dir / "fig1_mc.csv", render_csv(mc));
  record_output(m, dir, "fig1_mc.csv");
  return finish(m, dir, "fig1", checks, log);
}

int reproduce_fig2(const ReproduceOptions& o, std::ostream& log) {
  const fs::path dir(o.out);
  const std::size_t samples = o.samples ? o.samples : 10000;
  const unsigned threads = resolve_threads(o.threads);
  const EnsembleParams p = EnsembleParams::from_lambda_auto(kFig2N, 1.0);

  RunManifest m;
  m.tool_version = QRMT_VERSION;
  m.command = "reproduce fig2";
  m.params = p;
  m.master_seed = o.seed;
  m.sample_count = samples;
  m.started = utc_now();

  std::vector<double> s_grid;
  std::vector<double> theta;
  for (int i = 0; i <= 100; ++i) {
    const double s = 0.1 * i;
    s_grid.push_back(s);
    theta.push_back(level_count_inverse(s, p));
  }
  const SpectrumBatch batch = sample_batch(p, o.seed, samples, threads);
  const GapEstimate est = empirical_gap(batch, theta);

  CsvTable t;
  t.comments = {"qrmt " + std::string(QRMT_VERSION) + " reproduce fig2", params_summary(p),
                "seed=" + std::to_string(o.seed) + " samples=" + std::to_string(samples)};
  t.header = {"theta", "s", "E", "asymptote", "E_goe", "E_mc", "E_mc_err"};
  std::vector<double> e_values;
  double worst_mc = 0.0;
  double worst_plateau = 0.0;
  int asymptote_mismatch = 0;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    const double s = s_grid[i];
    const double e = gap_probability(theta[i], p).value;
    const double asym = gap_power_law(s);
    e_values.push_back(e);
    t.rows.push_back({theta[i], s, e, asym, goe_gap_surmise(s), est.e_hat[i], est.errors[i]});
    if (s <= 4.0 + 1e-12) worst_mc = std::max(worst_mc, std::abs(est.e_hat[i] - e));
    if (s >= 5.0 - 1e-12) worst_plateau = std::max(worst_plateau, std::abs(s * s * e - 0.5));
    if (asym != 0.5 / (s * s)) ++asymptote_mismatch;
  }
  write_text(dir / "fig2_gap.csv", render_csv(t));
  record_output(m, dir, "fig2_gap.csv");

  PlotSpec plot{"Gap probability, lambda=1, N=20", "s", "E(s)", false, true, {}};
  std::vector<double> asym_s(s_grid.begin() + 10, s_grid.end());
  std::vector<double> asym_v;
  for (double s : asym_s) asym_v.push_back(gap_power_law(s));
  std::vector<double> goe;
  for (double s : s_grid) goe.push_back(goe_gap_surmise(s));
  plot.series.push_back({"theory", s_grid, e_values});
  plot.series.push_back({"1/(2s^2)", asym_s, asym_v, true});
  plot.series.push_back({"GOE", s_grid, goe, true});
  plot.series.push_back({"simulation", s_grid, est.e_hat, false, true});
  write_text(dir / "fig2.svg", render_svg(plot));
  record_output(m, dir, "fig2.svg");

  const std::vector<Check> checks = {
      {"max |E_mc - E| on s in [0, 4]", worst_mc, 0.03},
      {"asymptote column equals 1/(2 s^2) (mismatches)", static_cast<double>(asymptote_mismatch), 0.5},
      {"max |s^2 E(s) - 1/2| on s in [5, 10]", worst_plateau, 0.05},
  };
  return finish(m, dir, "fig2", checks, log);
}

}  // namespace

int cmd_reproduce(const ReproduceOptions& o, std::ostream& log) {
  if (o.figure == "fig1") return reproduce_fig1(o, log);
  if (o.figure == "fig2") return reproduce_fig2(o, log);
  throw Error(ErrorCode::Domain, "figure must be fig1 or fig2");
}

}  // namespace qrmt::cli

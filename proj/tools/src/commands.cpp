#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>

#include "batch.hpp"
#include "manifest.hpp"
#include "output.hpp"
#include "qrmt/analytic.hpp"
#include "qrmt/error.hpp"

namespace fs = std::filesystem;

namespace qrmt::cli {

namespace {

std::vector<double> linspace(double a, double b, int points) {
  if (points < 2) throw Error(ErrorCode::Domain, "--points must be >= 2");
  if (!(b > a)) throw Error(ErrorCode::Domain, "--to must exceed --from");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    // Built from both ends so grids symmetric about 0 stay exactly symmetric.
    const int j = points - 1 - i;
    g[static_cast<std::size_t>(i)] = i <= j ? a + (b - a) * i / (points - 1) : b - (b - a) * j / (points - 1);
  }
  return g;
}

RunManifest start_manifest(const std::string& command, const EnsembleParams& p) {
  RunManifest m;
  m.tool_version = QRMT_VERSION;
  m.command = command;
  m.params = p;
  m.started = utc_now();
  return m;
}

}  // namespace

int cmd_sample(const SampleOptions& o, std::ostream& log) {
  const EnsembleParams p = resolve_params(o.params);
  if (o.count == 0) throw Error(ErrorCode::Domain, "--count must be >= 1");
  const unsigned threads = resolve_threads(o.threads);
  RunManifest m = start_manifest("sample", p);
  m.master_seed = o.seed;
  m.sample_count = o.count;

  CsvTable t;
  t.comments = {"qrmt " + std::string(QRMT_VERSION) + " sample", params_summary(p),
                "seed=" + std::to_string(o.seed) + " count=" + std::to_string(o.count)};
  const int n = p.n();
  std::string file;
  if (o.raw) {
    file = "matrices.csv";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.header.push_back("h" + std::to_string(i) + "_" + std::to_string(j));
    for (const auto& h : sample_matrices(p, o.seed, o.count, threads)) {
      t.rows.emplace_back(h.row_major().begin(), h.row_major().end());
    }
  } else {
    file = "spectra.csv";
    for (int i = 0; i < n; ++i) t.header.push_back("e" + std::to_string(i + 1));
    SpectrumBatch b = sample_batch(p, o.seed, o.count, threads);
    t.rows = std::move(b.spectra);
  }
  const fs::path dir(o.out);
  write_text(dir / file, render_csv(t));
  record_output(m, dir, file);
  m.finished = utc_now();
  const auto mpath = write_manifest(m, dir);
  log << "wrote " << (dir / file).string() << " and " << mpath.string() << "\n";
  return kOk;
}

int cmd_curve(CurveCommand which, const CurveOptions& o, std::ostream& log) {
  const EnsembleParams p = resolve_params(o.params);
  if (o.format != "csv" && o.format != "json") throw Error(ErrorCode::Domain, "--format must be csv or json");
  AnalyticCurve curve{CurveKind::LevelDensity, p, {}, {}, {}, 0.0};
  std::string command;
  std::string x_label;
  std::string y_label;
  switch (which) {
    case CurveCommand::Density: {
      command = "density";
      const double r = std::sqrt(p.n() / p.alpha());
      const auto grid = linspace(o.from.value_or(-2.0 * r), o.to.value_or(2.0 * r), o.points);
      curve = level_density_curve(p, grid);
      x_label = "E";
      y_label = "rho(E)";
      break;
    }
    case CurveCommand::Element: {
      command = "element";
      if (o.kind != "diag" && o.kind != "off") throw Error(ErrorCode::Domain, "--kind must be diag or off");
      const double w = 6.0 / std::sqrt(p.alpha());
      const auto grid = linspace(o.from.value_or(-w), o.to.value_or(w), o.points);
      curve = element_curve(p, grid, o.kind == "diag" ? ElementKind::Diagonal : ElementKind::OffDiagonal);
      x_label = "h";
      y_label = "p(h)";
      break;
    }
    case CurveCommand::Gap: {
      command = "gap";
      const double top = o.to.value_or(level_count_inverse(std::min(10.0, 0.5 * p.n()), p));
      const auto grid = linspace(o.from.value_or(0.0), top, o.points);
      if (grid.front() < 0.0) throw Error(ErrorCode::Domain, "gap grid needs theta >= 0");
      curve = gap_curve(p, grid);
      x_label = "s";
      y_label = "E(s)";
      break;
    }
  }

  RunManifest m = start_manifest(command, p);
  const fs::path dir(o.out);
  std::string file;
  if (o.format == "csv") {
    file = "curve.csv";
    CsvTable t;
    t.comments = {"qrmt " + std::string(QRMT_VERSION) + " " + command, params_summary(p),
                  "kind=" + std::string(to_string(curve.kind))};
    t.header = {"x", "y", "err"};
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      t.rows.push_back({curve.abscissae[i], curve.values[i], curve.errors[i]});
    }
    write_text(dir / file, render_csv(t));
  } else {
    file = "curve.json";
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(curve.kind));
    j["params"] = params_json(p);
    j["columns"] = {"x", "y", "err"};
    j["x"] = curve.abscissae;
    j["y"] = curve.values;
    j["err"] = curve.errors;
    write_text(dir / file, j.dump(2) + "\n");
  }
  record_output(m, dir, file);
  if (o.svg) {
    PlotSpec plot{command + ": " + params_summary(p), x_label, y_label, false, false,
                  {{std::string(to_string(curve.kind)), curve.abscissae, curve.values}}};
    write_text(dir / "plot.svg", render_svg(plot));
    record_output(m, dir, "plot.svg");
  }
  m.finished = utc_now();
  const auto mpath = write_manifest(m, dir);
  log << "wrote " << (dir / file).string() << " and " << mpath.string() << "\n";
  return kOk;
}

}  // namespace qrmt::cli

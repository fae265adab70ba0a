#include "app.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qrmt/error.hpp"

namespace qrmt::cli {

namespace {

void add_curve_options(CLI::App& sub, CurveOptions& o, bool element) {
  add_param_options(sub, o.params);
  sub.add_option("--from", o.from, "First grid point");
  sub.add_option("--to", o.to, "Last grid point");
  sub.add_option("--points", o.points, "Grid size")->capture_default_str();
  if (element) sub.add_option("--kind", o.kind, "diag or off")->capture_default_str();
  sub.add_option("--out", o.out, "Output directory")->capture_default_str();
  sub.add_option("--format", o.format, "csv or json")->capture_default_str();
  sub.add_flag("--svg", o.svg, "Also write plot.svg");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random matrix ensembles from nonextensive entropy"};
  app.set_version_flag("--version", std::string(QRMT_VERSION));
  app.require_subcommand(1);

  SampleOptions sample;
  auto* s = app.add_subcommand("sample", "Draw matrices and write their spectra");
  add_param_options(*s, sample.params);
  s->add_option("--count", sample.count, "Number of matrices")->capture_default_str();
  s->add_option("--seed", sample.seed, "Master seed")->capture_default_str();
  s->add_option("--out", sample.out, "Output directory")->capture_default_str();
  s->add_flag("--raw", sample.raw, "Write full matrices instead of spectra");
  s->add_option("--threads", sample.threads, "Worker threads (default: QRMT_THREADS or all cores)");

  CurveOptions density;
  CurveOptions element;
  CurveOptions gap;
  auto* d = app.add_subcommand("density", "Mean level density curve");
  add_curve_options(*d, density, false);
  auto* e = app.add_subcommand("element", "Single matrix element density curve");
  add_curve_options(*e, element, true);
  auto* g = app.add_subcommand("gap", "Gap probability E(s); the grid runs over theta");
  add_curve_options(*g, gap, false);

  ReproduceOptions repro;
  auto* r = app.add_subcommand("reproduce", "Regenerate a figure with its acceptance report");
  r->add_option("figure", repro.figure, "fig1 or fig2")->required()->check(CLI::IsMember({"fig1", "fig2"}));
  r->add_option("--out", repro.out, "Output directory")->capture_default_str();
  r->add_option("--seed", repro.seed, "Master seed")->capture_default_str();
  r->add_option("--samples", repro.samples, "Monte Carlo sample count (default: per figure)");
  r->add_option("--threads", repro.threads, "Worker threads");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run the built-in check suites");
  v->add_option("--suite", verify.suite, "specfun, samplers, analytic, spectral, all or none")->capture_default_str();
  v->add_option("--seed", verify.seed, "Seed for the stochastic checks")->capture_default_str();
  v->add_option("--tolerance-scale", verify.tolerance_scale, "Multiplies every tolerance")->capture_default_str();
  v->add_option("--manifest", verify.manifest, "Re-hash the outputs listed in this manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << QRMT_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kParamError;
  }

  try {
    if (*s) return cmd_sample(sample, out);
    if (*d) return cmd_curve(CurveCommand::Density, density, out);
    if (*e) return cmd_curve(CurveCommand::Element, element, out);
    if (*g) return cmd_curve(CurveCommand::Gap, gap, out);
    if (*r) return cmd_reproduce(repro, out);
    if (*v) return cmd_verify(verify, out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return ex.code() == ErrorCode::Io ? kIoError : kParamError;
  } catch (const std::filesystem::filesystem_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kIoError;
  }
  return kParamError;
}

}  // namespace qrmt::cli

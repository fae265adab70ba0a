#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cli_params.hpp"

namespace qrmt::cli {

enum ExitCode : int { kOk = 0, kParamError = 2, kIoError = 3, kAcceptanceFailure = 4 };

struct SampleOptions {
  ParamArgs params;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  std::string out = ".";
  bool raw = false;
  int threads = 0;
};

/// Writes spectra.csv (or matrices.csv with raw) and manifest.json.
int cmd_sample(const SampleOptions& o, std::ostream& log);

enum class CurveCommand { Density, Element, Gap };

struct CurveOptions {
  ParamArgs params;
  std::optional<double> from;
  std::optional<double> to;
  int points = 201;
  std::string kind = "diag";  // element: diag | off
  std::string out = ".";
  std::string format = "csv";
  bool svg = false;
};

/// Writes curve.csv or curve.json, optional plot.svg, and manifest.json.
/// The gap grid runs over theta; the x column holds s(theta).
int cmd_curve(CurveCommand which, const CurveOptions& o, std::ostream& log);

struct ReproduceOptions {
  std::string figure;
  std::string out = ".";
  std::uint64_t seed = 7;
  std::size_t samples = 0;  // 0: figure default
  int threads = 0;
};

int cmd_reproduce(const ReproduceOptions& o, std::ostream& log);

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 7;
  double tolerance_scale = 1.0;
  std::string manifest;
};

/// TAP-style report; kAcceptanceFailure if any check fails.
int cmd_verify(const VerifyOptions& o, std::ostream& out);

}  // namespace qrmt::cli

#pragma once

#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrmt/params.hpp"

namespace qrmt::cli {

struct ParamArgs {
  int n = 0;
  std::optional<double> q;
  std::optional<double> lambda;
  std::string alpha = "auto";
};

void add_param_options(CLI::App& app, ParamArgs& args);

/// --alpha auto picks N^(2/sigma)/2 on the Levy branch and N/2 (sigma = 2)
/// for the Gaussian and restricted-trace regimes.
EnsembleParams resolve_params(const ParamArgs& args);

nlohmann::ordered_json params_json(const EnsembleParams& p);

/// One-line summary for CSV metadata.
std::string params_summary(const EnsembleParams& p);

}  // namespace qrmt::cli

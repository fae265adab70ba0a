#include "cli_params.hpp"

#include <cmath>
#include <limits>

#include "output.hpp"
#include "qrmt/error.hpp"

namespace qrmt::cli {

void add_param_options(CLI::App& app, ParamArgs& args) {
  app.add_option("--n", args.n, "Matrix dimension")->required();
  auto* q = app.add_option("--q", args.q, "Entropic index q (use -inf for the bounded-trace limit)");
  auto* lam = app.add_option("--lambda", args.lambda, "lambda = 1/(q-1) - f/2 (Levy branch, lambda > 0)");
  q->excludes(lam);
  app.add_option("--alpha", args.alpha, "Scale alpha, or 'auto' for N^(2/sigma)/2")->capture_default_str();
}

EnsembleParams resolve_params(const ParamArgs& args) {
  if (!args.q && !args.lambda) throw Error(ErrorCode::Domain, "one of --q or --lambda is required");
  const bool automatic = args.alpha == "auto";
  double alpha = 0.0;
  if (!automatic) {
    std::size_t used = 0;
    try {
      alpha = std::stod(args.alpha, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != args.alpha.size()) throw Error(ErrorCode::Domain, "--alpha must be a number or 'auto'");
  }
  if (args.lambda) {
    if (automatic) return EnsembleParams::from_lambda_auto(args.n, *args.lambda);
    return EnsembleParams::from_lambda(args.n, *args.lambda, alpha);
  }
  if (!automatic) return EnsembleParams::from_q(args.n, *args.q, alpha);
  const EnsembleParams probe = EnsembleParams::from_q(args.n, *args.q, 1.0);
  if (probe.regime() == Regime::LevyBranch) return EnsembleParams::from_lambda_auto(args.n, probe.lambda());
  return EnsembleParams::from_q(args.n, *args.q, alpha_scaling(args.n, 2.0));
}

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

nlohmann::ordered_json params_json(const EnsembleParams& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n();
  j["f"] = p.f();
  j["q"] = number(p.q());
  j["lambda"] = number(p.lambda());
  j["alpha"] = p.alpha();
  j["mu"] = number(p.mu());
  j["regime"] = std::string(to_string(p.regime()));
  j["q_max"] = q_max(p.f());
  j["sigma"] = p.sigma();
  j["big_lambda"] = p.big_lambda() ? nlohmann::ordered_json(*p.big_lambda()) : nlohmann::ordered_json(nullptr);
  j["e_char"] = p.e_char() ? nlohmann::ordered_json(*p.e_char()) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string params_summary(const EnsembleParams& p) {
  return "n=" + std::to_string(p.n()) + " q=" + format_number(p.q()) + " lambda=" + format_number(p.lambda()) +
         " alpha=" + format_number(p.alpha()) + " regime=" + std::string(to_string(p.regime()));
}

}  // namespace qrmt::cli

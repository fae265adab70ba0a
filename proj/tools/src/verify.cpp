#include <cmath>
#include <numbers>
#include <ostream>

#include "checks.hpp"
#include "commands.hpp"
#include "manifest.hpp"
#include "output.hpp"
#include "qrmt/analytic.hpp"
#include "qrmt/eigensolver.hpp"
#include "qrmt/error.hpp"
#include "qrmt/sampler.hpp"
#include "qrmt/specfun.hpp"
#include "qrmt/spectral.hpp"

namespace qrmt::cli {

void print_tap(std::ostream& out, const std::vector<Check>& checks) {
  out << "1.." << checks.size() << "\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    out << (c.pass() ? "ok " : "not ok ") << i + 1 << " - " << c.name << " (value=" << format_number(c.value)
        << ", tol=" << format_number(c.tolerance) << ")\n";
  }
}

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<Check> specfun_suite() {
  return {
      {"K_{1/2}(1)", std::abs(bessel_k(0.5, 1.0) - 0.46106850444789455844), 1e-9},
      {"K_1(1)", std::abs(bessel_k(1.0, 1.0) - 0.60190723019723457474), 1e-9},
      {"K_{1/2}(z) closed form at z=7.5",
       rel(bessel_k(0.5, 7.5), std::sqrt(kPi / 15.0) * std::exp(-7.5)), 1e-12},
      {"M(1,2,-1)", std::abs(kummer_m(1.0, 2.0, -1.0) - 0.63212055882855767840), 1e-9},
      {"M(1.5,3,-40) series vs asymptotic",
       rel(kummer_m_series(1.5, 3.0, -40.0), kummer_m_asymptotic(1.5, 3.0, -40.0)), 1e-9},
      {"M(1.5,3,-40)", rel(kummer_m(1.5, 3.0, -40.0), 0.0087506222183288665356), 1e-9},
      {"M(10.5,12,-2.5)", rel(kummer_m(10.5, 12.0, -2.5), 0.11547743803305803627), 1e-9},
      {"erf(1)", std::abs(erf(1.0) - 0.84270079294971486934), 1e-9},
      {"ln Gamma(1/2)", std::abs(ln_gamma(0.5) - 0.5 * std::log(kPi)), 1e-12},
      {"levy_density(0.7; 1.5, 1)", std::abs(levy_density(0.7, 1.5, 1.0) - 0.24078419849668683105), 1e-9},
      {"levy_density(2; 0.8, 1.3)", std::abs(levy_density(2.0, 0.8, 1.3) - 0.061691899849092736046), 1e-9},
      {"levy_density(0.7; 1, 2) Cauchy", std::abs(levy_density(0.7, 1.0, 2.0) - 2.0 / (kPi * (4.0 + 0.49))), 1e-12},
  };
}

std::vector<Check> samplers_suite(std::uint64_t seed) {
  std::vector<Check> out;
  {
    const EnsembleParams p = EnsembleParams::gaussian(10, 0.5);
    const int m = 20000;
    double s2 = 0.0;
    for (int i = 0; i < m; ++i) {
      const double h = sample_ensemble(p, seed, static_cast<std::uint64_t>(i)).h(0, 0);
      s2 += h * h;
    }
    const double var = s2 / m;
    out.push_back({"GOE diagonal variance z-score", std::abs(var - 1.0) / std::sqrt(2.0 / m), 4.0});
  }
  {
    const EnsembleParams p = EnsembleParams::from_q(3, 0.0, 1.0);
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
      if (sample_ensemble(p, seed + 1, static_cast<std::uint64_t>(i)).h.trace_sq() >= p.trace_bound()) ++violations;
    }
    out.push_back({"q=0 N=3 trace bound violations", static_cast<double>(violations), 0.5});
  }
  {
    const EnsembleParams p = EnsembleParams::bounded_trace(3, 1.0);
    std::vector<double> u;
    for (int i = 0; i < 10000; ++i) {
      u.push_back(sample_ensemble(p, seed + 2, static_cast<std::uint64_t>(i)).h.trace_sq() / p.trace_bound());
    }
    const double half_f = 0.5 * static_cast<double>(p.f());
    const double d = ks_distance(u, [half_f](double x) { return x <= 0 ? 0.0 : x >= 1 ? 1.0 : std::pow(x, half_f); });
    out.push_back({"bounded trace radial KS vs u^(f/2)", d, 1.95 / std::sqrt(10000.0)});
  }
  {
    const EnsembleParams p = EnsembleParams::from_lambda(10, 0.5, 0.5);
    std::vector<double> mix;
    std::vector<double> direct;
    RngStream rng(seed + 3, 0);
    for (int i = 0; i < 20000; ++i) {
      mix.push_back(sample_ensemble(p, seed + 4, static_cast<std::uint64_t>(i)).h(0, 0));
      direct.push_back(sample_student_t(1.0, 1.0, rng));
    }
    out.push_back({"gamma mixture vs Student-t two-sample KS", ks_two_sample(mix, direct), 1.95 * std::sqrt(2.0 / 20000)});
  }
  {
    const EnsembleParams p = EnsembleParams::from_lambda(6, 0.75, 2.0);
    const auto a = sample_ensemble(p, seed, 123).h;
    const auto b = sample_ensemble(p, seed, 123).h;
    double mismatches = 0;
    for (std::size_t i = 0; i < a.row_major().size(); ++i) mismatches += a.row_major()[i] != b.row_major()[i];
    out.push_back({"per-index stream determinism (mismatches)", mismatches, 0.5});
  }
  return out;
}

std::vector<Check> analytic_suite() {
  std::vector<Check> out;
  QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-11;
  {
    const EnsembleParams p = EnsembleParams::from_lambda(10, 0.5, 0.5);
    const auto f = [&p](double x) { return element_pdf(x, p); };
    const double total = integrate_to_infinity(f, 0.0, o).value * 2.0;
    out.push_back({"element pdf integrates to 1 (lambda=0.5)", std::abs(total - 1.0), 1e-8});
    double worst = 0.0;
    for (double x = -10.0; x <= 10.0; x += 0.5) worst = std::max(worst, std::abs(f(x) - 1.0 / (kPi * (1.0 + x * x))));
    out.push_back({"element pdf equals Cauchy at lambda=0.5, alpha=0.5", worst, 1e-8});
  }
  {
    const EnsembleParams p = EnsembleParams::from_q(4, 0.0, 2.0);
    const double r = std::sqrt(-p.lambda() / p.alpha());
    const double total = 2.0 * integrate([&p](double x) { return element_pdf(x, p); }, 0.0, r, o).value;
    out.push_back({"element pdf integrates to 1 (q=0)", std::abs(total - 1.0), 1e-8});
  }
  {
    const EnsembleParams p = EnsembleParams::from_lambda_auto(50, 0.75);
    const double total = 2.0 * integrate_to_infinity([&p](double e) { return level_density(e, p); }, 0.0, o).value;
    out.push_back({"level density integrates to N", std::abs(total - 50.0), 1e-6});
    double worst = 0.0;
    const double ec = *p.e_char();
    for (int i = 0; i <= 100; ++i) {
      const double e = -5.0 * ec + 0.1 * ec * i;
      worst = std::max(worst, rel(level_density_integral(e, p).value, level_density(e, p)));
    }
    out.push_back({"xi integral equals hypergeometric form (101 points, relative)", worst, 1e-8});
  }
  {
    const EnsembleParams p = EnsembleParams::from_lambda(50, 0.5, 2.0);
    double worst = 0.0;
    for (double k : {0.1, 1.0, 5.0}) worst = std::max(worst, std::abs(element_char_fn(k, p) - std::exp(-k * 0.5)));
    out.push_back({"char fn at lambda=1/2 equals exp(-|k| sqrt(lambda/alpha))", worst, 1e-6});
  }
  {
    const EnsembleParams p = EnsembleParams::from_lambda_auto(20, 1.0);
    double worst = 0.0;
    for (double th : {0.05, 0.3, 1.0, 4.0}) {
      worst = std::max(worst, std::abs(gap_probability(th, p).value - gap_probability_rescaled(th, p).value));
    }
    out.push_back({"gap probability: xi form equals rescaled form", worst, 1e-9});
  }
  {
    const EnsembleParams p = EnsembleParams::from_lambda(2, 1.5, 0.7);
    const auto inner = [&p, &o](double x) {
      const auto f = [&](double y) {
        const double a[2] = {x, y};
        const double b[2] = {x, -y};
        return joint_eigen_density(a, p) + joint_eigen_density(b, p);
      };
      return integrate_to_infinity(f, 0.0, o).value;
    };
    const double total = integrate_to_infinity(inner, 0.0, o).value +
                         integrate_to_infinity([&](double x) { return inner(-x); }, 0.0, o).value;
    out.push_back({"N=2 joint eigenvalue density integrates to 1", std::abs(total - 1.0), 1e-6});
  }
  return out;
}

std::vector<Check> spectral_suite(std::uint64_t seed) {
  std::vector<Check> out;
  {
    const double v[4] = {0, 1, 1, 0};
    const auto e = eigenvalues(SymmetricMatrix::from_row_major(2, v));
    out.push_back({"eigenvalues of [[0,1],[1,0]]", std::abs(e[0] + 1.0) + std::abs(e[1] - 1.0), 1e-14});
  }
  {
    RngStream rng(seed, 11);
    const SymmetricMatrix h = goe_matrix(20, 0.5, rng);
    const auto e = eigenvalues(h);
    double s = 0.0;
    double s2 = 0.0;
    for (double x : e) {
      s += x;
      s2 += x * x;
    }
    out.push_back({"sum of eigenvalues equals trace", std::abs(s - h.trace()), 1e-10});
    out.push_back({"sum of squared eigenvalues equals tr H^2", std::abs(s2 - h.trace_sq()) / h.trace_sq(), 1e-10});
    const auto o = random_orthogonal(20, rng);
    const auto e2 = eigenvalues(conjugate(h, o));
    double worst = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) worst = std::max(worst, std::abs(e[i] - e2[i]));
    out.push_back({"spectrum invariant under orthogonal conjugation", worst, 1e-10});
  }
  {
    RngStream rng(seed, 12);
    std::vector<double> x(100000);
    for (double& v : x) v = 1.0 / rng.uniform_open();
    out.push_back({"Hill estimator on Pareto(1), k=1000", std::abs(tail_index(x, 1000).index - 1.0), 0.05});
    std::vector<double> u(10000);
    for (double& v : u) v = rng.uniform();
    const double d = ks_distance(u, [](double t) { return std::clamp(t, 0.0, 1.0); });
    out.push_back({"KS of uniform sample against its own cdf", d, 1.95 / std::sqrt(10000.0)});
  }
  {
    const EnsembleParams p = EnsembleParams::gaussian(50, 25.0);
    const SpectrumBatch b = sample_spectra(p, seed + 13, 345);
    const auto s = nn_spacings(b);
    out.push_back({"GOE N=50 spacing KS vs Wigner surmise", ks_distance(s, wigner_surmise_cdf), 0.03});
  }
  return out;
}

}  // namespace

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const std::string& s = o.suite;
  if (s != "specfun" && s != "samplers" && s != "analytic" && s != "spectral" && s != "all" && s != "none") {
    throw Error(ErrorCode::Domain, "suite must be specfun, samplers, analytic, spectral, all or none");
  }
  std::vector<Check> checks;
  auto add = [&checks](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  if (s == "specfun" || s == "all") add(specfun_suite());
  if (s == "samplers" || s == "all") add(samplers_suite(o.seed));
  if (s == "analytic" || s == "all") add(analytic_suite());
  if (s == "spectral" || s == "all") add(spectral_suite(o.seed));
  if (!o.manifest.empty()) {
    for (const auto& d : check_manifest(o.manifest)) {
      checks.push_back({"digest " + d.path, d.present && d.matches ? 0.0 : 1.0, 0.5});
    }
  }
  for (auto& c : checks) c.tolerance *= o.tolerance_scale;
  print_tap(out, checks);
  return all_pass(checks) ? kOk : kAcceptanceFailure;
}

}  // namespace qrmt::cli

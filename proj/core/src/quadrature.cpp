#include "qrmt/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace qrmt {

namespace {

// Kronrod abscissae and weights for the 7/15 pair (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b, int& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[static_cast<std::size_t>(j)];
    const double s = f(center - dx) + f(center + dx);
    kronrod += kWgk[static_cast<std::size_t>(j)] * s;
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * s;
  }
  evals += 15;
  const double value = kronrod * half;
  const double err = std::abs((kronrod - gauss) * half);
  return {a, b, value, err};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  QuadratureResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Segment> heap;
  heap.push(gk15(f, a, b, res.evaluations));
  double total = heap.top().value;
  double err = heap.top().error;
  int intervals = 1;
  while (err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) && intervals < opts.max_intervals) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) break;  // no room left
    heap.pop();
    const Segment left = gk15(f, worst.a, mid, res.evaluations);
    const Segment right = gk15(f, mid, worst.b, res.evaluations);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum to shed accumulated rounding from the incremental updates.
  double sum = 0.0;
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.abs_error_estimate = esum;
  res.converged = esum <= std::max(opts.abs_tol, opts.rel_tol * std::abs(sum));
  return res;
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, const QuadratureOptions& opts) {
  const Integrand g = [&f, a](double t) {
    if (t >= 1.0) return 0.0;
    const double s = 1.0 - t;
    const double v = f(a + t / s);
    return v == 0.0 ? 0.0 : v / (s * s);
  };
  return integrate(g, 0.0, 1.0, opts);
}

QuadratureResult integrate_gamma_weight(const Integrand& g, double shape, double upper,
                                        const QuadratureOptions& opts) {
  if (shape >= 1.0) {
    const Integrand h = [&g, shape](double xi) {
      if (xi <= 0.0) return shape == 1.0 ? g(0.0) : 0.0;
      return std::exp(-xi + (shape - 1.0) * std::log(xi)) * g(xi);
    };
    return integrate(h, 0.0, upper, opts);
  }
  // xi^(shape-1) dxi = dw / shape with w = xi^shape.
  const Integrand h = [&g, shape](double w) {
    const double xi = std::pow(w, 1.0 / shape);
    return std::exp(-xi) * g(xi) / shape;
  };
  return integrate(h, 0.0, std::pow(upper, shape), opts);
}

}  // namespace qrmt

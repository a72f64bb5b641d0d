#include "robinlab/quadrature.hpp"

#include "robinlab/common.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <sstream>

namespace robin::quad {

namespace {

struct Panel {
  double a, b, value, error, l1;
  unsigned depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b, unsigned depth) {
  Panel p{a, b, 0.0, 0.0, 0.0, depth};
  // Depth 0: a single Kronrod panel. Boost reports |K15 - G7| on the
  // reference interval [-1, 1], so it is rescaled to [a, b].
  p.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  p.error *= 0.5 * std::abs(b - a);
  return p;
}

} // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opts) {
  if (a == b) return {};
  std::priority_queue<Panel> panels;
  panels.push(gk15(f, a, b, 0));
  double value = panels.top().value, error = panels.top().error, l1 = panels.top().l1;
  auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * l1); };
  while (std::isfinite(value) && error > tolerance() && panels.top().depth < opts.max_depth) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gk15(f, worst.a, mid, worst.depth + 1);
    const Panel right = gk15(f, mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  // Recompute the sums to shed accumulated cancellation.
  value = error = l1 = 0.0;
  for (auto q = panels; !q.empty(); q.pop()) {
    value += q.top().value;
    error += q.top().error;
    l1 += q.top().l1;
  }
  const double tol = tolerance();
  if (!std::isfinite(value) || error > tol) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: estimated error "
        << error << " above tolerance " << tol;
    throw QuadratureError(msg.str(), error);
  }
  return {value, error};
}

Result integrate_from_zero(const std::function<double(double)>& f, double t, const Options& opts) {
  if (t <= 0.0) return {};
  Result total;
  double hi = t;
  int quiet = 0;
  for (int k = 0; k < 1000; ++k) {
    const double lo = 0.5 * hi;
    Options piece = opts;
    piece.abs_tol = std::max(opts.abs_tol * 1e-3, 1e-300);
    const Result r = integrate(f, lo, hi, piece);
    total.value += r.value;
    total.error += r.error;
    hi = lo;
    const double scale = std::max(std::abs(total.value), 1e-300);
    if (std::abs(r.value) <= 1e-3 * opts.rel_tol * scale || std::abs(r.value) < 1e-300)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 3) return total;
    if (hi < 1e-300) break;
  }
  std::ostringstream msg;
  msg << "integral from 0 to " << t << " does not settle (integrand not integrable at 0?)";
  throw QuadratureError(msg.str(), std::abs(total.value));
}

} // namespace robin::quad

#include "cesaro/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cesaro {
namespace {


// Wynn table whose update numerator is step(i, k); even columns estimate the
// limit.  A constant 1 gives the epsilon algorithm, x[i+k+1] - x[i] gives rho.
template <class Step>
double wynn(std::span<const double> s, Step step) {
  const std::size_t n = s.size();
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> cur(s.begin(), s.end());
  double best = s.back();
  for (std::size_t k = 0; cur.size() > 1; ++k) {
    std::vector<double> next;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) return best;
      next.push_back(prev[i + 1] + step(i, k) / diff);
    }
    prev = std::move(cur);
    cur = std::move(next);
    if ((k + 1) % 2 == 0) best = cur.back();
  }
  return best;
}

}  // namespace

std::optional<double> extrapolate_boundary(std::span<const double> values,
                                           std::span<const double> octaves, BoundaryModel model) {
  if (values.size() < 3 || values.size() != octaves.size()) return std::nullopt;
  for (double v : values)
    if (!std::isfinite(v)) return std::nullopt;
  if (model == BoundaryModel::kPowerLaw) return wynn(values, [](std::size_t, std::size_t) { return 1.0; });
  std::vector<double> x(octaves.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = octaves[i] * std::numbers::ln2;
  return wynn(values, [&x](std::size_t i, std::size_t k) { return x[i + k + 1] - x[i]; });
}

GoldenResult golden_section_max(const std::function<double(double)>& h, double a, double b,
                                double x_tol, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = h(c);
  double fd = h(d);
  int evals = 2;
  double best = std::max(fc, fd);
  double residual = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < max_iterations && (b - a) > x_tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = h(d);
    }
    ++evals;
    const double now = std::max(fc, fd);
    residual = std::abs(now - best);
    best = std::max(best, now);
  }
  const bool converged = (b - a) <= x_tol;
  const double x = fc >= fd ? c : d;
  if (!std::isfinite(residual)) residual = 0.0;
  return {x, std::max(fc, fd), residual, evals, converged};
}

SupEstimate sup_over_radius(const std::function<double(double)>& h, const SupOptions& opts) {
  SupEstimate est;
  const int kmax = opts.max_octaves;
  for (int k = 0; k <= kmax; ++k) {
    const double r = geometric_radius(k);
    const double v = h(r);
    ++est.evaluations;
    if (!std::isfinite(v) || v > opts.divergence_threshold) {
      est.diverged = true;
      est.divergence_radius = r;
      break;
    }
    est.grid_radii.push_back(r);
    est.grid_values.push_back(v);
  }
  if (est.grid_values.empty()) {
    est.value = std::numeric_limits<double>::infinity();
    return est;
  }

  const auto& vals = est.grid_values;
  const std::size_t n = vals.size();
  const std::size_t best = static_cast<std::size_t>(
      std::distance(vals.begin(), std::max_element(vals.begin(), vals.end())));
  est.value = vals[best];
  est.argmax_radius = est.grid_radii[best];
  if (est.diverged) return est;

  // Tail analysis over the last few octaves.
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(opts.extrapolation_points), n);
  std::span<const double> tail(vals.data() + (n - m), m);
  std::vector<double> octaves(m);
  for (std::size_t i = 0; i < m; ++i) octaves[i] = static_cast<double>(n - m + i);

  bool growing = m >= 3;
  for (std::size_t i = 0; growing && i + 1 < m; ++i) {
    const double d = tail[i + 1] - tail[i];
    if (!(d > 1e-8 * std::max(1.0, std::abs(tail[i + 1])))) growing = false;
    if (growing && i >= 1) {
      const double prev = tail[i] - tail[i - 1];
      if (d < 0.99 * prev) growing = false;
    }
  }

  est.extrapolated_limit = extrapolate_boundary(tail, octaves, opts.boundary);

  if (best + 1 == n) {
    est.boundary_maximum = true;
    if (growing) {
      est.diverged = true;
      est.divergence_radius = est.grid_radii[n - m];
      est.extrapolated_limit.reset();
      return est;
    }
    if (m >= 5 && est.extrapolated_limit) {
      auto coarse = extrapolate_boundary(tail.subspan(2), std::span<const double>(octaves).subspan(2),
                                         opts.boundary);
      est.refinement_residual = coarse ? std::abs(*coarse - *est.extrapolated_limit) : 0.0;
    }
    est.converged = est.refinement_residual <= opts.tol;
    return est;
  }

  const double lo = best == 0 ? 0.0 : est.grid_radii[best - 1];
  const double hi = est.grid_radii[best + 1];
  auto g = golden_section_max(h, lo, hi, opts.radius_tol);
  est.evaluations += g.evaluations;
  if (g.value > est.value) {
    est.value = g.value;
    est.argmax_radius = g.x;
  }
  est.refinement_residual = g.residual;
  est.converged = g.converged && g.residual <= opts.tol;
  return est;
}

}  // namespace cesaro

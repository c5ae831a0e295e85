#pragma once

// Adaptive quadrature and the supremum-over-radius search that every norm
// and theorem computation is built on.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <type_traits>
#include <vector>

#include "cesaro/errors.hpp"

namespace cesaro {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// Convergence is declared when error <= max(abs_tol, rel_tol * |value|).
  double rel_tol = 1e-12;
  int max_panels = 10000;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  int subdivisions = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod_panel(F& g, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const T center = g(mid);
  T kronrod = center * kKronrodWeights[7];
  T gauss = center * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const T pair = g(mid - dx) + g(mid + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive G7/K15 quadrature on [a, b]: the panel with the largest
/// embedded error estimate is bisected until the summed estimate meets the
/// tolerance.  Nodes are interior, so integrable endpoint singularities are
/// never evaluated.  Throws ConvergenceError at the panel cap.
template <class F>
auto integrate_finite(F&& g, double a, double b, const QuadratureOptions& opts = {})
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  if (!(a < b)) throw DomainError("integrate_finite: require a < b");

  std::priority_queue<detail::Panel<T>> panels;
  auto first = detail::gauss_kronrod_panel<T>(g, a, b);
  T total = first.value;
  double error = first.error;
  panels.push(first);
  int count = 1;

  auto done = [&] { return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  while (!done()) {
    if (count >= opts.max_panels) {
      std::ostringstream os;
      os << "integrate_finite: " << count << " panels on [" << a << ", " << b
         << "], error estimate " << error;
      throw ConvergenceError(os.str());
    }
    auto worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("integrate_finite: panel width reached machine resolution");
    }
    panels.pop();
    auto left = detail::gauss_kronrod_panel<T>(g, worst.a, mid);
    auto right = detail::gauss_kronrod_panel<T>(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of the running updates.
  T sum{};
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  if (!std::isfinite(std::abs(sum))) throw ConvergenceError("integrate_finite: non-finite integral");
  return {sum, err, count};
}

/// Integral of g over [0, inf) through u = e^{-t}: the integrand becomes
/// g(-log u) / u on (0, 1].
template <class F>
auto integrate_halfline_exp(F&& g, const QuadratureOptions& opts = {}) {
  auto transformed = [&g](double u) { return g(-std::log(u)) / u; };
  return integrate_finite(transformed, 0.0, 1.0, opts);
}

/// How a supremum attained as r -> 1- approaches its limit.
enum class BoundaryModel {
  /// L + c (1-r)^p + ...: Wynn's epsilon algorithm, i.e. Richardson
  /// elimination with the exponents estimated from the data.
  kPowerLaw,
  /// L + c / log(1/(1-r)) + ...: Wynn's rho algorithm in log(1/(1-r)).
  kLogarithmic,
};

struct SupOptions {
  double tol = 1e-9;
  /// Grid r_k = 1 - 2^{-k}, k = 0..max_octaves.
  int max_octaves = 40;
  BoundaryModel boundary = BoundaryModel::kPowerLaw;
  double divergence_threshold = 1e12;
  int extrapolation_points = 5;
  /// Golden-section stops once the bracket is narrower than this.
  double radius_tol = 1e-10;
};

struct SupEstimate {
  /// Largest sampled value (a certified lower bound for the supremum).
  double value = 0.0;
  double argmax_radius = 0.0;
  bool converged = false;
  /// Boundary limit from the last grid points; present whenever the tail is
  /// finite, whether or not the maximum sits at the boundary.
  std::optional<double> extrapolated_limit;
  bool boundary_maximum = false;
  bool diverged = false;
  /// First radius where divergence was detected.
  double divergence_radius = 0.0;
  double refinement_residual = 0.0;
  int evaluations = 0;
  std::vector<double> grid_radii;
  std::vector<double> grid_values;

  /// The supremum estimate: the boundary limit when the maximum is at the
  /// boundary and it exceeds the sampled value, otherwise `value`.
  double best() const {
    if (boundary_maximum && extrapolated_limit && *extrapolated_limit > value)
      return *extrapolated_limit;
    return value;
  }
};

/// r_k = 1 - 2^{-k}.
inline double geometric_radius(int k) { return 1.0 - std::ldexp(1.0, -k); }

/// Limit of values sampled at r_k = 1 - 2^{-k} for the given ks.  Returns
/// nullopt when fewer than three points are supplied.
std::optional<double> extrapolate_boundary(std::span<const double> values,
                                           std::span<const double> octaves, BoundaryModel model);

/// Maximum of h over [0, 1): geometric grid, golden-section refinement of the
/// best bracketing triple, boundary extrapolation, divergence detection.
SupEstimate sup_over_radius(const std::function<double(double)>& h, const SupOptions& opts = {});

/// Golden-section maximisation of a unimodal function on [a, b].
struct GoldenResult {
  double x;
  double value;
  double residual;
  int evaluations;
  bool converged;
};
GoldenResult golden_section_max(const std::function<double(double)>& h, double a, double b,
                                double x_tol, int max_iterations = 200);

}  // namespace cesaro

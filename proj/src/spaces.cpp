#include "cesaro/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {
namespace {

double one_minus_r2(double r) { return (1.0 - r) * (1.0 + r); }

const std::function<Complex(Complex)>& measured_part(const DiskFunction& f, const SpaceSpec& space) {
  if (space.kind() == SpaceSpec::Kind::kBlochAlpha) {
    if (!f.derivative) throw PreconditionError("Bloch norm needs the derivative of f");
    return f.derivative;
  }
  if (!f.value) throw PreconditionError("function has no value evaluator");
  return f.value;
}

SupOptions sup_options(const SpaceSpec& space, const NormOptions& opts) {
  SupOptions s;
  s.tol = opts.tol;
  s.max_octaves = opts.max_octaves;
  s.divergence_threshold = opts.divergence_threshold;
  s.boundary = space.kind() == SpaceSpec::Kind::kKorenblumLog ? BoundaryModel::kLogarithmic
                                                                : BoundaryModel::kPowerLaw;
  return s;
}

struct AngularMax {
  double value;
  double angle;
};

// max over theta of |g(r e^{i theta})| on `angles` equispaced points, with
// golden-section refinement around the best one.
AngularMax angular_max(const std::function<Complex(Complex)>& g, double r, int angles) {
  if (r == 0.0) return {std::abs(g(Complex{})), 0.0};
  const double step = 2.0 * std::numbers::pi / angles;
  int best = 0;
  double best_value = -1.0;
  for (int j = 0; j < angles; ++j) {
    const double v = std::abs(g(std::polar(r, j * step)));
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  const double center = best * step;
  auto along = [&](double theta) { return std::abs(g(std::polar(r, theta))); };
  auto gold = golden_section_max(along, center - step, center + step, 1e-12 * std::max(1.0, step));
  if (gold.value > best_value) {
    double angle = std::fmod(gold.x, 2.0 * std::numbers::pi);
    if (angle < 0) angle += 2.0 * std::numbers::pi;
    return {gold.value, angle};
  }
  return {best_value, center};
}

void fill_from_sup(NormEstimate& out, const SupEstimate& sup) {
  out.value = sup.value;
  out.argmax_radius = sup.argmax_radius;
  out.radial_points = sup.evaluations;
  out.refinement_residual = sup.refinement_residual;
  out.diverged = sup.diverged;
  out.divergence_radius = sup.divergence_radius;
  if (sup.boundary_maximum) out.boundary_limit = sup.extrapolated_limit;
}

void apply_bloch_offset(NormEstimate& out, const DiskFunction& f, const SpaceSpec& space) {
  if (space.kind() != SpaceSpec::Kind::kBlochAlpha) return;
  out.seminorm = out.value;
  out.f0 = std::abs(f.value(Complex{}));
  out.value += out.f0;
  if (out.boundary_limit) *out.boundary_limit += out.f0;
}

void require_converged(const NormEstimate& est, const SupEstimate& sup, double tol, const char* what) {
  if (est.diverged) return;
  const double scale = std::max(1.0, est.value);
  if (!sup.converged && est.refinement_residual > tol * scale) {
    std::ostringstream os;
    os << what << ": radial refinement stalled, residual " << est.refinement_residual
       << " above tolerance " << tol;
    throw ConvergenceError(os.str());
  }
}

}  // namespace

SpaceSpec SpaceSpec::korenblum(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Korenblum space needs alpha in (0,1)");
  return SpaceSpec(Kind::kKorenblum, alpha);
}

SpaceSpec SpaceSpec::korenblum_log(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("log-weighted Korenblum space needs alpha in (0,1)");
  return SpaceSpec(Kind::kKorenblumLog, alpha);
}

SpaceSpec SpaceSpec::bloch(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha-Bloch space needs alpha > 0");
  return SpaceSpec(Kind::kBlochAlpha, alpha);
}

SpaceSpec SpaceSpec::parse(std::string_view name, double alpha) {
  if (name == "hardy" || name == "hardy-inf" || name == "hinf") return hardy_inf();
  if (name == "korenblum") return korenblum(alpha);
  if (name == "korenblum-log") return korenblum_log(alpha);
  if (name == "bloch") return bloch(alpha);
  throw PreconditionError("unknown space '" + std::string(name) +
                          "' (expected hardy, korenblum, korenblum-log or bloch)");
}

std::string SpaceSpec::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kHardyInf:
      return "hardy";
    case Kind::kKorenblum:
      os << "korenblum(" << alpha_ << ")";
      break;
    case Kind::kKorenblumLog:
      os << "korenblum-log(" << alpha_ << ")";
      break;
    case Kind::kBlochAlpha:
      os << "bloch(" << alpha_ << ")";
      break;
  }
  return os.str();
}

double weight_at(const SpaceSpec& space, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    std::ostringstream os;
    os << "weight_at: radius " << r << " outside [0,1)";
    throw DomainError(os.str());
  }
  const double x = one_minus_r2(r);
  switch (space.kind()) {
    case SpaceSpec::Kind::kHardyInf:
      return 1.0;
    case SpaceSpec::Kind::kKorenblum:
    case SpaceSpec::Kind::kBlochAlpha:
      return std::pow(x, space.alpha());
    case SpaceSpec::Kind::kKorenblumLog:
      return std::pow(x, space.alpha()) *
             (1.0 / space.alpha() + std::numbers::ln2 - std::log(x));
  }
  return 1.0;
}

double log_weight_profile(double x, double alpha) {
  return std::pow(x, alpha) * (1.0 / alpha + std::numbers::ln2 - std::log(x));
}

NormEstimate space_norm(const DiskFunction& f, const SpaceSpec& space, const NormOptions& opts) {
  const auto& g = measured_part(f, space);
  const SupOptions sopts = sup_options(space, opts);

  auto run = [&](int angles) {
    auto profile = [&](double r) { return weight_at(space, r) * angular_max(g, r, angles).value; };
    return sup_over_radius(profile, sopts);
  };

  int angles = opts.initial_angles;
  SupEstimate sup = run(angles);
  double angular_change = 0.0;
  if (!sup.diverged) {
    while (true) {
      if (2 * angles > opts.max_angles) {
        throw ConvergenceError("space_norm: angular doubling did not stabilise for " + space.name());
      }
      SupEstimate finer = run(2 * angles);
      angles *= 2;
      angular_change = std::abs(finer.value - sup.value);
      sup = std::move(finer);
      if (sup.diverged || angular_change <= opts.tol * std::max(1.0, sup.value)) break;
    }
  }

  NormEstimate out;
  fill_from_sup(out, sup);
  out.angular_points = angles;
  out.argmax_angle = angular_max(g, out.argmax_radius, angles).angle;
  out.refinement_residual = std::max(out.refinement_residual, angular_change);
  require_converged(out, sup, opts.tol, "space_norm");
  apply_bloch_offset(out, f, space);
  return out;
}

NormEstimate space_norm(const AnalyticFunction& f, const SpaceSpec& space, double tol) {
  NormOptions opts;
  opts.tol = tol;
  return space_norm(as_disk_function(f), space, opts);
}

NormEstimate radial_sup_norm(const DiskFunction& f, const SpaceSpec& space, const NormOptions& opts) {
  const auto& g = measured_part(f, space);
  auto profile = [&](double r) { return weight_at(space, r) * std::abs(g(Complex(r, 0.0))); };
  SupEstimate sup = sup_over_radius(profile, sup_options(space, opts));
  NormEstimate out;
  fill_from_sup(out, sup);
  out.angular_points = 1;
  require_converged(out, sup, opts.tol, "radial_sup_norm");
  apply_bloch_offset(out, f, space);
  return out;
}

NormEstimate radial_sup_norm(const AnalyticFunction& f, const SpaceSpec& space, double tol,
                             std::size_t check_degree) {
  TaylorOptions topts;
  topts.radius = 0.9;
  const PowerSeries series = taylor_truncate(f, check_degree, topts);
  double scale = 1.0;
  for (const auto& c : series.coeffs()) scale = std::max(scale, std::abs(c));
  for (std::size_t n = 0; n <= series.degree(); ++n) {
    const Complex c = series[n];
    if (c.real() < -1e-10 * scale || std::abs(c.imag()) > 1e-10 * scale) {
      std::ostringstream os;
      os << "radial_sup_norm: Taylor coefficient " << n << " = " << c
         << " is not a nonnegative real; use space_norm";
      throw PreconditionError(os.str());
    }
  }
  NormOptions opts;
  opts.tol = tol;
  return radial_sup_norm(as_disk_function(f), space, opts);
}

double bloch_growth_bound(double seminorm, double f0, double r, double alpha) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("bloch_growth_bound: r must lie in [0,1)");
  if (!(seminorm >= 0.0 && f0 >= 0.0 && alpha > 0.0))
    throw DomainError("bloch_growth_bound: need seminorm >= 0, f0 >= 0, alpha > 0");
  const double log_inv = -std::log1p(-r);  // log(1/(1-r))
  if (alpha == 1.0) return log_inv * seminorm + f0;
  // ((1-r)^{1-alpha} - 1) / (alpha - 1), written to stay accurate near alpha = 1
  const double factor = std::expm1((alpha - 1.0) * log_inv) / (alpha - 1.0);
  return factor * seminorm + f0;
}

}  // namespace cesaro

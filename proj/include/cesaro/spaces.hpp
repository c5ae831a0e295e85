#pragma once

// Weighted sup-norms on the unit disk: H-infinity, the Korenblum spaces with
// and without the logarithmic weight, and the alpha-Bloch spaces.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "cesaro/functions.hpp"
#include "cesaro/numerics.hpp"

namespace cesaro {

class SpaceSpec {
 public:
  enum class Kind { kHardyInf, kKorenblum, kKorenblumLog, kBlochAlpha };

  static SpaceSpec hardy_inf() { return SpaceSpec(Kind::kHardyInf, 0.0); }
  /// alpha in (0,1); DomainError otherwise.
  static SpaceSpec korenblum(double alpha);
  /// alpha in (0,1); DomainError otherwise.
  static SpaceSpec korenblum_log(double alpha);
  /// alpha > 0; DomainError otherwise.
  static SpaceSpec bloch(double alpha);

  /// Parses "hardy", "korenblum", "korenblum-log" or "bloch" with the given
  /// alpha (ignored for hardy).  Throws PreconditionError on unknown names.
  static SpaceSpec parse(std::string_view name, double alpha);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  std::string name() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  SpaceSpec(Kind k, double a) : kind_(k), alpha_(a) {}
  Kind kind_;
  double alpha_;
};

/// Radial weight at |z| = r (applied to |f'| for Bloch).  DomainError unless
/// 0 <= r < 1.
double weight_at(const SpaceSpec& space, double r);

/// x^alpha log(2 e^{1/alpha} / x), the weight profile as a function of
/// x = 1 - |z|^2 (and of |1 - z^2| in the extremal estimates).
double log_weight_profile(double x, double alpha);

struct NormEstimate {
  double value = 0.0;
  double argmax_radius = 0.0;
  double argmax_angle = 0.0;
  int radial_points = 0;
  int angular_points = 0;
  double refinement_residual = 0.0;
  /// Boundary limit of the radial profile when its maximum is at r -> 1-.
  std::optional<double> boundary_limit;
  /// The weighted modulus exceeded the overflow guard or grows without bound
  /// toward the boundary: the function is not in the space.
  bool diverged = false;
  double divergence_radius = 0.0;
  /// For Bloch spaces: |f(0)| and the seminorm, with value = f0 + seminorm.
  double f0 = 0.0;
  double seminorm = 0.0;

  /// The norm: the sampled sup, or the boundary limit when that is larger.
  double best() const { return boundary_limit ? std::max(value, *boundary_limit) : value; }
};

struct NormOptions {
  double tol = 1e-9;
  int initial_angles = 256;
  int max_angles = 8192;
  int max_octaves = 40;
  double divergence_threshold = 1e12;
};

/// Supremum over the disk.  Throws ConvergenceError when angular doubling or
/// radial refinement does not settle within tol.
NormEstimate space_norm(const DiskFunction& f, const SpaceSpec& space, const NormOptions& opts);
NormEstimate space_norm(const AnalyticFunction& f, const SpaceSpec& space, double tol = 1e-9);

/// Supremum along the positive radius only.  Equal to space_norm for
/// functions with nonnegative Taylor coefficients; the DiskFunction overload
/// leaves that property to the caller.
NormEstimate radial_sup_norm(const DiskFunction& f, const SpaceSpec& space, const NormOptions& opts);
/// Checks the coefficient condition on the first `check_degree`+1 Taylor
/// coefficients and throws PreconditionError when it fails.
NormEstimate radial_sup_norm(const AnalyticFunction& f, const SpaceSpec& space, double tol = 1e-9,
                             std::size_t check_degree = 32);

/// Pointwise growth bound for f in B^alpha at |z| = r:
/// ((1-r)^{1-alpha} - 1)/(alpha - 1) * seminorm + f0, or
/// log(1/(1-r)) * seminorm + f0 when alpha = 1.
double bloch_growth_bound(double seminorm, double f0, double r, double alpha);

}  // namespace cesaro

#pragma once

// Executable forms of the norm identities and bounds for the Cesaro operator
// on Korenblum, log-weighted Korenblum, Bloch and H-infinity spaces, each
// with a verdict wrapper that compares a computed value to the stated one.

#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "cesaro/empirical.hpp"
#include "cesaro/functions.hpp"
#include "cesaro/numerics.hpp"

namespace cesaro {

enum class TheoremId {
  kKorenblumExact,   // T3.1: ||C|| on H^inf_alpha = 1/alpha, 0 < alpha <= 1/2
  kLogToPlain,       // T4.1: H^inf_{alpha,log} -> H^inf_alpha
  kLogToLog,         // T5.1: on H^inf_{alpha,log}
  kBlochUpper,       // T6.2: upper bound on B^alpha, alpha > 1
  kBlochLower,       // T6.3: lower bound 3/2 on B^alpha
  kHardyToBloch,     // T7.1: H^inf -> B^alpha
};

std::string to_string(TheoremId id);
/// Accepts "T3.1", "T4.1", "T5.1", "T6.2", "T6.3", "T7.1".
std::optional<TheoremId> parse_theorem_id(std::string_view text);

/// [lo, hi]; an exact value has lo == hi, a one-sided bound an infinite end.
struct Bound {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  static Bound exact(double v) { return {v, v}; }
  static Bound at_least(double v) { return {v, std::numeric_limits<double>::infinity()}; }
  bool is_exact() const { return lo == hi; }
};

struct TheoremVerdict {
  TheoremId theorem_id;
  double alpha = 0.0;
  Bound theoretical;
  double computed = 0.0;
  /// Absolute tolerance applied in the comparison.
  double tolerance = 0.0;
  bool passed = false;
  /// The quantity is +infinity (operator unbounded); `computed` then holds the
  /// largest finite witness value seen.
  bool divergent = false;
  std::string notes;
};

/// (1+r)^a e^{-t} (1-(1-e^{-t})r)^{2a-1} / (1-(1-2e^{-t})r)^a, the integrand
/// whose t-integral is (1-r^2)^a C(f_a)(r) for f_a = (1-z^2)^{-a}.
/// DomainError unless 0 <= r < 1, t >= 0, 0 < alpha < 1.
double integrand_F(double r, double t, double alpha);

/// log(2e^{1/a} / (1 - phi_t(r)^2)), the log weight at the image point.
double log_factor_at_image(double r, double t, double alpha);

/// log(2e^{1/a}/(1-r^2)) / log(2e^{1/a}/(1-phi_t(r)^2)).
double log_ratio(double r, double t, double alpha);

/// 1/alpha for 0 < alpha <= 1/2; DomainError otherwise.
double korenblum_norm_exact(double alpha);

/// sup over r of int_0^inf F(r,t,alpha) dt.
SupEstimate korenblum_sup_integral(double alpha, double tol = 1e-10);
/// The t-integral at a single radius.
double korenblum_radial_integral(double r, double alpha, double tol = 1e-10);

/// ||C|| from H^inf_{alpha,log} to H^inf_alpha as a sup-integral.
SupEstimate log_to_plain_norm(double alpha, double tol = 1e-10);
double log_to_plain_radial_integral(double r, double alpha, double tol = 1e-10);

/// ||C|| on H^inf_{alpha,log} as a sup-integral; boundary limit 1/alpha.
SupEstimate log_to_log_norm(double alpha, double tol = 1e-10);
double log_to_log_radial_integral(double r, double alpha, double tol = 1e-10);

/// A = 1 + (2/(2a-1))^{2a-1} a^a (a-1)^{a-1}; alpha > 1.
double bloch_constant_A(double alpha);
/// Piecewise upper bound on ||C|| on B^alpha; DomainError for alpha <= 1.
double bloch_upper_bound(double alpha);
double bloch_lower_bound();

struct HardyToBlochBounds {
  std::optional<Bound> bounds;
  bool divergent = false;
};
/// [3,4] at alpha = 1, [3/2, 4] for alpha > 1, divergent for 0 < alpha < 1.
HardyToBlochBounds hardy_to_bloch_bounds(double alpha);

/// (1 - r^2)^alpha |1/(r(1-r)) - log(1/(1-r))/r^2| = (1-r^2)^alpha C(1)'(r).
double hardy_bloch_witness(double r, double alpha);

/// (1-r^2)/r^2 {3r/(2(1-r)) - (1/4) log((1+r)/(1-r)^5)}; series branch for
/// r < 1e-4.  DomainError outside [0,1).
double h_closed_form(double r);
/// Complex extension of h, analytic on the disk away from the removable
/// singularity at 0.
Complex h_closed_form(Complex z);
/// Taylor coefficient of h: 1 for n in {0,1}, (5 + (-1)^{n-1}) / (2n(n+2)) after.
double h_series_coeff(int n);

/// (1+r)^a (1-r)^{a-1}; its maximiser on [0,1) is 1/(2a-1) for a > 1.
double bloch_radial_profile(double r, double alpha);

double default_tolerance(TheoremId id);

struct VerifyOptions {
  /// <= 0 selects default_tolerance(id).
  double tol = 0.0;
  /// For T6.2/T6.3: sample the unit ball of B^alpha in addition to the
  /// constant witness.
  std::optional<SampleConfig> empirical;
};

/// Computes the theorem's quantity at alpha and compares it with the stated
/// value or bounds.  DomainError for alpha outside the theorem's range.
TheoremVerdict verify_theorem(TheoremId id, double alpha, const VerifyOptions& opts = {});

/// True when alpha lies in the range where `id` makes a statement the CLI
/// can verify.
bool theorem_accepts_alpha(TheoremId id, double alpha);

}  // namespace cesaro

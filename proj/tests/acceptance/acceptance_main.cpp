// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cesaro/empirical.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/spaces.hpp"
#include "cesaro/theorems.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void ac1_korenblum_exact(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (double a : {0.1, 0.25, 0.5}) {
    const SupEstimate s = korenblum_sup_integral(a);
    const double lim = s.extrapolated_limit.value_or(NAN);
    o.detail << " a=" << a << ":" << lim;
    o.require(std::abs(lim - 1.0 / a) <= 0.01 / a, "limit within 1% of 1/alpha");
  }
  const double dt = seconds_since(t0);
  o.detail << " time=" << dt << "s";
  o.require(dt < 10.0, "runtime < 10 s");
}

void ac2_representations(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(0, 32);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> points;
  for (int i = 0; i < 64; ++i) points.push_back(std::polar(0.95 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng)));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto c = oracle::random_coeffs(rng, static_cast<std::size_t>(deg(rng)));
    const AnalyticFunction f = PowerSeries(c);
    // 0.95^2000 is far below double resolution, so the padded coefficient
    // form is C(p) to working precision.
    const PowerSeries image = cesaro_coeff(PowerSeries(oracle::padded(c, 2000)));
    for (Complex z : points) {
      const Complex c = image.evaluate(z);
      const Complex fi = cesaro_integral(f, z);
      const Complex sg = cesaro_semigroup(f, z);
      worst = std::max({worst, std::abs(c - fi), std::abs(c - sg), std::abs(fi - sg)});
    }
  }
  const double dt = seconds_since(t0);
  o.detail << " max discrepancy=" << worst << " time=" << dt << "s";
  o.require(worst <= 1e-8, "discrepancy <= 1e-8");
  o.require(dt < 30.0, "runtime < 30 s");
}

void ac3_fixed_point(Outcome& o) {
  const PowerSeries ones(std::vector<Complex>(512, 1.0));
  o.require(cesaro_coeff(ones) == ones, "geometric series fixed exactly");
  const double err = std::abs(cesaro_integral(Constant{1.0}, 0.5) - 2.0 * std::numbers::ln2);
  o.detail << " |C(1)(0.5) - 2 log 2|=" << err;
  o.require(err <= 1e-9, "C(1)(0.5) = 2 log 2");
}

void ac4_contraction(Outcome& o) {
  double worst = -INFINITY;
  for (double a : {0.1, 0.3, 0.5})
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double n =
          space_norm(semigroup_image(KorenblumExtremal(a), t), SpaceSpec::korenblum(a), NormOptions{}).best();
      const double excess = n - std::exp(-a * t);
      worst = std::max(worst, excess);
      o.require(excess <= 1e-6, "contraction at a=" + std::to_string(a) + " t=" + std::to_string(t));
    }
  o.detail << " max(norm - e^{-at})=" << worst;
}

void ac5_log_to_plain(Outcome& o) {
  for (double a : {0.2, 0.5, 0.8}) {
    const double lb = 1.0 / (1.0 / a + std::numbers::ln2);
    const double sup = log_to_plain_norm(a).value;
    o.detail << " a=" << a << ":" << sup << ">=" << lb;
    o.require(sup >= lb - 1e-6, "sup >= 1/(1/a + log 2)");
    if (a == 0.5) o.require(sup >= 0.3714, "sup >= 0.3714 at a = 0.5");
  }
}

void ac6_log_to_log(Outcome& o) {
  for (double a : {0.25, 0.5}) {
    const SupEstimate s = log_to_log_norm(a);
    const double lim = s.extrapolated_limit.value_or(NAN);
    o.detail << " a=" << a << ":limit " << lim << " sup " << s.value;
    o.require(!s.diverged && std::isfinite(s.value), "finite, no divergence");
    o.require(lim >= 0.99 / a, "limit >= 0.99/alpha");
  }
}

void ac7_bloch(Outcome& o) {
  o.require(bloch_upper_bound(2.0) == 4.0, "bloch_upper_bound(2) == 4");
  const double a = 1.5;
  SampleConfig cfg;
  cfg.seed = 0;
  cfg.count = 200;
  const EmpiricalBound e = operator_norm_lower_bound(SpaceSpec::bloch(a), SpaceSpec::bloch(a), cfg);
  const double upper = bloch_upper_bound(a);
  o.detail << " lower bound=" << e.estimate.value << " in [1.5, " << upper << "] over " << e.samples
           << " functions";
  o.require(e.samples == 201, "200 samples plus witness");
  o.require(e.estimate.value >= 1.5 - 1e-3 && e.estimate.value <= upper, "estimate in [1.5 - 1e-3, upper]");
}

void ac8_hardy_to_bloch(Outcome& o) {
  const TheoremVerdict v1 = verify_theorem(TheoremId::kHardyToBloch, 1.0);
  o.detail << " ||C(1)||_B1=" << v1.computed;
  o.require(std::abs(v1.computed - 3.0) <= 1e-3, "norm of C(1) in B^1 is 3");
  const double w = hardy_bloch_witness(1.0 - 1e-6, 0.5);
  o.detail << " witness(1-1e-6, 0.5)=" << w;
  o.require(w > 100.0, "witness exceeds 100");
  const SupEstimate s = sup_over_radius([](double r) { return hardy_bloch_witness(r, 0.5); });
  o.require(s.diverged, "sup search flags divergence");
  const TheoremVerdict v05 = verify_theorem(TheoremId::kHardyToBloch, 0.5);
  o.require(v05.divergent && v05.passed, "verdict reports divergence");
}

void ac9_h_function(Outcome& o) {
  TaylorOptions opts;
  opts.radius = 0.9;
  const PowerSeries s = taylor_coefficients([](Complex z) { return h_closed_form(z); }, 49, opts);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) worst = std::max(worst, std::abs(s[n] - h_series_coeff(n)));
  o.detail << " coeff error=" << worst;
  o.require(worst <= 1e-10, "50 coefficients within 1e-10");

  std::vector<double> vals, ks;
  for (int k = 26; k <= 30; ++k) {
    vals.push_back(h_closed_form(geometric_radius(k)));
    ks.push_back(k);
  }
  const double lim = extrapolate_boundary(vals, ks, BoundaryModel::kPowerLaw).value_or(NAN);
  o.detail << " h(1-)=" << lim;
  o.require(std::abs(lim - 3.0) <= 1e-4, "h(1-) = 3");

  for (double a : {1.5, 2.0, 3.0}) {
    const GoldenResult g = golden_section_max([a](double r) { return bloch_radial_profile(r, a); }, 0.0,
                                              1.0 - 1e-9, 1e-12);
    o.require(std::abs(g.x - 1.0 / (2.0 * a - 1.0)) <= 1e-6, "argmax at 1/(2a-1) for a=" + std::to_string(a));
  }
}

void ac10_monotonicity(Outcome& o) {
  int violations = 0;
  for (int k = 1; k <= 9; ++k) {
    const double a = 0.1 * k;
    double prev = -INFINITY;
    for (int i = 1; i <= 1000; ++i) {
      const double x = 2.0 * i / 1001.0;
      const double g = std::pow(x, a) * std::log(2.0 * std::exp(1.0 / a) / x);
      if (!(g > prev)) ++violations;
      prev = g;
    }
  }
  o.require(violations == 0, "g strictly increasing");
  int nonpositive = 0;
  for (int n = 1; n <= 10000; ++n)
    if (!(h_series_coeff(n) > 0.0)) ++nonpositive;
  o.require(nonpositive == 0, "h' coefficients n c_n positive");
  o.detail << " g violations=" << violations << " nonpositive h coefficients=" << nonpositive;
}

struct PairCase {
  SpaceSpec source, target;
  double upper;
};

void ac11_soundness(Outcome& o) {
  const std::vector<PairCase> pairs = {
      {SpaceSpec::korenblum(0.25), SpaceSpec::korenblum(0.25), 4.0},
      {SpaceSpec::korenblum(0.5), SpaceSpec::korenblum(0.5), 2.0},
      {SpaceSpec::korenblum_log(0.5), SpaceSpec::korenblum(0.5), log_to_plain_norm(0.5).value},
      {SpaceSpec::korenblum_log(0.5), SpaceSpec::korenblum_log(0.5), log_to_log_norm(0.5).value},
      {SpaceSpec::bloch(1.5), SpaceSpec::bloch(1.5), bloch_upper_bound(1.5)},
      {SpaceSpec::bloch(3.0), SpaceSpec::bloch(3.0), bloch_upper_bound(3.0)},
      {SpaceSpec::hardy_inf(), SpaceSpec::bloch(1.0), 4.0},
      {SpaceSpec::hardy_inf(), SpaceSpec::bloch(2.0), 4.0},
  };
  double worst = -INFINITY;
  for (const PairCase& pc : pairs) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SampleConfig cfg;
      cfg.seed = seed;
      cfg.count = 40;
      const EmpiricalBound e = operator_norm_lower_bound(pc.source, pc.target, cfg);
      for (double r : e.ratios) worst = std::max(worst, r - pc.upper);
      o.require(!e.diverged, pc.source.name() + "->" + pc.target.name() + " finite");
      o.require(e.estimate.value <= pc.upper + 1e-3,
                pc.source.name() + "->" + pc.target.name() + " seed " + std::to_string(seed));
    }
  }
  o.detail << " max(ratio - bound)=" << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria = {
      {"AC1  Korenblum norm 1/alpha", ac1_korenblum_exact},
      {"AC2  representation equivalence", ac2_representations},
      {"AC3  fixed point and C(1)", ac3_fixed_point},
      {"AC4  semigroup contraction", ac4_contraction},
      {"AC5  log-Korenblum to Korenblum lower bound", ac5_log_to_plain},
      {"AC6  log-Korenblum boundary limit", ac6_log_to_log},
      {"AC7  Bloch bounds", ac7_bloch},
      {"AC8  Hardy to Bloch", ac8_hardy_to_bloch},
      {"AC9  h machinery", ac9_h_function},
      {"AC10 monotonicity", ac10_monotonicity},
      {"AC11 empirical soundness", ac11_soundness},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.ok) ++failed;
    std::printf("%s %-45s (%.2fs)%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

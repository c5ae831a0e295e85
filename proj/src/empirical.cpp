#include "cesaro/empirical.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {
namespace {

using Kind = SpaceSpec::Kind;

constexpr double kNormTol = 1e-9;
// Closed-form images are integrated numerically; beyond 2^-30 from the
// boundary the image point phi_t(r) loses too many digits to 1.
constexpr int kClosedFormOctaves = 30;

bool has_nonnegative_coefficients(const AnalyticFunction& f) {
  // A large radius keeps the rho^{-n} roundoff amplification small.
  TaylorOptions topts;
  topts.radius = 0.9;
  const PowerSeries s = taylor_truncate(f, 32, topts);
  double scale = 1.0;
  for (const auto& c : s.coeffs()) scale = std::max(scale, std::abs(c));
  for (const auto& c : s.coeffs())
    if (c.real() < -1e-10 * scale || std::abs(c.imag()) > 1e-10 * scale) return false;
  return true;
}

NormEstimate image_norm(const AnalyticFunction& f, const SpaceSpec& target) {
  NormOptions opts;
  opts.tol = kNormTol;
  if (f.holds<PowerSeries>()) return space_norm(cesaro_image(f), target, opts);
  // C preserves nonnegative coefficients, so the image is maximised on the
  // positive radius whenever f is.
  if (!has_nonnegative_coefficients(f)) {
    throw PreconditionError("closed-form sample " + f.describe() +
                            " lacks nonnegative coefficients; radial norm would be unsound");
  }
  opts.max_octaves = kClosedFormOctaves;
  opts.tol = 1e-6;
  return radial_sup_norm(cesaro_image(f), target, opts);
}

}  // namespace

AnalyticFunction extremal_witness(const SpaceSpec& space) {
  switch (space.kind()) {
    case Kind::kKorenblum:
      return KorenblumExtremal(space.alpha());
    case Kind::kKorenblumLog:
      return LogKorenblumExtremal(space.alpha());
    case Kind::kHardyInf:
    case Kind::kBlochAlpha:
      break;
  }
  return Constant{1.0};
}

std::vector<AnalyticFunction> sample_unit_ball(const SpaceSpec& space, const SampleConfig& cfg) {
  if (cfg.count <= 0 || cfg.max_degree < 0) throw DomainError("sample_unit_ball: invalid config");

  // Generation is sequential so the draw order depends only on the seed.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> degree_dist(0, cfg.max_degree);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<PowerSeries> raw;
  raw.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    const int degree = degree_dist(rng);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (int n = 0; n <= degree; ++n) {
      const double damp = std::pow(n + 1.0, -cfg.decay_exponent);
      const double re = normal(rng);
      const double im = normal(rng);
      c[static_cast<std::size_t>(n)] = damp * Complex(re, im);
    }
    raw.emplace_back(std::move(c));
  }

  std::vector<std::optional<AnalyticFunction>> out(raw.size());
  const double constant_norm = space_norm(Constant{1.0}, space, kNormTol).value;
  parallel_for(raw.size(), [&](std::size_t i) {
    const PowerSeries& p = raw[i];
    if (p.degree() == 0) {
      out[i] = Constant{Complex(1.0 / constant_norm, 0.0)};
      return;
    }
    const double norm = space_norm(p, space, kNormTol).value;
    if (!(norm > 0.0)) throw ConvergenceError("sample_unit_ball: zero-norm sample");
    out[i] = (1.0 / norm) * p;
  });

  std::vector<AnalyticFunction> samples;
  samples.reserve(out.size() + 1);
  for (auto& f : out) samples.push_back(std::move(*f));
  samples.push_back(extremal_witness(space));
  return samples;
}

bool is_studied_pair(const SpaceSpec& source, const SpaceSpec& target) {
  const Kind s = source.kind();
  const Kind t = target.kind();
  const bool same_alpha = source.alpha() == target.alpha();
  if (s == Kind::kKorenblum && t == Kind::kKorenblum) return same_alpha;
  if (s == Kind::kKorenblumLog && (t == Kind::kKorenblum || t == Kind::kKorenblumLog)) return same_alpha;
  if (s == Kind::kBlochAlpha && t == Kind::kBlochAlpha) return same_alpha && source.alpha() > 1.0;
  if (s == Kind::kHardyInf && t == Kind::kBlochAlpha) return true;
  return false;
}

EmpiricalBound operator_norm_lower_bound(const SpaceSpec& source, const SpaceSpec& target,
                                         const SampleConfig& cfg) {
  if (!is_studied_pair(source, target)) {
    throw PreconditionError("operator_norm_lower_bound: unsupported pair " + source.name() +
                            " -> " + target.name());
  }
  const auto samples = sample_unit_ball(source, cfg);
  std::vector<NormEstimate> images(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { images[i] = image_norm(samples[i], target); });

  EmpiricalBound out;
  out.samples = samples.size();
  out.ratios.reserve(samples.size());
  double best = -1.0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const double ratio = images[i].best();
    out.ratios.push_back(ratio);
    out.sample_diverged.push_back(images[i].diverged);
    if (images[i].diverged && !out.diverged) {
      out.diverged = true;
      out.divergence_radius = images[i].divergence_radius;
    }
    if (ratio > best) {
      best = ratio;
      out.best_sample = i;
    }
  }
  out.estimate = images[out.best_sample];
  out.estimate.value = best;
  if (out.diverged) {
    out.estimate.diverged = true;
    out.estimate.divergence_radius = out.divergence_radius;
  }
  return out;
}

}  // namespace cesaro

#pragma once

// Monte-Carlo lower bounds on operator norms: draw functions from the unit
// ball of a source space, apply the Cesaro operator, and measure the images
// in the target space.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/functions.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

struct SampleConfig {
  std::uint64_t seed = 0;
  int count = 100;
  int max_degree = 64;
  double decay_exponent = 1.0;
};

/// The norm-one function the extremal arguments use for this space:
/// (1-z^2)^{-a} for H^inf_a, its log-weighted analogue for H^inf_{a,log},
/// and the constant 1 for H^inf and B^a.
AnalyticFunction extremal_witness(const SpaceSpec& space);

/// `cfg.count` random polynomials of degree <= max_degree with complex
/// normal coefficients damped by (n+1)^{-decay_exponent}, each rescaled to
/// norm 1 in `space`, followed by extremal_witness(space).  Deterministic in
/// the config.  Degree-0 draws are returned as positive constants.
std::vector<AnalyticFunction> sample_unit_ball(const SpaceSpec& space, const SampleConfig& cfg);

/// (source, target) pairs with a stated norm or bound: K->K, Klog->K,
/// Klog->Klog, B->B (alpha > 1) and H^inf->B.
bool is_studied_pair(const SpaceSpec& source, const SpaceSpec& target);

struct EmpiricalBound {
  /// Estimate for the best sample, with value = max ratio ||Cf|| / ||f||
  /// (boundary limit included).
  NormEstimate estimate;
  /// One ratio per sample, in sample order (witness last); NormEstimate::best()
  /// of each image.
  std::vector<double> ratios;
  std::vector<bool> sample_diverged;
  std::size_t best_sample = 0;
  std::size_t samples = 0;
  /// Some image is not in the target space (operator unbounded).
  bool diverged = false;
  double divergence_radius = 0.0;
};

/// Lower bound on ||C : source -> target||.  PreconditionError for pairs
/// outside is_studied_pair.
EmpiricalBound operator_norm_lower_bound(const SpaceSpec& source, const SpaceSpec& target,
                                         const SampleConfig& cfg);

}  // namespace cesaro

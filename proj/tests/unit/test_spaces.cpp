#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cesaro/errors.hpp"
#include "cesaro/spaces.hpp"
#include "oracles.hpp"

using namespace cesaro;

TEST(SpaceSpec, FactoriesValidateAlpha) {
  EXPECT_THROW(SpaceSpec::korenblum(0.0), DomainError);
  EXPECT_THROW(SpaceSpec::korenblum(1.0), DomainError);
  EXPECT_THROW(SpaceSpec::korenblum_log(1.2), DomainError);
  EXPECT_THROW(SpaceSpec::bloch(-1.0), DomainError);
  EXPECT_NO_THROW(SpaceSpec::bloch(3.0));
}

TEST(SpaceSpec, ParseNames) {
  EXPECT_EQ(SpaceSpec::parse("hardy", 0.5), SpaceSpec::hardy_inf());
  EXPECT_EQ(SpaceSpec::parse("korenblum", 0.5), SpaceSpec::korenblum(0.5));
  EXPECT_EQ(SpaceSpec::parse("korenblum-log", 0.5), SpaceSpec::korenblum_log(0.5));
  EXPECT_EQ(SpaceSpec::parse("bloch", 2.0), SpaceSpec::bloch(2.0));
  EXPECT_THROW(SpaceSpec::parse("dirichlet", 0.5), PreconditionError);
}

TEST(Weights, ClosedForms) {
  EXPECT_EQ(weight_at(SpaceSpec::hardy_inf(), 0.7), 1.0);
  EXPECT_NEAR(weight_at(SpaceSpec::korenblum(0.5), 0.6), std::sqrt(0.64), 1e-15);
  const double a = 0.3, r = 0.4, x = 1.0 - r * r;
  EXPECT_NEAR(weight_at(SpaceSpec::korenblum_log(a), r),
              std::pow(x, a) * std::log(2.0 * std::exp(1.0 / a) / x), 1e-14);
  EXPECT_THROW(weight_at(SpaceSpec::korenblum(0.5), 1.0), DomainError);
  EXPECT_THROW(weight_at(SpaceSpec::korenblum(0.5), -0.1), DomainError);
}

TEST(Weights, LogProfileMatchesDefinition) {
  for (double a : {0.1, 0.5, 0.9})
    for (double x : {1e-6, 0.3, 1.0, 1.9})
      EXPECT_NEAR(log_weight_profile(x, a), std::pow(x, a) * std::log(2.0 * std::exp(1.0 / a) / x),
                  1e-13 * std::max(1.0, std::pow(x, a) / a));
}

TEST(Norms, MonomialsHaveUnitHardyNorm) {
  for (std::size_t n : {0u, 1u, 5u}) {
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    EXPECT_NEAR(space_norm(PowerSeries(c), SpaceSpec::hardy_inf()).best(), 1.0, 1e-9) << n;
  }
}

TEST(Norms, KorenblumNormOfIdentity) {
  // sup (1-r^2)^a r is attained at r^2 = 1/(1+2a).
  for (double a : {0.2, 0.5, 0.8}) {
    const double want = std::pow(2.0 * a / (1.0 + 2.0 * a), a) / std::sqrt(1.0 + 2.0 * a);
    const NormEstimate e = space_norm(PowerSeries({0.0, 1.0}), SpaceSpec::korenblum(a));
    EXPECT_NEAR(e.value, want, 1e-9) << a;
    EXPECT_NEAR(e.argmax_radius, 1.0 / std::sqrt(1.0 + 2.0 * a), 1e-5);
  }
}

TEST(Norms, BlochNormOfSquare) {
  // f = z^2: f(0) = 0, seminorm sup (1-r^2)^a 2r.
  const double a = 1.5;
  const double want = 2.0 * std::pow(2.0 * a / (1.0 + 2.0 * a), a) / std::sqrt(1.0 + 2.0 * a);
  const NormEstimate e = space_norm(PowerSeries({0.0, 0.0, 1.0}), SpaceSpec::bloch(a));
  EXPECT_NEAR(e.value, want, 1e-9);
  EXPECT_EQ(e.f0, 0.0);
  EXPECT_NEAR(e.seminorm, want, 1e-9);
}

TEST(Norms, BlochNormIncludesValueAtZero) {
  const NormEstimate e = space_norm(PowerSeries({Complex(0.0, 3.0), 1.0}), SpaceSpec::bloch(2.0));
  EXPECT_NEAR(e.f0, 3.0, 1e-15);
  EXPECT_NEAR(e.value, 4.0, 1e-9);  // sup (1-r^2)^2 = 1 at r = 0
}

TEST(Norms, ExtremalFunctionsHaveUnitNorm) {
  for (double a : {0.25, 0.5, 0.75}) {
    EXPECT_NEAR(space_norm(KorenblumExtremal(a), SpaceSpec::korenblum(a)).best(), 1.0, 1e-8) << a;
    EXPECT_NEAR(radial_sup_norm(LogKorenblumExtremal(a), SpaceSpec::korenblum_log(a)).best(), 1.0, 1e-8)
        << a;
  }
}

TEST(Norms, RadialMatchesDiskForPositiveCoefficients) {
  const PowerSeries p({1.0, 0.5, 0.25, 0.125});
  const SpaceSpec s = SpaceSpec::korenblum(0.4);
  EXPECT_NEAR(radial_sup_norm(p, s).value, space_norm(p, s).value, 1e-9);
}

TEST(Norms, RadialRejectsSignedCoefficients) {
  EXPECT_THROW(radial_sup_norm(PowerSeries({1.0, -1.0}), SpaceSpec::korenblum(0.5)), PreconditionError);
}

TEST(Norms, DisplacedMaximumIsFound) {
  // |1 + z^3 e^{-i}| peaks at angle (1 + 2 pi k) / 3 on every circle.
  const PowerSeries p({1.0, 0.0, 0.0, std::polar(1.0, -1.0)});
  const NormEstimate e = space_norm(p, SpaceSpec::hardy_inf());
  EXPECT_NEAR(e.best(), 2.0, 1e-8);
}

TEST(Norms, UnboundedFunctionDiverges) {
  const DiskFunction f{[](Complex z) { return 1.0 / (1.0 - z); }, {}};
  EXPECT_TRUE(space_norm(f, SpaceSpec::hardy_inf(), NormOptions{}).diverged);
}

TEST(GrowthBound, HoldsForRandomPolynomials) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto c = oracle::random_coeffs(rng, 12);
    const PowerSeries p(c);
    for (double a : {0.5, 1.0, 2.0}) {
      const NormEstimate e = space_norm(p, SpaceSpec::bloch(a));
      for (double r : {0.3, 0.9, 0.99})
        for (double th : {0.0, 1.0, 2.5}) {
          const double v = std::abs(p.evaluate(std::polar(r, th)));
          EXPECT_LE(v, bloch_growth_bound(e.seminorm, e.f0, r, a) + 1e-9);
        }
    }
  }
}

TEST(GrowthBound, AlphaOneIsLogarithmic) {
  EXPECT_NEAR(bloch_growth_bound(2.0, 1.0, 0.5, 1.0), 1.0 + 2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(bloch_growth_bound(1.0, 0.0, 0.75, 2.0), 3.0, 1e-14);
  EXPECT_THROW(bloch_growth_bound(1.0, 0.0, 1.0, 2.0), DomainError);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cesaro/errors.hpp"
#include "cesaro/operator.hpp"
#include "cesaro/spaces.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {

// C(1)(z) = log(1/(1-z)) / z
Complex c_of_one(Complex z) { return z == Complex{} ? Complex(1.0) : -std::log(1.0 - z) / z; }

}  // namespace

TEST(CesaroCoeff, MatchesDefinition) {
  std::mt19937_64 rng(3);
  const auto a = oracle::random_coeffs(rng, 20);
  const auto want = oracle::cesaro_means(a);
  const PowerSeries got = cesaro_coeff(PowerSeries(a));
  for (std::size_t n = 0; n < a.size(); ++n) EXPECT_NEAR(std::abs(got[n] - want[n]), 0.0, 1e-14);
}

TEST(CesaroCoeff, GeometricSeriesIsFixed) {
  const PowerSeries ones(std::vector<Complex>(100, 1.0));
  EXPECT_EQ(cesaro_coeff(ones), ones);
}

TEST(CesaroCoeff, ConstantMapsToConstant) {
  EXPECT_EQ(cesaro_coeff(PowerSeries({3.0})), PowerSeries({3.0}));
}

TEST(CesaroOfOne, IntegralAndSemigroupForms) {
  for (Complex z : {Complex(0.0), Complex(0.5), Complex(-0.7, 0.2), Complex(0.1, 0.9)}) {
    EXPECT_NEAR(std::abs(cesaro_integral(Constant{1.0}, z) - c_of_one(z)), 0.0, 1e-10) << z;
    EXPECT_NEAR(std::abs(cesaro_semigroup(Constant{1.0}, z) - c_of_one(z)), 0.0, 1e-10) << z;
  }
  EXPECT_NEAR(cesaro_integral(Constant{1.0}, 0.5).real(), 2.0 * std::numbers::ln2, 1e-12);
}

TEST(CesaroOfOne, DerivativeForm) {
  for (double r : {0.0, 0.3, 0.9}) {
    const double want = r == 0.0 ? 0.5 : 1.0 / (r * (1.0 - r)) + std::log1p(-r) / (r * r);
    EXPECT_NEAR(cesaro_derivative(Constant{1.0}, r).real(), want, 1e-9 * std::max(1.0, want)) << r;
  }
}

TEST(CesaroCoeff, PolynomialImageHasGeometricTail) {
  // Beyond the degree every mean is p(1)/(n+1).
  const PowerSeries padded = cesaro_coeff(PowerSeries({1.0, 2.0, 0.0, 0.0, 0.0}));
  EXPECT_NEAR(std::abs(padded[4] - 3.0 / 5.0), 0.0, 1e-16);
  EXPECT_EQ(cesaro_coeff(PowerSeries({1.0, 2.0})), padded.truncated(1));
}

TEST(CesaroTail, MatchesDirectSum) {
  for (std::size_t d : {0u, 3u, 20u})
    for (Complex z : {Complex(0.1, 0.2), Complex(0.45), Complex(-0.6, 0.2), Complex(0.0, 0.9)}) {
      Complex sum{}, dsum{}, zn = std::pow(z, static_cast<double>(d));
      for (std::size_t n = d + 1; n < 3000; ++n) {
        dsum += zn * (double(n) / double(n + 1));
        zn *= z;
        sum += zn / double(n + 1);
      }
      EXPECT_NEAR(std::abs(cesaro_tail(d, z) - sum), 0.0, 1e-14) << d << " " << z;
      EXPECT_NEAR(std::abs(cesaro_tail_derivative(d, z) - dsum), 0.0, 1e-13) << d << " " << z;
    }
}

TEST(Representations, AgreeOnPolynomials) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto c = oracle::random_coeffs(rng, 15);
    const AnalyticFunction f = PowerSeries(c);
    const auto means = oracle::cesaro_means(oracle::padded(c, 1500));
    const DiskFunction image = cesaro_image(f);
    for (Complex z : {Complex(0.2, 0.1), Complex(-0.8, 0.3), Complex(0.0, 0.95)}) {
      const Complex want = oracle::horner(means, z);
      EXPECT_NEAR(std::abs(image.value(z) - want), 0.0, 1e-11);
      EXPECT_NEAR(std::abs(cesaro_integral(f, z) - want), 0.0, 1e-9);
      EXPECT_NEAR(std::abs(cesaro_semigroup(f, z) - want), 0.0, 1e-9);
      EXPECT_NEAR(std::abs(cesaro_derivative(f, z) - image.derivative(z)), 0.0, 1e-8);
    }
  }
}

TEST(Representations, AgreeOnClosedForms) {
  const double a = 0.4;
  const auto c = oracle::korenblum_coeffs(a, 300);
  const auto means = oracle::cesaro_means(c);
  for (Complex z : {Complex(0.5), Complex(-0.2, 0.4)}) {
    const Complex want = oracle::horner(means, z);
    EXPECT_NEAR(std::abs(cesaro_semigroup(KorenblumExtremal(a), z) - want), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(cesaro_integral(KorenblumExtremal(a), z) - want), 0.0, 1e-10);
  }
}

TEST(Representations, DerivativeMatchesCauchyIntegralOfImage) {
  const AnalyticFunction f = LogKorenblumExtremal(0.6);
  const DiskFunction image = cesaro_image(f);
  const Complex z(0.3, -0.2);
  const Complex want = oracle::cauchy_derivative(image.value, z, 1, 0.2, 64);
  EXPECT_NEAR(std::abs(image.derivative(z) - want), 0.0, 1e-9);
}

TEST(Representations, RejectPointsOutsideDisk) {
  EXPECT_THROW(cesaro_integral(Constant{1.0}, 1.0), DomainError);
  EXPECT_THROW(cesaro_semigroup(Constant{1.0}, Complex(0.0, 2.0)), DomainError);
  EXPECT_THROW(cesaro_derivative(Constant{1.0}, -1.0), DomainError);
}

TEST(SemigroupKernel, ReducesToIdentityAtZero) {
  const SemigroupKernel k(0.0);
  const Complex z(0.3, 0.4);
  EXPECT_NEAR(std::abs(k.map(z) - z), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(k.weight(z) - 1.0), 0.0, 1e-15);
  EXPECT_THROW(SemigroupKernel(-1.0), DomainError);
}

TEST(SemigroupKernel, ComposesAsSemigroup) {
  const double s = 0.4, t = 1.3;
  const SemigroupKernel ks(s), kt(t), kst(s + t);
  for (Complex z : {Complex(0.5), Complex(-0.3, 0.7)}) {
    EXPECT_NEAR(std::abs(kt.map(ks.map(z)) - kst.map(z)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(ks.weight(z) * kt.weight(ks.map(z)) - kst.weight(z)), 0.0, 1e-14);
  }
}

TEST(SemigroupKernel, MapsDiskIntoDiskFixingZeroAndOne) {
  const SemigroupKernel k(0.7);
  EXPECT_EQ(k.map(0.0), Complex{});
  EXPECT_NEAR(std::abs(k.map(1.0 - 1e-12) - 1.0), 0.0, 1e-11);
  for (double th = 0.1; th < 6.2; th += 0.5) EXPECT_LT(std::abs(k.map(std::polar(0.999, th))), 1.0);
  EXPECT_NEAR(std::abs(k.map_complement(0.5) - (1.0 - k.map(0.5))), 0.0, 1e-15);
}

TEST(SemigroupKernel, ApplyMatchesDefinition) {
  const double t = 0.8, u = std::exp(-t);
  const Complex z(0.2, 0.6);
  const PowerSeries p({1.0, 2.0, 3.0});
  const Complex d = 1.0 - (1.0 - u) * z;
  EXPECT_NEAR(std::abs(st_apply(p, t, z) - u / d * p.evaluate(u * z / d)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(semigroup_image(p, t).value(z) - st_apply(p, t, z)), 0.0, 1e-15);
}

TEST(SemigroupKernel, GeneratorIntegralIsCesaro) {
  // int_0^T S_t f dt -> C f; check the tail with a finite cutoff.
  const PowerSeries p({0.5, -1.0, 2.0});
  const Complex z(0.4, 0.3);
  const auto r = integrate_finite([&](double t) { return st_apply(p, t, z); }, 0.0, 40.0);
  EXPECT_NEAR(std::abs(r.value - cesaro_image(p).value(z)), 0.0, 1e-9);
}

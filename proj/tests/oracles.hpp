#pragma once

// Reference computations for the tests, written directly from the defining
// formulas and sharing no code with the library.

#include <cmath>
#include <complex>
#include <algorithm>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Taylor coefficients of (1 - z^2)^{-alpha}: binom(alpha + k - 1, k) at z^{2k}.
inline std::vector<double> korenblum_coeffs(double alpha, std::size_t degree) {
  std::vector<double> c(degree + 1, 0.0);
  double b = 1.0;
  for (std::size_t k = 0; 2 * k <= degree; ++k) {
    c[2 * k] = b;
    b *= (alpha + static_cast<double>(k)) / static_cast<double>(k + 1);
  }
  return c;
}

inline Complex horner(const std::vector<double>& c, Complex z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Coefficients extended with zeros to the given degree.
inline std::vector<Complex> padded(std::vector<Complex> c, std::size_t degree) {
  c.resize(std::max(c.size(), degree + 1));
  return c;
}

/// Cesaro means of a coefficient list, by the definition.
template <class T>
std::vector<T> cesaro_means(const std::vector<T>& a) {
  std::vector<T> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    T s{};
    for (std::size_t k = 0; k <= n; ++k) s += a[k];
    out[n] = s / static_cast<double>(n + 1);
  }
  return out;
}

/// k-th derivative at z by the Cauchy integral on a circle of radius rho,
/// trapezoid rule with m nodes.
inline Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z, int k,
                                 double rho, int m = 256) {
  Complex acc{};
  for (int j = 0; j < m; ++j) {
    const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
    acc += f(z + rho * e) / std::pow(rho * e, k);
  }
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return acc * fact / static_cast<double>(m);
}

/// Direct formula for (1 - z^2)^{-alpha} / log(2 e^{1/alpha} / (1 - z^2)).
inline Complex log_korenblum(double alpha, Complex z) {
  const Complex s = 1.0 - z * z;
  return std::pow(s, -alpha) / (1.0 / alpha + std::numbers::ln2 - std::log(s));
}

/// Random complex coefficients, N(0,1) parts.
inline std::vector<Complex> random_coeffs(std::mt19937_64& rng, std::size_t degree) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = Complex(n(rng), n(rng));
  return c;
}

/// Composite Simpson rule with n (even) intervals.
template <class F>
auto simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  auto s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * (h / 3.0);
}

}  // namespace oracle

#pragma once

// The Cesaro operator C(f)(z) = sum_n (1/(n+1) sum_{k<=n} a_k) z^n in its
// coefficient, finite-integral and semigroup forms.

#include "cesaro/functions.hpp"
#include "cesaro/numerics.hpp"

namespace cesaro {

/// The weighted composition semigroup S_t f = w_t * (f o phi_t) with
///   w_t(z)   = e^{-t} / (1 - (1 - e^{-t}) z)
///   phi_t(z) = e^{-t} z / (1 - (1 - e^{-t}) z).
class SemigroupKernel {
 public:
  /// t >= 0; DomainError otherwise.
  explicit SemigroupKernel(double t);

  double t() const { return t_; }
  Complex weight(Complex z) const;
  Complex map(Complex z) const;
  /// 1 - map(z), computed as (1 - z) / (1 - (1 - e^{-t}) z).
  Complex map_complement(Complex z) const;

 private:
  double t_;
  double decay_;  // e^{-t}
};

inline constexpr double kDefaultQuadratureTol = 1e-10;

/// output[n] = (input[0] + ... + input[n]) / (n+1); lower-triangular.
/// For a polynomial of degree d these are only the first d+1 coefficients of
/// C(p): every later one is p(1)/(n+1).
PowerSeries cesaro_coeff(const PowerSeries& ps);

/// sum_{n > d} z^n / (n+1) and its derivative, the part of C(p) beyond the
/// degree of p divided by p(1).
Complex cesaro_tail(std::size_t d, Complex z);
Complex cesaro_tail_derivative(std::size_t d, Complex z);

/// C(f)(z) = int_0^1 f(tz) / (1 - tz) dt.
Complex cesaro_integral(const AnalyticFunction& f, Complex z, double tol = kDefaultQuadratureTol);

/// C(f)(z) = int_0^inf S_t f(z) dt, evaluated with u = e^{-t}.
Complex cesaro_semigroup(const AnalyticFunction& f, Complex z, double tol = kDefaultQuadratureTol);

/// S_t f(z) = w_t(z) f(phi_t(z)).
Complex st_apply(const AnalyticFunction& f, double t, Complex z);

/// C(f)'(z) from differentiating the semigroup form under the integral:
///   int_0^inf e^{-t}(1-e^{-t}) / D^2 f(phi_t) + e^{-2t} / D^3 f'(phi_t) dt,
/// D = 1 - (1 - e^{-t}) z.
Complex cesaro_derivative(const AnalyticFunction& f, Complex z, double tol = kDefaultQuadratureTol);

/// C(f) as a DiskFunction: for a polynomial, cesaro_coeff plus p(1) times
/// cesaro_tail; semigroup quadrature otherwise.
DiskFunction cesaro_image(const AnalyticFunction& f, double tol = kDefaultQuadratureTol);

/// S_t f as a DiskFunction (value only), for norm computations.
DiskFunction semigroup_image(const AnalyticFunction& f, double t);

}  // namespace cesaro

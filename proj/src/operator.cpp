#include "cesaro/operator.hpp"

#include <cmath>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {
namespace {

void check_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << what << ": point " << z << " is not inside the unit disk";
    throw DomainError(os.str());
  }
}

QuadratureOptions quad_options(double tol) {
  QuadratureOptions q;
  q.abs_tol = tol;
  // Images grow like (1-|z|)^{-alpha}; near the boundary only a relative
  // target is attainable.
  q.rel_tol = tol;
  return q;
}

// 1 - (1 - u) z, written as (1 - z) + u z so it stays accurate when u is
// tiny and z is close to 1.
Complex kernel_denominator(double u, Complex z) { return (1.0 - z) + u * z; }

}  // namespace

SemigroupKernel::SemigroupKernel(double t) : t_(t), decay_(std::exp(-t)) {
  if (!(t >= 0.0)) throw DomainError("SemigroupKernel: t must be >= 0");
}

Complex SemigroupKernel::weight(Complex z) const { return decay_ / kernel_denominator(decay_, z); }

Complex SemigroupKernel::map(Complex z) const { return decay_ * z / kernel_denominator(decay_, z); }

Complex SemigroupKernel::map_complement(Complex z) const {
  return (1.0 - z) / kernel_denominator(decay_, z);
}

PowerSeries cesaro_coeff(const PowerSeries& ps) {
  std::vector<Complex> out(ps.degree() + 1);
  Complex prefix{};
  for (std::size_t n = 0; n <= ps.degree(); ++n) {
    prefix += ps[n];
    out[n] = prefix / static_cast<double>(n + 1);
  }
  return PowerSeries(std::move(out));
}

// Below this radius the tail is summed directly; above it, the closed form
// log(1/(1-z))/z minus the partial sum loses nothing in absolute terms.
constexpr double kTailSeriesRadius = 0.5;

Complex cesaro_tail(std::size_t d, Complex z) {
  check_disk(z, "cesaro_tail");
  if (std::abs(z) <= kTailSeriesRadius) {
    Complex term = std::pow(z, static_cast<double>(d + 1));
    Complex sum{};
    for (std::size_t n = d + 1; std::abs(term) > 1e-18 * (1.0 + std::abs(sum)); ++n) {
      sum += term / static_cast<double>(n + 1);
      term *= z;
    }
    return sum;
  }
  Complex partial{};
  Complex zn(1.0);
  for (std::size_t n = 0; n <= d; ++n, zn *= z) partial += zn / static_cast<double>(n + 1);
  return -std::log(1.0 - z) / z - partial;
}

Complex cesaro_tail_derivative(std::size_t d, Complex z) {
  check_disk(z, "cesaro_tail_derivative");
  if (std::abs(z) <= kTailSeriesRadius) {
    Complex term = std::pow(z, static_cast<double>(d));  // z^{n-1} at n = d+1
    Complex sum{};
    for (std::size_t n = d + 1; std::abs(term) > 1e-18 * (1.0 + std::abs(sum)); ++n) {
      sum += term * (static_cast<double>(n) / static_cast<double>(n + 1));
      term *= z;
    }
    return sum;
  }
  Complex partial{};
  Complex zn(1.0);  // z^{n-1}
  for (std::size_t n = 1; n <= d; ++n, zn *= z) partial += zn * (static_cast<double>(n) / static_cast<double>(n + 1));
  return 1.0 / (z * (1.0 - z)) + std::log(1.0 - z) / (z * z) - partial;
}

Complex cesaro_integral(const AnalyticFunction& f, Complex z, double tol) {
  check_disk(z, "cesaro_integral");
  auto integrand = [&](double t) { return evaluate(f, t * z) / (1.0 - t * z); };
  return integrate_finite(integrand, 0.0, 1.0, quad_options(tol)).value;
}

// With u = e^{-t}, S_t f(z) dt = f(phi) / (1 - (1-u) z) du.
Complex cesaro_semigroup(const AnalyticFunction& f, Complex z, double tol) {
  check_disk(z, "cesaro_semigroup");
  auto integrand = [&](double u) {
    const Complex d = kernel_denominator(u, z);
    return evaluate(f, u * z / d, (1.0 - z) / d) / d;
  };
  return integrate_finite(integrand, 0.0, 1.0, quad_options(tol)).value;
}

Complex st_apply(const AnalyticFunction& f, double t, Complex z) {
  check_disk(z, "st_apply");
  const SemigroupKernel k(t);
  return k.weight(z) * evaluate(f, k.map(z), k.map_complement(z));
}

// Divided by u from dt = du/u:  (1-u)/D^2 f(phi) + u/D^3 f'(phi).
Complex cesaro_derivative(const AnalyticFunction& f, Complex z, double tol) {
  check_disk(z, "cesaro_derivative");
  const AnalyticFunction df = derivative(f);
  auto integrand = [&](double u) {
    const Complex d = kernel_denominator(u, z);
    const Complex phi = u * z / d;
    const Complex w = (1.0 - z) / d;  // 1 - phi, exactly
    const Complex d2 = d * d;
    return (1.0 - u) / d2 * evaluate(f, phi, w) + u / (d2 * d) * evaluate(df, phi, w);
  };
  return integrate_finite(integrand, 0.0, 1.0, quad_options(tol)).value;
}

DiskFunction cesaro_image(const AnalyticFunction& f, double tol) {
  if (f.holds<PowerSeries>()) {
    const PowerSeries image = cesaro_coeff(f.as<PowerSeries>());
    const PowerSeries dimage = image.derivative();
    const std::size_t d = image.degree();
    const Complex total = image[d] * static_cast<double>(d + 1);  // p(1)
    if (total == Complex{})
      return DiskFunction{[image](Complex z) { return image.evaluate(z); },
                          [dimage](Complex z) { return dimage.evaluate(z); }};
    return DiskFunction{[image, d, total](Complex z) { return image.evaluate(z) + total * cesaro_tail(d, z); },
                        [dimage, d, total](Complex z) {
                          return dimage.evaluate(z) + total * cesaro_tail_derivative(d, z);
                        }};
  }
  return DiskFunction{[f, tol](Complex z) { return cesaro_semigroup(f, z, tol); },
                      [f, tol](Complex z) { return cesaro_derivative(f, z, tol); }};
}

DiskFunction semigroup_image(const AnalyticFunction& f, double t) {
  const SemigroupKernel k(t);
  return DiskFunction{[f, k](Complex z) { return k.weight(z) * evaluate(f, k.map(z), k.map_complement(z)); }, {}};
}

}  // namespace cesaro

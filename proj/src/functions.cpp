#include "cesaro/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cesaro/errors.hpp"
#include "cesaro/taylor_jet.hpp"

namespace cesaro {
namespace {

void check_alpha(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream os;
    os << what << ": alpha must lie in (0,1), got " << alpha;
    throw DomainError(os.str());
  }
}

void check_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << "point " << z << " is not inside the unit disk";
    throw DomainError(os.str());
  }
}

// log(2 e^{1/alpha}) = 1/alpha + log 2
double log_weight_constant(double alpha) { return 1.0 / alpha + std::numbers::ln2; }

// Both families are g(1 - z^2); writing 1 - z^2 = (1 - z)(1 + z) with 1 - z
// supplied by the caller keeps the factor accurate as z approaches 1.
Complex one_minus_square(Complex z, Complex w) { return w * (Complex(1.0) + z); }

TaylorJet one_minus_square_jet(Complex z, Complex w, unsigned order) {
  TaylorJet c = Complex(1.0) - TaylorJet::variable(z, order);
  c[0] = w;
  return c * (Complex(1.0) + TaylorJet::variable(z, order));
}

Complex korenblum_value(double alpha, Complex z, Complex w) {
  return std::exp(-alpha * std::log(one_minus_square(z, w)));
}

Complex log_korenblum_value(double alpha, Complex z, Complex w) {
  const Complex ls = std::log(one_minus_square(z, w));
  return std::exp(-alpha * ls) / (log_weight_constant(alpha) - ls);
}

Complex korenblum_derivative(double alpha, unsigned order, Complex z, Complex w) {
  const TaylorJet ls = log(one_minus_square_jet(z, w, order));
  return exp(ls * Complex(-alpha)).derivative(order);
}

Complex log_korenblum_derivative(double alpha, unsigned order, Complex z, Complex w) {
  const TaylorJet ls = log(one_minus_square_jet(z, w, order));
  const TaylorJet num = exp(ls * Complex(-alpha));
  const TaylorJet den = Complex(log_weight_constant(alpha)) - ls;
  return (num / den).derivative(order);
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("power series coefficients must be finite");
  }
}

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries PowerSeries::derivative() const {
  if (coeffs_.size() == 1) return PowerSeries{};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
  return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::truncated(std::size_t n) const {
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = (*this)[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(Complex s, const PowerSeries& p) {
  std::vector<Complex> c(p.coeffs_);
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

KorenblumExtremal::KorenblumExtremal(double alpha, unsigned order) : alpha_(alpha), order_(order) {
  check_alpha(alpha, "KorenblumExtremal");
}

LogKorenblumExtremal::LogKorenblumExtremal(double alpha, unsigned order)
    : alpha_(alpha), order_(order) {
  check_alpha(alpha, "LogKorenblumExtremal");
}

std::string AnalyticFunction::describe() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          os << "poly(degree=" << f.degree() << ")";
        } else if constexpr (std::is_same_v<T, KorenblumExtremal>) {
          os << "korenblum_extremal(alpha=" << f.alpha() << ", order=" << f.order() << ")";
        } else if constexpr (std::is_same_v<T, LogKorenblumExtremal>) {
          os << "log_korenblum_extremal(alpha=" << f.alpha() << ", order=" << f.order() << ")";
        } else {
          os << "constant(" << f.value << ")";
        }
      },
      v_);
  return os.str();
}

Complex evaluate(const AnalyticFunction& f, Complex z) { return evaluate(f, z, Complex(1.0) - z); }

Complex evaluate(const AnalyticFunction& f, Complex z, Complex one_minus_z) {
  check_disk(z);
  const Complex w = one_minus_z;
  return std::visit(
      [z, w](const auto& g) -> Complex {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          return g.evaluate(z);
        } else if constexpr (std::is_same_v<T, KorenblumExtremal>) {
          return g.order() == 0 ? korenblum_value(g.alpha(), z, w)
                                : korenblum_derivative(g.alpha(), g.order(), z, w);
        } else if constexpr (std::is_same_v<T, LogKorenblumExtremal>) {
          return g.order() == 0 ? log_korenblum_value(g.alpha(), z, w)
                                : log_korenblum_derivative(g.alpha(), g.order(), z, w);
        } else {
          return g.value;
        }
      },
      f.variant());
}

AnalyticFunction derivative(const AnalyticFunction& f) {
  return std::visit(
      [](const auto& g) -> AnalyticFunction {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          return g.derivative();
        } else if constexpr (std::is_same_v<T, Constant>) {
          return Constant{Complex{}};
        } else {
          return T(g.alpha(), g.order() + 1);
        }
      },
      f.variant());
}

PowerSeries taylor_coefficients(const std::function<Complex(Complex)>& f, std::size_t n,
                                const TaylorOptions& opts) {
  if (!(opts.radius > 0.0 && opts.radius < 1.0))
    throw DomainError("taylor_coefficients: radius must lie in (0,1)");

  // Scaled coefficients s_k = c_k radius^k from M equispaced samples.
  auto scaled = [&](std::size_t m, double& fmax) {
    std::vector<Complex> samples(m);
    fmax = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
      samples[j] = f(std::polar(opts.radius, theta));
      fmax = std::max(fmax, std::abs(samples[j]));
    }
    std::vector<Complex> twiddle(m);
    for (std::size_t j = 0; j < m; ++j)
      twiddle[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    std::vector<Complex> s(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Complex acc{};
      for (std::size_t j = 0; j < m; ++j) acc += samples[j] * twiddle[(j * k) % m];
      s[k] = acc / static_cast<double>(m);
    }
    return s;
  };

  std::size_t m = 16;
  while (m < 4 * (n + 1)) m *= 2;
  double fmax = 0.0;
  auto prev = scaled(m, fmax);
  while (2 * m <= opts.max_points) {
    m *= 2;
    auto next = scaled(m, fmax);
    double change = 0.0;
    for (std::size_t k = 0; k <= n; ++k) change = std::max(change, std::abs(next[k] - prev[k]));
    prev = std::move(next);
    if (change <= opts.coeff_tol * std::max(1.0, fmax)) {
      std::vector<Complex> c(n + 1);
      double scale = 1.0;
      for (std::size_t k = 0; k <= n; ++k) {
        c[k] = prev[k] / scale;
        scale *= opts.radius;
      }
      return PowerSeries(std::move(c));
    }
  }
  throw ConvergenceError("taylor_coefficients: point doubling did not stabilise");
}

PowerSeries taylor_truncate(const AnalyticFunction& f, std::size_t n, const TaylorOptions& opts) {
  if (f.holds<PowerSeries>()) return f.as<PowerSeries>().truncated(n);
  if (f.holds<Constant>()) {
    std::vector<Complex> c(n + 1);
    c[0] = f.as<Constant>().value;
    return PowerSeries(std::move(c));
  }
  return taylor_coefficients([&f](Complex z) { return evaluate(f, z); }, n, opts);
}

DiskFunction as_disk_function(const AnalyticFunction& f) {
  AnalyticFunction df = derivative(f);
  return DiskFunction{[f](Complex z) { return evaluate(f, z); },
                      [df](Complex z) { return evaluate(df, z); }};
}

}  // namespace cesaro

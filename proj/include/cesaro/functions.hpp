#pragma once

// Analytic functions on the unit disk: truncated power series and the
// closed-form extremal families used to witness operator norms.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cesaro {

using Complex = std::complex<double>;

/// Finite Taylor expansion at 0; coeffs()[n] multiplies z^n.
class PowerSeries {
 public:
  PowerSeries() : coeffs_{Complex{}} {}
  explicit PowerSeries(std::vector<Complex> coeffs);
  PowerSeries(std::initializer_list<Complex> coeffs)
      : PowerSeries(std::vector<Complex>(coeffs)) {}

  std::span<const Complex> coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  /// Zero beyond the stored degree.
  Complex operator[](std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Complex{};
  }

  /// Horner evaluation; exact at z = 0.
  Complex evaluate(Complex z) const;
  /// Term-by-term derivative, degree max(d-1, 0).
  PowerSeries derivative() const;
  /// First n+1 coefficients, zero-padded if needed.
  PowerSeries truncated(std::size_t n) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(Complex s, const PowerSeries& p);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// f(z) = (1 - z^2)^{-alpha}, differentiated `order` times.
class KorenblumExtremal {
 public:
  explicit KorenblumExtremal(double alpha, unsigned order = 0);
  double alpha() const { return alpha_; }
  unsigned order() const { return order_; }

 private:
  double alpha_;
  unsigned order_;
};

/// f(z) = 1 / ((1 - z^2)^alpha log(2 e^{1/alpha} / (1 - z^2))), differentiated
/// `order` times.
class LogKorenblumExtremal {
 public:
  explicit LogKorenblumExtremal(double alpha, unsigned order = 0);
  double alpha() const { return alpha_; }
  unsigned order() const { return order_; }

 private:
  double alpha_;
  unsigned order_;
};

struct Constant {
  Complex value;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// Tagged union of the function representations the library works with.
class AnalyticFunction {
 public:
  using Variant = std::variant<PowerSeries, KorenblumExtremal, LogKorenblumExtremal, Constant>;

  AnalyticFunction(PowerSeries p) : v_(std::move(p)) {}
  AnalyticFunction(KorenblumExtremal f) : v_(f) {}
  AnalyticFunction(LogKorenblumExtremal f) : v_(f) {}
  AnalyticFunction(Constant c) : v_(c) {}

  const Variant& variant() const { return v_; }
  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(v_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  std::string describe() const;

 private:
  Variant v_;
};

/// Value of f at z.  Throws DomainError unless |z| < 1.
Complex evaluate(const AnalyticFunction& f, Complex z);
/// Same, with 1 - z supplied separately; closed forms use it in place of the
/// rounded difference, which matters when z is within ~1e-8 of 1.
Complex evaluate(const AnalyticFunction& f, Complex z, Complex one_minus_z);

AnalyticFunction derivative(const AnalyticFunction& f);

struct TaylorOptions {
  double radius = 0.5;
  /// Applied to the scaled coefficients c_n * radius^n, relative to
  /// max(1, sup |f| on the sampling circle).
  double coeff_tol = 1e-12;
  std::size_t max_points = std::size_t{1} << 18;
};

/// First n+1 Taylor coefficients of an arbitrary function analytic on a
/// neighbourhood of |z| <= radius, by the discrete Cauchy integral with
/// point doubling.  Throws ConvergenceError if doubling never stabilises.
PowerSeries taylor_coefficients(const std::function<Complex(Complex)>& f, std::size_t n,
                                const TaylorOptions& opts = {});

/// Exact for PowerSeries and Constant; discrete Cauchy integral otherwise.
PowerSeries taylor_truncate(const AnalyticFunction& f, std::size_t n,
                            const TaylorOptions& opts = {});

/// Degree used by series-based pipelines.
inline constexpr std::size_t kDefaultTruncation = 256;

/// Callable view of a function on the disk, optionally with its derivative.
/// Used for images under operators that have no closed AnalyticFunction form.
struct DiskFunction {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
};

DiskFunction as_disk_function(const AnalyticFunction& f);

}  // namespace cesaro

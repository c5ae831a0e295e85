#pragma once

// Truncated Taylor arithmetic: a TaylorJet holds the coefficients
// c_0..c_K of g(z0 + h) = sum c_k h^k for some function g.  Propagating
// jets through an expression yields every derivative up to order K at z0,
// which is how closed-form functions are differentiated exactly.

#include <complex>
#include <cstddef>
#include <vector>

namespace cesaro {

using Complex = std::complex<double>;

class TaylorJet {
 public:
  /// The constant c as a jet of the given order.
  TaylorJet(Complex c, std::size_t order) : c_(order + 1, Complex{}) { c_[0] = c; }

  /// The independent variable z0 + h.
  static TaylorJet variable(Complex z0, std::size_t order) {
    TaylorJet j(z0, order);
    if (order > 0) j.c_[1] = 1.0;
    return j;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Complex& operator[](std::size_t k) const { return c_[k]; }
  Complex& operator[](std::size_t k) { return c_[k]; }

  /// k-th derivative at the expansion point: k! * c_k.
  Complex derivative(std::size_t k) const {
    Complex v = c_[k];
    for (std::size_t i = 2; i <= k; ++i) v *= static_cast<double>(i);
    return v;
  }

  TaylorJet& operator+=(const TaylorJet& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TaylorJet& operator-=(const TaylorJet& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TaylorJet& operator*=(Complex s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator*(TaylorJet a, Complex s) { return a *= s; }
  friend TaylorJet operator*(Complex s, TaylorJet a) { return a *= s; }
  friend TaylorJet operator+(TaylorJet a, Complex s) {
    a.c_[0] += s;
    return a;
  }
  friend TaylorJet operator+(Complex s, TaylorJet a) { return a + s; }
  friend TaylorJet operator-(Complex s, const TaylorJet& a) {
    TaylorJet r = a * Complex(-1.0);
    r.c_[0] += s;
    return r;
  }

  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet r(Complex{}, a.order());
    for (std::size_t n = 0; n <= a.order(); ++n)
      for (std::size_t i = 0; i <= n; ++i) r.c_[n] += a.c_[i] * b.c_[n - i];
    return r;
  }

  // q = a / b  <=>  q_n = (a_n - sum_{i>=1} b_i q_{n-i}) / b_0
  friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
    TaylorJet q(Complex{}, a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
      Complex acc = a.c_[n];
      for (std::size_t i = 1; i <= n; ++i) acc -= b.c_[i] * q.c_[n - i];
      q.c_[n] = acc / b.c_[0];
    }
    return q;
  }

  // Principal branch; requires a_0 off the negative real axis.
  friend TaylorJet log(const TaylorJet& a) {
    TaylorJet l(std::log(a.c_[0]), a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
      Complex acc = a.c_[n];
      for (std::size_t k = 1; k < n; ++k)
        acc -= (static_cast<double>(k) / static_cast<double>(n)) * l.c_[k] * a.c_[n - k];
      l.c_[n] = acc / a.c_[0];
    }
    return l;
  }

  friend TaylorJet exp(const TaylorJet& a) {
    TaylorJet e(std::exp(a.c_[0]), a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
      Complex acc{};
      for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * a.c_[k] * e.c_[n - k];
      e.c_[n] = acc / static_cast<double>(n);
    }
    return e;
  }

 private:
  std::vector<Complex> c_;
};

}  // namespace cesaro

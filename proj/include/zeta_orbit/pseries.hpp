#pragma once

// Truncated power series over Q in one indeterminate t, and 2x2 matrices of them.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zeta_orbit/exactnum.hpp"

namespace zeta_orbit {

class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// c_0 + c_1 t + ... + c_K t^K, known modulo t^{K+1}.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order = 0) : coeffs_(order + 1, 0) {}

  explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: need at least one coefficient");
  }

  static PowerSeries constant(const Rational& c, std::size_t order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * t^power, truncated.
  static PowerSeries monomial(std::size_t power, const Rational& c, std::size_t order) {
    PowerSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  PowerSeries truncated(std::size_t order) const {
    if (order > this->order()) {
      throw OrderMismatch("PowerSeries::truncated: cannot raise order " + std::to_string(this->order()) +
                          " to " + std::to_string(order));
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Multiplication by t (the top coefficient falls off).
  PowerSeries shifted() const {
    PowerSeries s(order());
    for (std::size_t i = order(); i >= 1; --i) s.coeffs_[i] = coeffs_[i - 1];
    return s;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    const std::size_t k = std::min(order(), o.order());
    coeffs_.resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& o) {
    const std::size_t k = std::min(order(), o.order());
    coeffs_.resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  PowerSeries& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }

  friend PowerSeries operator-(PowerSeries a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t k = std::min(a.order(), b.order());
    PowerSeries out(k);
    Rational prod;
    for (std::size_t i = 0; i <= k; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= k; ++j) {
        if (b.coeffs_[j] == 0) continue;
        mpq_mul(prod.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
        out.coeffs_[i + j] += prod;
      }
    }
    return out;
  }

  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  /// Equality of series known to the same order; comparing different orders is rejected.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) {
      throw OrderMismatch("PowerSeries: comparing orders " + std::to_string(a.order()) + " and " +
                          std::to_string(b.order()));
    }
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

inline PowerSeries pow(const PowerSeries& s, unsigned n) {
  PowerSeries result = PowerSeries::constant(1, s.order());
  for (unsigned i = 0; i < n; ++i) result *= s;
  return result;
}

/// Multiplicative inverse; the constant term must be nonzero.
inline PowerSeries inverse(const PowerSeries& a) {
  if (a[0] == 0) throw std::domain_error("PowerSeries inverse: constant term is zero");
  const std::size_t k = a.order();
  PowerSeries out(k);
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= k; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (a[i] != 0) acc += a[i] * out[n - i];
    }
    out[n] = -acc * inv0;
  }
  return out;
}

/// s with s^2 (1 + u) = 1 and s(0) = 1, by the Newton step s <- s (3 - s^2 (1+u)) / 2.
inline PowerSeries inv_sqrt_oneplus(const PowerSeries& u) {
  if (u[0] != 0) throw std::domain_error("inv_sqrt_oneplus: constant term of u must be 0");
  const std::size_t k = u.order();
  PowerSeries one_plus_u = u;
  one_plus_u[0] += 1;
  PowerSeries s = PowerSeries::constant(1, 0);
  std::size_t prec = 1;  // s is correct modulo t^prec
  while (prec <= k) {
    prec = std::min(2 * prec, k + 1);
    const std::size_t ord = prec - 1;
    PowerSeries sp = PowerSeries::constant(0, ord);
    for (std::size_t i = 0; i <= std::min(ord, s.order()); ++i) sp[i] = s[i];
    PowerSeries residual = sp * sp * one_plus_u.truncated(ord);
    PowerSeries three = PowerSeries::constant(3, ord);
    s = sp * (three - residual) * Rational(1, 2);
  }
  if (s.order() < k) {
    PowerSeries padded(k);
    for (std::size_t i = 0; i <= s.order(); ++i) padded[i] = s[i];
    s = padded;
  }
  return s;
}

/// g(t) with 1 + g(t) = sum b_k t^k, so g^2 + g = t.
inline PowerSeries series_g(std::size_t order) {
  const auto b = signed_catalan_table(static_cast<unsigned>(order));
  PowerSeries g(order);
  for (std::size_t k = 1; k <= order; ++k) g[k] = b[k];
  return g;
}

/// h_n by h_0 = 1, h_1 = t, h_n = t h_{n-1} + t h_{n-2}.
inline PowerSeries series_h(unsigned n, std::size_t order) {
  PowerSeries prev = PowerSeries::constant(1, order);
  if (n == 0) return prev;
  PowerSeries cur = PowerSeries::monomial(1, 1, order);
  for (unsigned i = 2; i <= n; ++i) {
    PowerSeries next = (cur + prev).shifted();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// h_n = sum_{r=0}^{floor(n/2)} C(n-r, r) t^{n-r}.
inline PowerSeries series_h_closed_form(unsigned n, std::size_t order) {
  PowerSeries h(order);
  for (unsigned r = 0; 2 * r <= n; ++r) {
    const std::size_t power = n - r;
    if (power <= order) h[power] = Rational(binomial(n - r, r));
  }
  return h;
}

/// 2x2 matrix over Q[[t]]; all four entries share one truncation order.
class GammaMatrix {
 public:
  GammaMatrix(PowerSeries a11, PowerSeries a12, PowerSeries a21, PowerSeries a22)
      : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
    const std::size_t k = e_[0].order();
    for (const auto& s : e_) {
      if (s.order() != k) throw OrderMismatch("GammaMatrix: entries must share one order");
    }
  }

  static GammaMatrix identity(std::size_t order) {
    return {PowerSeries::constant(1, order), PowerSeries(order), PowerSeries(order),
            PowerSeries::constant(1, order)};
  }

  /// Constant 2x2 integer matrix.
  static GammaMatrix constant(long a11, long a12, long a21, long a22, std::size_t order) {
    return {PowerSeries::constant(a11, order), PowerSeries::constant(a12, order),
            PowerSeries::constant(a21, order), PowerSeries::constant(a22, order)};
  }

  std::size_t order() const { return e_[0].order(); }

  /// Entry (r, c), zero-based.
  const PowerSeries& operator()(int r, int c) const { return e_.at(static_cast<std::size_t>(2 * r + c)); }

  PowerSeries determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  GammaMatrix inverse() const {
    const PowerSeries inv_det = zeta_orbit::inverse(determinant());
    return {e_[3] * inv_det, -e_[1] * inv_det, -e_[2] * inv_det, e_[0] * inv_det};
  }

  GammaMatrix truncated(std::size_t order) const {
    return {e_[0].truncated(order), e_[1].truncated(order), e_[2].truncated(order), e_[3].truncated(order)};
  }

  friend GammaMatrix operator*(const GammaMatrix& a, const GammaMatrix& b) {
    return {a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
            a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]};
  }

  friend GammaMatrix operator+(const GammaMatrix& a, const GammaMatrix& b) {
    return {a.e_[0] + b.e_[0], a.e_[1] + b.e_[1], a.e_[2] + b.e_[2], a.e_[3] + b.e_[3]};
  }

  friend GammaMatrix operator-(const GammaMatrix& a, const GammaMatrix& b) {
    return {a.e_[0] - b.e_[0], a.e_[1] - b.e_[1], a.e_[2] - b.e_[2], a.e_[3] - b.e_[3]};
  }

  friend GammaMatrix operator-(const GammaMatrix& a) { return {-a.e_[0], -a.e_[1], -a.e_[2], -a.e_[3]}; }

  friend bool operator==(const GammaMatrix& a, const GammaMatrix& b) { return a.e_ == b.e_; }

  bool is_zero() const {
    for (const auto& s : e_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

 private:
  std::array<PowerSeries, 4> e_;
};

inline GammaMatrix pow(const GammaMatrix& m, unsigned n) {
  GammaMatrix r = GammaMatrix::identity(m.order());
  for (unsigned i = 0; i < n; ++i) r = r * m;
  return r;
}

struct GammaGenerators {
  GammaMatrix s;  // gamma(S~)
  GammaMatrix j;  // gamma(J~)
  GammaMatrix r;  // gamma(R~) = -gamma(S~) gamma(J~)
};

inline GammaGenerators gamma_generators(std::size_t order) {
  const PowerSeries g = series_g(order);
  const PowerSeries one = PowerSeries::constant(1, order);
  const PowerSeries t = PowerSeries::monomial(1, 1, order);
  return {GammaMatrix::constant(0, -1, 1, 0, order), GammaMatrix(one, one + g, g, one + t),
          GammaMatrix(g, one + t, -one, -(one + g))};
}

/// W(t) = (t^2 + 4t + 1)^{-1/2} [[-t, 2g+1], [2g+1, t]].
inline GammaMatrix gamma_W(std::size_t order) {
  const PowerSeries g = series_g(order);
  const PowerSeries t = PowerSeries::monomial(1, 1, order);
  PowerSeries u = PowerSeries::monomial(2, 1, order) + PowerSeries::monomial(1, 4, order);
  const PowerSeries scale = inv_sqrt_oneplus(u);
  const PowerSeries off = g * Rational(2) + PowerSeries::constant(1, order);
  return {-(t * scale), off * scale, off * scale, t * scale};
}

}  // namespace zeta_orbit

#pragma once

// Sparse integer polynomials in a few named variables, enough for a 4x4
// Sylvester resultant and for expanding small identities exactly.

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/scalar.hpp"

namespace zeta_orbit {

/// Polynomial in variables v_0..v_{V-1} with integer coefficients.
template <std::size_t V>
class Poly {
 public:
  using Exponent = std::array<int, V>;

  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponent{}] = c;
  }
  Poly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[Exponent{}] = c;
  }

  static Poly var(std::size_t i, int power = 1) {
    Poly p;
    Exponent e{};
    e.at(i) = power;
    p.terms_[e] = 1;
    return p;
  }

  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < V; ++i) e[i] = ea[i] + eb[i];
        out.accumulate(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Exact value at a rational point.
  Rational evaluate(const std::array<Rational, V>& at) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < V; ++i) {
        for (int k = 0; k < e[i]; ++k) term *= at[i];
      }
      sum += term;
    }
    return sum;
  }

  std::complex<double> evaluate(const std::array<std::complex<double>, V>& at) const {
    std::complex<double> sum = 0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> term = c.get_d();
      for (std::size_t i = 0; i < V; ++i) term *= std::pow(at[i], e[i]);
      sum += term;
    }
    return sum;
  }

  /// Substitutes polynomials for every variable.
  template <std::size_t W>
  Poly<W> substitute(const std::array<Poly<W>, V>& values) const {
    Poly<W> out;
    for (const auto& [e, c] : terms_) {
      Poly<W> term(c);
      for (std::size_t i = 0; i < V; ++i) {
        for (int k = 0; k < e[i]; ++k) term = term * values[i];
      }
      out += term;
    }
    return out;
  }

  std::string to_string(const std::array<const char*, V>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < V; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const bool neg = c < 0;
      const Integer mag = abs(c);
      std::string coeff = (mag == 1 && !mono.empty()) ? "" : mag.get_str();
      if (!coeff.empty() && !mono.empty()) coeff += "*";
      if (s.empty()) {
        s = (neg ? "-" : "") + coeff + mono;
      } else {
        s += (neg ? " - " : " + ") + coeff + mono;
      }
    }
    return s;
  }

 private:
  void accumulate(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Exponent, Integer> terms_;
};

/// Polynomial in one variable with coefficients in Poly<V>, lowest degree first.
template <std::size_t V>
using CoeffList = std::vector<Poly<V>>;

/// Determinant by cofactor expansion along the first row; fine for n <= 5.
template <std::size_t V>
Poly<V> determinant(const std::vector<std::vector<Poly<V>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<V>(1);
  if (n == 1) return m[0][0];
  Poly<V> det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly<V>>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly<V>> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Poly<V> term = m[0][c] * determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

/// Sylvester resultant of f and g (coefficient lists, lowest degree first).
template <std::size_t V>
Poly<V> resultant(CoeffList<V> f, CoeffList<V> g) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  if (f.empty() || g.empty()) return Poly<V>();
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return Poly<V>(1);
  std::vector<std::vector<Poly<V>>> syl(size, std::vector<Poly<V>>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) syl[r][r + k] = f[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = g[n - k];
  }
  return determinant(syl);
}

/// Number p + q w with w^2 = d, for a fixed negative or non-square integer d.
struct QuadraticNumber {
  Rational p;
  Rational q;
  long d;

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.p + b.p, a.q + b.q, a.d};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (a.d != b.d) throw std::invalid_argument("QuadraticNumber: different fields");
    return {a.p * b.p + Rational(a.d) * a.q * b.q, a.p * b.q + a.q * b.p, a.d};
  }
  friend QuadraticNumber operator*(const Rational& c, const QuadraticNumber& a) { return {c * a.p, c * a.q, a.d}; }
  QuadraticNumber conjugate() const { return {p, -q, d}; }
  /// N(p + q w) = p^2 - d q^2; equals |.|^2 when d < 0.
  Rational norm() const { return p * p - Rational(d) * q * q; }
  bool is_zero() const { return p == 0 && q == 0; }
};

}  // namespace zeta_orbit

#pragma once

// Formal Dirichlet series sum_{n<=N} a_n n^{-s}, truncated at a fixed length N.
// Truncation is exact: convolution never reads an index above N.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/scalar.hpp"

namespace zeta_orbit {

template <class Scalar>
class DirichletSeries {
 public:
  explicit DirichletSeries(std::size_t length = 1) : c_(length, Scalar(0)) {
    if (length == 0) throw std::invalid_argument("DirichletSeries: length must be positive");
  }

  /// Coefficients a_1..a_N in order.
  explicit DirichletSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("DirichletSeries: length must be positive");
  }

  /// The series with the single term 1^{-s}.
  static DirichletSeries unit(std::size_t length) {
    DirichletSeries s(length);
    s.c_[0] = Scalar(1);
    return s;
  }

  std::size_t length() const { return c_.size(); }

  const Scalar& operator[](std::size_t n) const { return c_.at(n - 1); }
  Scalar& operator[](std::size_t n) { return c_.at(n - 1); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  DirichletSeries& operator+=(const DirichletSeries& o) {
    check_length(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  DirichletSeries& operator-=(const DirichletSeries& o) {
    check_length(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  friend DirichletSeries operator+(DirichletSeries a, const DirichletSeries& b) { return a += b; }
  friend DirichletSeries operator-(DirichletSeries a, const DirichletSeries& b) { return a -= b; }

  friend DirichletSeries operator-(DirichletSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend bool operator==(const DirichletSeries& a, const DirichletSeries& b) { return a.c_ == b.c_; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (!zeta_orbit::is_zero(x)) return false;
    }
    return true;
  }

  /// Smallest n with a_n != 0, or 0 for the zero series.
  std::size_t first_nonzero() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!zeta_orbit::is_zero(c_[i])) return i + 1;
    }
    return 0;
  }

  void check_length(const DirichletSeries& o) const {
    if (o.length() != length()) {
      throw std::invalid_argument("DirichletSeries: length mismatch " + std::to_string(length()) + " vs " +
                                  std::to_string(o.length()));
    }
  }

 private:
  std::vector<Scalar> c_;
};

/// (a*b)_n = sum_{ij=n} a_i b_j.
template <class Scalar>
DirichletSeries<Scalar> dconv(const DirichletSeries<Scalar>& a, const DirichletSeries<Scalar>& b) {
  a.check_length(b);
  const std::size_t n = a.length();
  DirichletSeries<Scalar> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Scalar& ai = a[i];
    if (is_zero(ai)) continue;
    for (std::size_t j = 1; i * j <= n; ++j) {
      if (is_zero(b[j])) continue;
      add_product(out[i * j], ai, b[j]);
    }
  }
  return out;
}

template <class Scalar>
DirichletSeries<Scalar> operator*(const DirichletSeries<Scalar>& a, const DirichletSeries<Scalar>& b) {
  return dconv(a, b);
}

/// Convolution power; negative exponents go through dinv.
template <class Scalar>
DirichletSeries<Scalar> dpow(const DirichletSeries<Scalar>& a, int exponent);

/// Inverse in the convolution ring; a_1 must be a unit of the scalar domain.
template <class Scalar>
DirichletSeries<Scalar> dinv(const DirichletSeries<Scalar>& a) {
  const std::size_t n = a.length();
  const Scalar inv1 = unit_inverse(a[1]);
  DirichletSeries<Scalar> out(n);
  // pending[m] accumulates sum_{d | m, d < m} out_d a_{m/d}
  std::vector<Scalar> pending(n + 1, Scalar(0));
  out[1] = inv1;
  for (std::size_t d = 1; d <= n; ++d) {
    if (d > 1) out[d] = -(pending[d] * inv1);
    if (is_zero(out[d])) continue;
    for (std::size_t k = 2; d * k <= n; ++k) {
      if (is_zero(a[k])) continue;
      add_product(pending[d * k], out[d], a[k]);
    }
  }
  return out;
}

template <class Scalar>
DirichletSeries<Scalar> dpow(const DirichletSeries<Scalar>& a, int exponent) {
  DirichletSeries<Scalar> base = exponent < 0 ? dinv(a) : a;
  DirichletSeries<Scalar> result = DirichletSeries<Scalar>::unit(a.length());
  for (int i = 0; i < std::abs(exponent); ++i) result = dconv(result, base);
  return result;
}

template <class Scalar = Integer>
DirichletSeries<Scalar> zeta_series(std::size_t length) {
  return DirichletSeries<Scalar>(std::vector<Scalar>(length, Scalar(1)));
}

template <class Scalar = Integer>
DirichletSeries<Scalar> zeta_minus_one(std::size_t length) {
  auto s = zeta_series<Scalar>(length);
  s[1] = Scalar(0);
  return s;
}

template <class Scalar = Integer>
DirichletSeries<Scalar> moebius_series(std::size_t length) {
  std::vector<Scalar> c(length);
  for (std::size_t n = 1; n <= length; ++n) c[n - 1] = Scalar(moebius(n));
  return DirichletSeries<Scalar>(std::move(c));
}

/// True iff every prime factor of n lies in omega.
inline bool is_smooth_over(std::uint64_t n, const std::set<std::uint64_t>& omega) {
  for (auto p : omega) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

/// Zeroes a_n unless every prime factor of n belongs to omega.
template <class Scalar>
DirichletSeries<Scalar> restrict_omega(const DirichletSeries<Scalar>& a, const std::set<std::uint64_t>& omega) {
  for (auto p : omega) {
    if (!is_prime(p)) throw std::invalid_argument("restrict_omega: " + std::to_string(p) + " is not prime");
  }
  DirichletSeries<Scalar> out = a;
  for (std::size_t n = 1; n <= a.length(); ++n) {
    if (!is_smooth_over(n, omega)) out[n] = Scalar(0);
  }
  return out;
}

/// Values M(1..N) of the completely multiplicative function with the given prime values.
template <class Scalar>
std::vector<Scalar> completely_multiplicative_values(std::size_t length,
                                                     const std::function<Scalar(std::uint64_t)>& on_primes) {
  PrimeSieve sieve(length);
  std::vector<Scalar> m(length + 1, Scalar(0));
  if (length >= 1) m[1] = Scalar(1);
  for (std::size_t n = 2; n <= length; ++n) {
    const auto p = sieve.smallest_factor(n);
    m[n] = (n == p) ? on_primes(p) : m[p] * m[n / p];
  }
  return m;
}

/// a_n -> a_n M(n) for the completely multiplicative M given on primes.
template <class Scalar>
DirichletSeries<Scalar> twist(const DirichletSeries<Scalar>& a, const std::function<Scalar(std::uint64_t)>& on_primes) {
  const auto m = completely_multiplicative_values<Scalar>(a.length(), on_primes);
  DirichletSeries<Scalar> out = a;
  for (std::size_t n = 1; n <= a.length(); ++n) out[n] = a[n] * m[n];
  return out;
}

/// The nontrivial real character mod 4 on primes.
inline Integer chi4_on_primes(std::uint64_t p) {
  if (p % 2 == 0) return 0;
  return (p % 4 == 1) ? 1 : -1;
}

/// sum_{n<=N} a_n n^{-s} in double precision with Neumaier-compensated summation.
template <class Scalar>
Complex eval_at(const DirichletSeries<Scalar>& a, Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw std::invalid_argument("eval_at: s must be finite");
  }
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
  auto accumulate = [](double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  };
  for (std::size_t n = 1; n <= a.length(); ++n) {
    if (is_zero(a[n])) continue;
    const Complex term = to_complex(a[n]) * std::exp(-s * std::log(static_cast<double>(n)));
    accumulate(re, re_c, term.real());
    accumulate(im, im_c, term.imag());
  }
  return {re + re_c, im + im_c};
}

}  // namespace zeta_orbit

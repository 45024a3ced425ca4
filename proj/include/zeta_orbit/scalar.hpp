#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "zeta_orbit/exactnum.hpp"

namespace zeta_orbit {

using Complex = std::complex<double>;

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Complex to_complex(const Integer& v) { return {v.get_d(), 0.0}; }
inline Complex to_complex(const Rational& v) { return {v.get_d(), 0.0}; }
inline Complex to_complex(double v) { return {v, 0.0}; }
inline Complex to_complex(const Complex& v) { return v; }

inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }

/// Inverse of a unit of the scalar domain; integers admit only +-1.
inline Integer unit_inverse(const Integer& v) {
  if (v != 1 && v != -1) throw std::domain_error("integer " + v.get_str() + " is not a unit");
  return v;
}

inline Rational unit_inverse(const Rational& v) {
  if (is_zero(v)) throw std::domain_error("zero is not a unit");
  return 1 / v;
}

inline Complex unit_inverse(const Complex& v) {
  if (is_zero(v)) throw std::domain_error("zero is not a unit");
  return 1.0 / v;
}

/// acc += a * b.
inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

template <class S>
inline void add_product(S& acc, const S& a, const S& b) {
  acc += a * b;
}

/// Conversion of an exact rational into the scalar domain S; Integer rejects non-integral values.
template <class S>
S from_rational(const Rational& v) {
  if constexpr (std::is_same_v<S, Integer>) {
    if (v.get_den() != 1) throw std::domain_error("non-integral entry " + to_string(v));
    return v.get_num();
  } else if constexpr (std::is_same_v<S, Rational>) {
    return v;
  } else {
    return S(v.get_d());
  }
}

template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, Rational> && std::is_same_v<From, Integer>) {
    return Rational(v);
  } else if constexpr (std::is_same_v<From, Rational>) {
    return from_rational<To>(v);
  } else {
    return To(to_complex(v).real());
  }
}

}  // namespace zeta_orbit

#pragma once

// Constructors for the named infinite matrices, each returned as a complete window.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/pseries.hpp"
#include "zeta_orbit/window.hpp"

namespace zeta_orbit {

namespace detail {

inline void require_positive(index_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": size must be positive");
}

inline index_t floor_log2(index_t n) {
  index_t k = 0;
  while ((index_t{1} << (k + 1)) <= n) ++k;
  return k;
}

/// floor(a / 2) for possibly negative a.
inline long long floor_half(long long a) { return (a >= 0) ? a / 2 : -((-a + 1) / 2); }

}  // namespace detail

template <class Scalar = Integer>
WindowedMatrix<Scalar> identity_matrix(index_t n) {
  return WindowedMatrix<Scalar>::build(n, n, 1, 0, [](index_t j) {
    return typename WindowedMatrix<Scalar>::Column{{j, Scalar(1)}};
  });
}

/// D_{i,j} = [i | j].
inline IntMatrix divisor_matrix(index_t n) {
  detail::require_positive(n, "divisor_matrix");
  return IntMatrix::build(n, n, 1, std::nullopt, [](index_t j) {
    IntMatrix::Column c;
    for (auto d : divisors(static_cast<std::uint64_t>(j))) c.push_back({static_cast<index_t>(d), 1});
    return c;
  });
}

/// Inverse of D: entry mu(j/i) when i | j.
inline IntMatrix moebius_matrix(index_t n) {
  detail::require_positive(n, "moebius_matrix");
  return IntMatrix::build(n, n, 1, std::nullopt, [](index_t j) {
    IntMatrix::Column c;
    for (auto d : divisors(static_cast<std::uint64_t>(j))) {
      const int mu = moebius(static_cast<std::uint64_t>(j) / d);
      if (mu != 0) c.push_back({static_cast<index_t>(d), mu});
    }
    return c;
  });
}

/// J_{i,j} = 1 for j in {i, 2i}.
inline IntMatrix matrix_J(index_t n) {
  detail::require_positive(n, "matrix_J");
  return IntMatrix::build(n, n, 1, std::nullopt, [](index_t j) {
    IntMatrix::Column c{{j, 1}};
    if (j % 2 == 0) c.push_back({j / 2, 1});
    return c;
  });
}

/// The infinite Jordan block: ones at (i, i) and (i, i+1).
inline IntMatrix matrix_Jinf(index_t n) {
  detail::require_positive(n, "matrix_Jinf");
  return IntMatrix::build(n, n, 1, 0, [](index_t j) {
    IntMatrix::Column c{{j, 1}};
    if (j > 1) c.push_back({j - 1, 1});
    return c;
  });
}

/// Diagonal with entries (-1)^{v_2(i)}.
inline IntMatrix matrix_X(index_t n) {
  detail::require_positive(n, "matrix_X");
  return IntMatrix::build(n, n, 1, 0, [](index_t j) {
    const int sign = (two_adic_valuation(static_cast<std::uint64_t>(j)) % 2 == 0) ? 1 : -1;
    return IntMatrix::Column{{j, sign}};
  });
}

/// Z: odd rows are identity rows; row d 2^k (d odd, k >= 1) holds alpha_k(j/d) at columns j with d | j.
inline IntMatrix matrix_Z(const FactorizationTable& table, index_t n) {
  detail::require_positive(n, "matrix_Z");
  if (static_cast<std::uint64_t>(n) > table.max_m()) {
    throw std::invalid_argument("matrix_Z: factorization table covers only " + std::to_string(table.max_m()));
  }
  return IntMatrix::build(n, n, 1, std::nullopt, [&](index_t j) {
    IntMatrix::Column c;
    const auto uj = static_cast<std::uint64_t>(j);
    for (auto d : divisors(uj)) {
      if (d % 2 == 0) continue;
      if (d == uj) c.push_back({j, 1});
      const std::uint64_t q = uj / d;
      for (unsigned k = 1; (std::uint64_t{1} << k) <= q; ++k) {
        const auto& v = table(k, q);
        if (v != 0) c.push_back({static_cast<index_t>(d << k), v});
      }
    }
    return c;
  });
}

inline IntMatrix matrix_Z(index_t n) { return matrix_Z(FactorizationTable(static_cast<std::uint64_t>(n)), n); }

/// Z^{-1} as X Z X: Z with each entry (i,j) multiplied by (-1)^{v_2(i) + v_2(j)}.
inline IntMatrix matrix_Zinv(const FactorizationTable& table, index_t n) {
  const IntMatrix z = matrix_Z(table, n);
  IntMatrix out(n, n, 1);
  for (index_t j = 1; j <= n; ++j) {
    IntMatrix::Column c = z.column(j);
    const unsigned vj = two_adic_valuation(static_cast<std::uint64_t>(j));
    for (auto& e : c) {
      if ((two_adic_valuation(static_cast<std::uint64_t>(e.row)) + vj) % 2 == 1) e.value = -e.value;
    }
    out.set_column(j, std::move(c));
  }
  return out;
}

inline IntMatrix matrix_Zinv(index_t n) { return matrix_Zinv(FactorizationTable(static_cast<std::uint64_t>(n)), n); }

/// Entry p_{l,j} of the transition matrix P with P J~ P^{-1} = J_inf.
///
/// Rows 1 and 2 are the first rows of (J~ - I)^0 and (J~ - I)^1: row 1 is e_1 and
/// row 2 carries b_s at column 2s+2. From row 3 on:
///   p_{l,2s+1} = C(s-1, l-s-2),
///   p_{l,2s+2} = sum_{k=0}^{floor(s+1-l/2)} b_k C(s-k, l+k-s-2).
inline Integer transition_p_entry(const std::vector<Integer>& b, long long l, long long j) {
  if (l == 1) return j == 1 ? 1 : 0;
  if (l == 2) return (j % 2 == 0) ? b.at(static_cast<std::size_t>((j - 2) / 2)) : Integer(0);
  if (j % 2 == 1) {
    const long long s = (j - 1) / 2;
    return binomial(s - 1, l - s - 2);
  }
  const long long s = (j - 2) / 2;
  const long long top = detail::floor_half(2 * s + 2 - l);
  Integer acc = 0;
  for (long long k = 0; k <= top; ++k) {
    const Integer c = binomial(s - k, l + k - s - 2);
    if (c != 0) add_product(acc, b.at(static_cast<std::size_t>(k)), c);
  }
  return acc;
}

/// Entry q_{i,m} of Q = P^{-1}: q_{i,1} = [i=1], q_{i,2} = [i=2], and for m >= 3
///   q_{2s+1,m} = (-1)^{m-1} C(m-s-2, s-1),
///   q_{2s+2,m} = (-1)^m sum_{k=1}^{floor(m/2)-s} b_k C(m-s-k-2, s+k-2).
inline Integer transition_q_entry(const std::vector<Integer>& b, long long i, long long m) {
  if (m == 1) return i == 1 ? 1 : 0;
  if (m == 2) return i == 2 ? 1 : 0;
  Integer value;
  if (i % 2 == 1) {
    const long long s = (i - 1) / 2;
    value = binomial(m - s - 2, s - 1);
    if ((m - 1) % 2 == 1) value = -value;
    return value;
  }
  const long long s = (i - 2) / 2;
  value = 0;
  for (long long k = 1; k <= m / 2 - s; ++k) {
    const Integer c = binomial(m - s - k - 2, s + k - 2);
    if (c != 0) add_product(value, b.at(static_cast<std::size_t>(k)), c);
  }
  if (m % 2 == 1) value = -value;
  return value;
}

inline IntMatrix matrix_P(index_t n) {
  detail::require_positive(n, "matrix_P");
  const auto b = signed_catalan_table(static_cast<unsigned>(n / 2 + 1));
  return IntMatrix::build(n, n, 1, 0, [&](index_t j) {
    IntMatrix::Column c;
    for (index_t l = 1; l <= j; ++l) {
      Integer v = transition_p_entry(b, l, j);
      if (v != 0) c.push_back({l, std::move(v)});
    }
    return c;
  });
}

inline IntMatrix matrix_Q(index_t n) {
  detail::require_positive(n, "matrix_Q");
  const auto b = signed_catalan_table(static_cast<unsigned>(n / 2 + 1));
  return IntMatrix::build(n, n, 1, 0, [&](index_t m) {
    IntMatrix::Column c;
    for (index_t i = 1; i <= m; ++i) {
      Integer v = transition_q_entry(b, i, m);
      if (v != 0) c.push_back({i, std::move(v)});
    }
    return c;
  });
}

/// Block upper-triangular Toeplitz matrix with block (r, r+m) equal to the t^m coefficient of M.
/// The result is banded with band 1 (band 0 when the constant term is upper triangular).
template <class Scalar = Rational>
WindowedMatrix<Scalar> expand_gamma(const GammaMatrix& m, index_t n) {
  detail::require_positive(n, "expand_gamma");
  const index_t needed_order = (n - 1) / 2;
  if (static_cast<index_t>(m.order()) < needed_order) {
    throw InsufficientWindow("expand_gamma: series order " + std::to_string(m.order()) + " below " +
                                 std::to_string(needed_order),
                             n, n);
  }
  const index_t band = (m(1, 0)[0] != 0) ? 1 : 0;
  const index_t growth = band + 1;
  return WindowedMatrix<Scalar>::build(growth * n, n, growth, band, [&](index_t col) {
    typename WindowedMatrix<Scalar>::Column c;
    const index_t cb = (col - 1) / 2;
    const int b = static_cast<int>((col - 1) % 2);
    for (index_t r = 0; r <= cb; ++r) {
      const auto power = static_cast<std::size_t>(cb - r);
      for (int a = 0; a < 2; ++a) {
        const Rational& v = m(a, b)[power];
        if (v != 0) c.push_back({2 * r + a + 1, from_rational<Scalar>(v)});
      }
    }
    return c;
  });
}

/// psi(A): entry A_{k,l} placed at (d 2^{k-1}, d 2^{l-1}) for every odd d.
///
/// A must carry a band certificate b; the result then has growth 2^b. The window of
/// A must reach column floor(log2 n) + 1 and every row that can land in the output.
template <class Scalar>
WindowedMatrix<Scalar> psi_expand(const WindowedMatrix<Scalar>& a, index_t n) {
  detail::require_positive(n, "psi_expand");
  if (!a.band()) throw std::invalid_argument("psi_expand: operand needs a band certificate");
  const index_t band = *a.band();
  const index_t growth = index_t{1} << band;
  const index_t rows = growth * n;
  const index_t need_cols = detail::floor_log2(n) + 1;
  const index_t need_rows = std::min(detail::floor_log2(rows) + 1, need_cols + band);
  if (a.cols() < need_cols || a.rows() < need_rows) {
    throw InsufficientWindow("psi_expand: operand " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                 " too small",
                             need_rows, need_cols);
  }
  return WindowedMatrix<Scalar>::build(rows, n, growth, std::nullopt, [&](index_t j) {
    typename WindowedMatrix<Scalar>::Column c;
    const index_t l = static_cast<index_t>(two_adic_valuation(static_cast<std::uint64_t>(j))) + 1;
    const index_t d = j >> (l - 1);
    for (const auto& e : a.column(l)) {
      const index_t i = d << (e.row - 1);
      if (i <= rows) c.push_back({i, e.value});
    }
    return c;
  });
}

/// The pair B (1 on the diagonal, -1 above) and its inverse B' (2^{j-i-1} above).
inline std::pair<IntMatrix, IntMatrix> counterexample_pair(index_t n) {
  detail::require_positive(n, "counterexample_pair");
  IntMatrix b = IntMatrix::build(n, n, 1, 0, [](index_t j) {
    IntMatrix::Column c;
    for (index_t i = 1; i < j; ++i) c.push_back({i, -1});
    c.push_back({j, 1});
    return c;
  });
  IntMatrix bp = IntMatrix::build(n, n, 1, 0, [](index_t j) {
    IntMatrix::Column c;
    for (index_t i = 1; i < j; ++i) {
      Integer v;
      mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(j - i - 1));
      c.push_back({i, v});
    }
    c.push_back({j, 1});
    return c;
  });
  return {std::move(b), std::move(bp)};
}

}  // namespace zeta_orbit

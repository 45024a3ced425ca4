#pragma once

// Independent reference computations. Nothing here calls the library's own
// algorithms for the quantity being checked.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = mpz_class;

/// counts[k] = number of ordered k-tuples of integers > 1 with product m, found by
/// walking every factorization; divisors come from trial division up to sqrt.
inline void walk_factorizations(std::uint64_t m, unsigned depth, std::vector<Int>& counts) {
  if (m == 1) {
    if (counts.size() <= depth) counts.resize(depth + 1, 0);
    counts[depth] += 1;
    return;
  }
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    walk_factorizations(m / d, depth + 1, counts);
    if (d * d != m) walk_factorizations(d, depth + 1, counts);
  }
  walk_factorizations(1, depth + 1, counts);  // the first factor is m itself
}

inline std::vector<Int> ordered_factorization_counts(std::uint64_t m) {
  std::vector<Int> counts(1, 0);
  if (m == 1) {
    counts[0] = 1;
    return counts;
  }
  walk_factorizations(m, 0, counts);
  return counts;
}

inline Int ordered_factorizations(unsigned k, std::uint64_t m) {
  const auto c = ordered_factorization_counts(m);
  return k < c.size() ? c[k] : Int(0);
}

/// Prime factors of n with multiplicity, by trial division.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int mobius(std::uint64_t n) {
  const auto f = prime_factors(n);
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f[i] == f[i - 1]) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

/// Catalan(n) = prod_{k=2}^{n} (n+k)/k.
inline Int catalan(unsigned n) {
  mpq_class c = 1;
  for (unsigned k = 2; k <= n; ++k) c *= mpq_class(n + k, k);
  c.canonicalize();
  return c.get_num();
}

inline Int binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// b_k = (-1)^{k-1} Catalan(k-1), b_0 = 1.
inline Int signed_catalan(unsigned k) {
  if (k == 0) return 1;
  Int c = catalan(k - 1);
  return k % 2 == 0 ? Int(-c) : c;
}

/// Quadratic-time Dirichlet convolution over all pairs.
inline std::vector<Int> dirichlet_product(const std::vector<Int>& a, const std::vector<Int>& b) {
  const std::size_t n = a.size() - 1;  // index 0 unused
  std::vector<Int> c(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i * j <= n) c[i * j] += a[i] * b[j];
    }
  }
  return c;
}

using Dense = std::vector<std::vector<Int>>;  // 1-based, [row][col]

inline Dense dense(std::size_t rows, std::size_t cols) { return Dense(rows + 1, std::vector<Int>(cols + 1, 0)); }

/// Plain triple loop over an inner dimension.
inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t rows = a.size() - 1, inner = b.size() - 1, cols = b[0].size() - 1;
  Dense c = dense(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t k = 1; k <= inner && k < a[i].size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 1; j <= cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

/// Truncated integer power series helpers for the P-row oracle.
using Series = std::vector<Int>;

inline Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// Row l of P is the first row of (J~ - I)^{l-1}. In the 2x2 picture that row is a
/// pair (u, v) of series, and multiplying by gamma(J~ - I) = [[0, 1+g], [g, t]]
/// sends (u, v) to (v g, u (1+g) + v t). Entry (l, 2c+1) is [t^c] u and (l, 2c+2) is [t^c] v.
inline Dense transition_rows(std::size_t n) {
  const std::size_t order = n / 2 + 2;
  Series g(order + 1, 0), one_g(order + 1, 0), t(order + 1, 0);
  for (std::size_t k = 1; k <= order; ++k) g[k] = signed_catalan(static_cast<unsigned>(k));
  one_g = g;
  one_g[0] += 1;
  t[1] = 1;
  Dense p = dense(n, n);
  Series u(order + 1, 0), v(order + 1, 0);
  u[0] = 1;
  for (std::size_t l = 1; l <= n; ++l) {
    for (std::size_t c = 0; 2 * c + 1 <= n; ++c) {
      p[l][2 * c + 1] = u[c];
      if (2 * c + 2 <= n) p[l][2 * c + 2] = v[c];
    }
    Series nu = series_mul(v, g);
    Series nv = series_mul(u, one_g);
    const Series vt = series_mul(v, t);
    for (std::size_t k = 0; k <= order; ++k) nv[k] += vt[k];
    u = std::move(nu);
    v = std::move(nv);
  }
  return p;
}

/// The auxiliary matrix A with Q = A J_inf:
///   a_{i,1} = [i=1], a_{1,2} = -1, a_{2,2} = 1, a_{i,2} = 0 for i >= 3, and for m >= 3
///   a_{2s+1,m} = (-1)^{m-1} C(m-s-1, s),
///   a_{2s+2,m} = (-1)^m sum_{k=1}^{floor(m/2)-s} b_k C(m-s-k-1, s+k-1).
inline Dense matrix_A(std::size_t n) {
  std::vector<Int> b(n / 2 + 2);
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = signed_catalan(static_cast<unsigned>(k));
  Dense a = dense(n, n);
  a[1][1] = 1;
  if (n >= 2) {
    a[1][2] = -1;
    a[2][2] = 1;
  }
  for (std::size_t m = 3; m <= n; ++m) {
    const auto mm = static_cast<long long>(m);
    for (std::size_t i = 1; i <= n; ++i) {
      Int v = 0;
      if (i % 2 == 1) {
        const long long s = static_cast<long long>((i - 1) / 2);
        v = binom(mm - s - 1, s);
        if ((mm - 1) % 2 == 1) v = -v;
      } else {
        const long long s = static_cast<long long>((i - 2) / 2);
        for (long long k = 1; k <= mm / 2 - s; ++k) v += b[static_cast<std::size_t>(k)] * binom(mm - s - k - 1, s + k - 1);
        if (mm % 2 == 1) v = -v;
      }
      a[i][m] = v;
    }
  }
  return a;
}

}  // namespace oracle

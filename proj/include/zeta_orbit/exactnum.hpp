#pragma once

// Exact scalars and the arithmetic sequences everything else is built from:
// prime valuations, the Moebius function, the signed Catalan numbers b_k and
// the ordered-factorization counts alpha_k(m).

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zeta_orbit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the convention C(a,b) = 0 unless a >= b >= 0.
inline Integer binomial(long long a, long long b) {
  if (b < 0 || a < b) {
    return 0;
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// Exponent of the prime p in m.
inline unsigned valuation(std::uint64_t m, std::uint64_t p) {
  if (m == 0) throw std::invalid_argument("valuation: m must be positive");
  if (!is_prime(p)) throw std::invalid_argument("valuation: " + std::to_string(p) + " is not prime");
  unsigned e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

inline unsigned two_adic_valuation(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("two_adic_valuation: m must be positive");
  return static_cast<unsigned>(__builtin_ctzll(m));
}

inline std::uint64_t odd_part(std::uint64_t m) { return m >> two_adic_valuation(m); }

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Total number of prime factors counted with multiplicity.
inline unsigned total_prime_factors(std::uint64_t m) {
  unsigned v = 0;
  for (const auto& [p, e] : factorize(m)) v += e;
  return v;
}

inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

/// Prime exponents of n, weakly decreasing. n = 1 gives the empty partition.
using Partition = std::vector<unsigned>;

inline Partition partition_of(std::uint64_t n) {
  Partition lambda;
  for (const auto& [p, e] : factorize(n)) lambda.push_back(e);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

inline bool is_squarefree(std::uint64_t n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

/// Smallest-prime-factor sieve for bulk factorization up to a fixed bound.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit) : spf_(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] != 0) continue;
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = i;
      }
    }
  }

  std::uint64_t limit() const { return spf_.size() - 1; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_.at(n) == n; }
  std::uint64_t smallest_factor(std::uint64_t n) const { return spf_.at(n); }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i < spf_.size(); ++i) {
      if (spf_[i] == i) out.push_back(i);
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> spf_;
};

/// b_k from the closed form (-1)^{k-1}/k * C(2k-2, k-1), with b_0 = b_1 = 1.
inline Integer catalan_b(unsigned k) {
  if (k <= 1) return 1;
  Integer c = binomial(2 * k - 2, k - 1);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
  return (k % 2 == 0) ? Integer(-c) : c;
}

/// b_0..b_K from the quadratic recursion b_n = -sum_{i+j=n, i,j>=1} b_i b_j.
inline std::vector<Integer> signed_catalan_table(unsigned max_k) {
  std::vector<Integer> b(max_k + 1);
  b[0] = 1;
  if (max_k >= 1) b[1] = 1;
  for (unsigned n = 2; n <= max_k; ++n) {
    Integer acc = 0;
    for (unsigned i = 1; i < n; ++i) acc += b[i] * b[n - i];
    b[n] = -acc;
  }
  return b;
}

/// alpha_k(m): ordered k-tuples of integers > 1 with product m, for all m <= max_m.
///
/// Level k is filled from level k-1 by a divisor sieve,
/// alpha_k(m) = sum_{d | m, d < m} alpha_{k-1}(d), seeded with alpha_1(m) = [m > 1].
/// Levels stop at the largest k with 2^k <= max_m; beyond that every value is 0.
class FactorizationTable {
 public:
  explicit FactorizationTable(std::uint64_t max_m) : max_m_(max_m) {
    if (max_m == 0) throw std::invalid_argument("FactorizationTable: max_m must be positive");
    std::vector<Integer> first(max_m + 1, 0);
    for (std::uint64_t m = 2; m <= max_m; ++m) first[m] = 1;
    levels_.push_back(std::move(first));
    for (unsigned k = 2; (std::uint64_t{1} << k) <= max_m; ++k) {
      const auto& prev = levels_.back();
      std::vector<Integer> next(max_m + 1, 0);
      for (std::uint64_t d = std::uint64_t{1} << (k - 1); d <= max_m / 2; ++d) {
        if (prev[d] == 0) continue;
        for (std::uint64_t m = 2 * d; m <= max_m; m += d) next[m] += prev[d];
      }
      levels_.push_back(std::move(next));
    }
  }

  std::uint64_t max_m() const { return max_m_; }
  unsigned max_k() const { return static_cast<unsigned>(levels_.size()); }

  const Integer& operator()(unsigned k, std::uint64_t m) const {
    if (k == 0) throw std::invalid_argument("FactorizationTable: k must be positive");
    if (m == 0 || m > max_m_) {
      throw std::out_of_range("FactorizationTable: m=" + std::to_string(m) + " outside 1.." +
                              std::to_string(max_m_));
    }
    if (k > levels_.size()) return zero_;
    return levels_[k - 1][m];
  }

 private:
  std::uint64_t max_m_;
  std::vector<std::vector<Integer>> levels_;
  inline static const Integer zero_ = 0;
};

inline Integer alpha(unsigned k, std::uint64_t m) {
  if (k == 0 || m == 0) throw std::invalid_argument("alpha: k and m must be positive");
  return FactorizationTable(m)(k, m);
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Checks sum_{i=1}^{k-1} (-1)^{k-1-i} sum_{d|m} alpha_i(d) == alpha_k(m) + (-1)^k alpha_1(m).
inline bool verify_alphacount(const FactorizationTable& table, std::uint64_t m, unsigned k) {
  if (k < 2) throw std::invalid_argument("verify_alphacount: k must be >= 2");
  const auto divs = divisors(m);
  Integer lhs = 0;
  for (unsigned i = 1; i + 1 <= k; ++i) {
    Integer inner = 0;
    for (auto d : divs) inner += table(i, d);
    if ((k - 1 - i) % 2 == 0) {
      lhs += inner;
    } else {
      lhs -= inner;
    }
  }
  Integer rhs = table(k, m) + ((k % 2 == 0) ? table(1, m) : Integer(-table(1, m)));
  return lhs == rhs;
}

inline bool verify_alphacount(std::uint64_t m, unsigned k) {
  return verify_alphacount(FactorizationTable(m), m, k);
}

/// Checks sum_{k=1}^{v(m)} (-1)^k alpha_k(m) == (-1)^{v(m)} for squarefree m > 1, else 0.
inline bool verify_signchar(const FactorizationTable& table, std::uint64_t m) {
  const unsigned v = total_prime_factors(m);
  Integer sum = 0;
  for (unsigned k = 1; k <= v; ++k) {
    if (k % 2 == 0) {
      sum += table(k, m);
    } else {
      sum -= table(k, m);
    }
  }
  Integer expected = 0;
  if (m > 1 && is_squarefree(m)) expected = (v % 2 == 0) ? 1 : -1;
  return sum == expected;
}

inline bool verify_signchar(std::uint64_t m) { return verify_signchar(FactorizationTable(m), m); }

// ---------------------------------------------------------------------------
// The exponent c with zeta(c) = 2.

/// Rational upper bound used in alpha_k(m) <= m^c.
inline Rational alpha_exponent_bound() { return Rational(17287, 10000); }

struct ZetaBracket {
  long double lower;
  long double upper;
};

/// Two-sided bound on zeta(s) for real s > 1:
/// S_N + (N+1)^{1-s}/(s-1) <= zeta(s) <= S_N + N^{1-s}/(s-1), widened by a rounding margin.
inline ZetaBracket zeta_bracket(long double s, std::uint64_t terms = 200000) {
  if (!(s > 1.0L)) throw std::invalid_argument("zeta_bracket: s must exceed 1");
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (std::uint64_t n = terms; n >= 1; --n) {
    const long double term = std::pow(static_cast<long double>(n), -s);
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const long double n = static_cast<long double>(terms);
  const long double margin = 1e-14L;
  return {sum + std::pow(n + 1.0L, 1.0L - s) / (s - 1.0L) - margin,
          sum + std::pow(n, 1.0L - s) / (s - 1.0L) + margin};
}

/// True iff zeta(s) < 2 is established by the bracket, i.e. s lies above the root.
inline bool exceeds_zeta_two_root(const Rational& s) { return zeta_bracket(s.get_d()).upper < 2.0L; }

/// True iff zeta(s) > 2 is established, i.e. s lies below the root.
inline bool below_zeta_two_root(const Rational& s) { return zeta_bracket(s.get_d()).lower > 2.0L; }

/// Bisection enclosure [lo, hi] of the root of zeta(c) = 2 with dyadic endpoints.
inline std::pair<Rational, Rational> zeta_two_root_enclosure(unsigned steps = 24) {
  Rational lo(3, 2);
  Rational hi(2);
  for (unsigned i = 0; i < steps; ++i) {
    Rational mid = (lo + hi) / 2;
    if (exceeds_zeta_two_root(mid)) {
      hi = mid;
    } else if (below_zeta_two_root(mid)) {
      lo = mid;
    } else {
      break;
    }
  }
  return {lo, hi};
}

/// Exact predicate value <= m^c for rational c >= 0 and m >= 1.
/// Decided in floating point when the logarithms are well separated, otherwise by
/// comparing value^den with m^num in integers.
inline bool within_power_bound(const Integer& value, std::uint64_t m, const Rational& c) {
  if (value <= 0) return true;
  if (m == 1) return value <= 1;
  long exp_value = 0;
  const double mant = mpz_get_d_2exp(&exp_value, value.get_mpz_t());
  const double log_value = std::log(mant) + static_cast<double>(exp_value) * std::log(2.0);
  const double log_bound = c.get_d() * std::log(static_cast<double>(m));
  if (log_value < log_bound - 1e-9) return true;
  if (log_value > log_bound + 1e-9) return false;
  Integer lhs;
  Integer rhs;
  mpz_pow_ui(lhs.get_mpz_t(), value.get_mpz_t(), c.get_den().get_ui());
  mpz_ui_pow_ui(rhs.get_mpz_t(), m, c.get_num().get_ui());
  return lhs <= rhs;
}

}  // namespace zeta_orbit

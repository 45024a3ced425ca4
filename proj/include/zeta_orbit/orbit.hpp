#pragma once

// The orbit of the Dirichlet series 1 under rho: the series phi = 1.rho(-S), its
// coefficient oracles, the cubic relation with zeta, and the functional equation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zeta_orbit/dseries.hpp"
#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/poly.hpp"
#include "zeta_orbit/pseries.hpp"
#include "zeta_orbit/rep.hpp"
#include "zeta_orbit/report.hpp"

namespace zeta_orbit {

using IntSeries = DirichletSeries<Integer>;

struct PhiCoefficients {
  IntSeries a;
  std::string oracle;
};

/// Inner sums c_l = sum_{k=2}^{floor(l/2)} b_k C(l-k-2, k-2) for l = 0..max_l.
inline std::vector<Integer> phi_inner_sums(unsigned max_l) {
  const auto b = signed_catalan_table(max_l / 2 + 1);
  std::vector<Integer> c(max_l + 1, 0);
  for (unsigned l = 4; l <= max_l; ++l) {
    for (unsigned k = 2; k <= l / 2; ++k) c[l] += b[k] * binomial(l - k - 2, k - 2);
  }
  return c;
}

/// a_n = alpha_1(n) + sum_{l=4}^{v(n)+1} (-1)^l alpha_{l-1}(n) c_l.
inline PhiCoefficients phi_via_rhos(std::size_t n) {
  if (n < 1) throw std::invalid_argument("phi_via_rhos: N must be positive");
  const FactorizationTable table(n);
  const auto c = phi_inner_sums(table.max_k() + 1);
  IntSeries a(n);
  for (std::size_t m = 2; m <= n; ++m) {
    Integer v = table(1, m);
    const unsigned depth = total_prime_factors(m);
    for (unsigned l = 4; l <= depth + 1; ++l) {
      const Integer term = table(l - 1, m) * c[l];
      if (l % 2 == 0) {
        v += term;
      } else {
        v -= term;
      }
    }
    a[m] = v;
  }
  return {std::move(a), "rhos-formula"};
}

/// a_n = -rho(S)_{1,n}, read off the integer matrix built through Z^{-1} psi(tau(S)) Z.
inline PhiCoefficients phi_via_matrix(std::size_t n, std::optional<index_t> max_source = std::nullopt) {
  if (n < 1) throw std::invalid_argument("phi_via_matrix: N must be positive");
  const auto cols = static_cast<index_t>(n);
  if (max_source && 2 * cols > *max_source) {
    throw InsufficientWindow("phi_via_matrix: rho(S) on " + std::to_string(n) + " columns needs a source of " +
                                 std::to_string(2 * cols) + " rows",
                             2 * cols, cols);
  }
  const auto s = rho_pipeline<Integer>(Letter::S, cols);
  IntSeries a(n);
  for (index_t j = 1; j <= cols; ++j) {
    const auto& col = s.column(j);
    if (!col.empty() && col.front().row == 1) a[static_cast<std::size_t>(j)] = -col.front().value;
  }
  return {std::move(a), "matrix-row"};
}

/// Solves (Z-1) F^2 + Z F - Z (Z-1) = 0 for F coefficientwise, for any series Z with Z_1 = 1.
///
/// At index n the identity reads
///   sum_{m | n, m > 1} (Z-1)_m (F^2)_{n/m} + sum_{d | n} Z_{n/d} F_d - (Z (Z-1))_n = 0.
/// Since (Z-1)_1 = 0 and F_1 = 0, F_n appears only in the middle sum, with
/// coefficient Z_1 = 1, so F_n is determined by F_1..F_{n-1}.
inline IntSeries solve_cubic(const IntSeries& zeta) {
  const std::size_t n = zeta.length();
  if (zeta[1] != 1) throw std::invalid_argument("solve_cubic: leading coefficient must be 1");
  IntSeries zm1 = zeta;
  zm1[1] = 0;
  const IntSeries rhs = dconv(zeta, zm1);
  IntSeries f(n);
  std::vector<Integer> square(n + 1, 0);  // (F^2)_k, complete for k < current index
  for (std::size_t m = 2; m <= n; ++m) {
    const Integer linear = zeta[1] + 2 * zm1[1] * f[1];
    if (linear != 1) throw std::logic_error("solve_cubic: linear coefficient is " + linear.get_str());
    Integer known = -rhs[m];
    for (auto d : divisors(m)) {
      if (d == m) continue;
      if (f[d] != 0 && zeta[m / d] != 0) add_product(known, zeta[m / d], f[d]);
      const std::size_t k = m / d;  // d runs over proper divisors, so k = m/d > 1 is the (Z-1) index
      if (square[d] != 0 && zm1[k] != 0) add_product(known, zm1[k], square[d]);
    }
    f[m] = -known;
    if (f[m] != 0) {
      for (std::size_t i = 2; i <= m && i * m <= n; ++i) {
        if (f[i] == 0) continue;
        Integer prod = f[i] * f[m];
        if (i != m) prod *= 2;
        square[i * m] += prod;
      }
    }
  }
  return f;
}

inline PhiCoefficients phi_via_cubic(std::size_t n) {
  if (n < 1) throw std::invalid_argument("phi_via_cubic: N must be positive");
  return {solve_cubic(zeta_series<Integer>(n)), "cubic-recursion"};
}

/// (Z-1) F^2 + Z F - Z (Z-1) in the truncated ring.
template <class Scalar>
DirichletSeries<Scalar> cubic_residual(const DirichletSeries<Scalar>& zeta, const DirichletSeries<Scalar>& f) {
  DirichletSeries<Scalar> zm1 = zeta - DirichletSeries<Scalar>::unit(zeta.length());
  return dconv(zm1, dconv(f, f)) + dconv(zeta, f) - dconv(zeta, zm1);
}

struct CubicVariant {
  enum class Kind { plain, omega, twist };
  Kind kind = Kind::plain;
  std::set<std::uint64_t> omega;
  std::function<Integer(std::uint64_t)> on_primes;
  std::string label = "plain";

  static CubicVariant plain() { return {}; }
  static CubicVariant restricted(std::set<std::uint64_t> primes) {
    std::string label = "omega{";
    for (auto p : primes) label += (label.back() == '{' ? "" : ",") + std::to_string(p);
    return {Kind::omega, std::move(primes), nullptr, label + "}"};
  }
  static CubicVariant twisted(std::function<Integer(std::uint64_t)> m, std::string name) {
    return {Kind::twist, {}, std::move(m), "twist " + name};
  }
};

/// Builds zeta* and phi* for the variant (phi taken from the closed formula) and
/// checks that the cubic residual is the zero vector.
inline CheckResult verify_cubic(std::size_t n, const CubicVariant& variant) {
  IntSeries zeta = zeta_series<Integer>(n);
  IntSeries phi = phi_via_rhos(n).a;
  if (variant.kind == CubicVariant::Kind::omega) {
    zeta = restrict_omega(zeta, variant.omega);
    phi = restrict_omega(phi, variant.omega);
  } else if (variant.kind == CubicVariant::Kind::twist) {
    zeta = twist(zeta, variant.on_primes);
    phi = twist(phi, variant.on_primes);
  }
  const IntSeries r = cubic_residual(zeta, phi);
  const std::size_t bad = r.first_nonzero();
  json witness = bad == 0 ? json{{"residual", "zero"}} : json{{"first_nonzero_index", bad}, {"value", to_string(r[bad])}};
  return {"cubic " + variant.label, static_cast<std::int64_t>(n), bad == 0, std::move(witness)};
}

/// -phi = (zeta-1)(phi^2 + phi - zeta), and the second factor starts with -1.
inline CheckResult verify_unit_factor(const IntSeries& phi) {
  const std::size_t n = phi.length();
  const IntSeries zeta = zeta_series<Integer>(n);
  const IntSeries second = dconv(phi, phi) + phi - zeta;
  const IntSeries lhs = -phi;
  const IntSeries rhs = dconv(zeta_minus_one<Integer>(n), second);
  const bool ok = lhs == rhs && second[1] == -1;
  return {"unit factor", static_cast<std::int64_t>(n), ok, json{{"leading", to_string(second[1])}}};
}

// ---- orbit of 1 -------------------------------------------------------------

/// Row vector e_1 times rho(word), through the generator matrices.
inline IntSeries orbit_series_by_matrix(const GroupWord& w, std::size_t n,
                                        std::optional<index_t> max_source = std::nullopt) {
  if (w.uses_W()) throw WNotEnabled();
  const auto cols = static_cast<index_t>(n);
  if (w.empty()) return IntSeries::unit(n);
  Representation<Integer> rep(false, max_source);
  const index_t source = Representation<Integer>::source_rows(w, cols);
  if (max_source && source > *max_source) {
    throw InsufficientWindow("word '" + w.to_string() + "' on " + std::to_string(n) + " columns needs a source of " +
                                 std::to_string(source) + " rows",
                             source, source / letter_growth(w.letters().front()));
  }
  const auto budget = Representation<Integer>::column_budget(w, cols);
  const auto& letters = w.letters();
  // v holds row 1 of the partial product, indexed 1..len
  std::vector<Integer> v(2, 0);
  v[1] = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto m = rep.generator(letters[i], budget[i]);
    std::vector<Integer> next(static_cast<std::size_t>(budget[i]) + 1, 0);
    for (index_t j = 1; j <= budget[i]; ++j) {
      Integer acc = 0;
      for (const auto& e : m.column(j)) {
        const auto r = static_cast<std::size_t>(e.row);
        if (r < v.size() && v[r] != 0) add_product(acc, v[r], e.value);
      }
      next[static_cast<std::size_t>(j)] = std::move(acc);
    }
    v = std::move(next);
  }
  IntSeries out(n);
  for (std::size_t j = 1; j <= n; ++j) out[j] = v[j];
  return out;
}

/// 1.rho(word). Words T^m give zeta^m and S^{+-1} T^m give -+phi zeta^m by
/// convolution; other words go through the matrices.
inline IntSeries orbit_series(const GroupWord& w, std::size_t n, std::optional<index_t> max_source = std::nullopt) {
  if (w.uses_W()) throw WNotEnabled();
  const auto& l = w.letters();
  std::size_t start = 0;
  int sign = 0;
  if (!l.empty() && (l[0] == Letter::S || l[0] == Letter::SInv)) {
    sign = l[0] == Letter::S ? -1 : 1;
    start = 1;
  }
  int m = 0;
  bool closed = true;
  for (std::size_t i = start; i < l.size(); ++i) {
    if (l[i] == Letter::T && m >= 0) {
      ++m;
    } else if (l[i] == Letter::TInv && m <= 0) {
      --m;
    } else {
      closed = false;
      break;
    }
  }
  if (!closed) return orbit_series_by_matrix(w, n, max_source);
  const IntSeries zm = dpow(zeta_series<Integer>(n), m);
  if (sign == 0) return zm;
  IntSeries out = dconv(phi_via_rhos(n).a, zm);
  return sign < 0 ? -out : out;
}

// ---- partitions ---------------------------------------------------------------

class PartitionInconsistency : public std::runtime_error {
 public:
  PartitionInconsistency(std::uint64_t n1, std::uint64_t n2)
      : std::runtime_error("coefficients of " + std::to_string(n1) + " and " + std::to_string(n2) +
                           " differ although their exponent partitions agree"),
        first(n1),
        second(n2) {}
  std::uint64_t first;
  std::uint64_t second;
};

using PartitionTable = std::map<Partition, Integer>;

/// Groups a_n by the exponent partition of n, checking that each group is constant.
inline PartitionTable partition_table(const IntSeries& a) {
  PartitionTable table;
  std::map<Partition, std::uint64_t> witness;
  for (std::size_t n = 1; n <= a.length(); ++n) {
    Partition p = partition_of(n);
    auto it = table.find(p);
    if (it == table.end()) {
      witness[p] = n;
      table.emplace(std::move(p), a[n]);
    } else if (it->second != a[n]) {
      throw PartitionInconsistency(witness[p], n);
    }
  }
  return table;
}

inline std::string partition_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// ---- generating functions in y ---------------------------------------------------

/// C_k = sum_{l >= 2k} (-1)^l C(l-k-2, k-2) y^{l-1}, for k >= 2.
inline PowerSeries ck_from_definition(unsigned k, std::size_t order) {
  if (k < 2) throw std::invalid_argument("ck_from_definition: k must be >= 2");
  PowerSeries c(order);
  for (std::size_t l = 2 * k; l - 1 <= order; ++l) {
    const Integer v = binomial(static_cast<long long>(l) - k - 2, static_cast<long long>(k) - 2);
    c[l - 1] = (l % 2 == 0) ? Rational(v) : Rational(-v);
  }
  return c;
}

/// y^{2k-1} / (1+y)^{k-1}.
inline PowerSeries ck_closed_form(unsigned k, std::size_t order) {
  if (k < 1) throw std::invalid_argument("ck_closed_form: k must be >= 1");
  const PowerSeries inv = inverse(PowerSeries::constant(1, order) + PowerSeries::monomial(1, 1, order));
  return PowerSeries::monomial(2 * k - 1, 1, order) * pow(inv, k - 1);
}

/// F = y + sum_{l >= 3} q_{2,l} y^{l-1}: the series whose coefficient of y^j is the
/// weight of alpha_j in a_n.
inline PowerSeries phi_y_series(std::size_t order) {
  const auto b = signed_catalan_table(static_cast<unsigned>(order / 2 + 2));
  PowerSeries f(order);
  if (order >= 1) f[1] = 1;
  for (std::size_t l = 3; l - 1 <= order; ++l) f[l - 1] = transition_q_entry(b, 2, static_cast<long long>(l));
  return f;
}

/// y F^2 + (1+y) F - y (1+y).
inline PowerSeries pielliptic_residual(const PowerSeries& f) {
  const std::size_t k = f.order();
  const PowerSeries y = PowerSeries::monomial(1, 1, k);
  const PowerSeries one_y = PowerSeries::constant(1, k) + y;
  return y * f * f + one_y * f - y * one_y;
}

/// a_{p^n} for n = 0..order from the closed formula, using alpha_k(p^n) = C(n-1, k-1).
inline std::vector<Integer> phi_prime_power_coefficients(std::size_t order) {
  const auto c = phi_inner_sums(static_cast<unsigned>(order) + 2);
  std::vector<Integer> a(order + 1, 0);
  for (std::size_t n = 1; n <= order; ++n) {
    const auto nn = static_cast<long long>(n);
    Integer v = 1;
    for (long long l = 4; l <= nn + 1; ++l) {
      const Integer term = binomial(nn - 1, l - 2) * c[static_cast<std::size_t>(l)];
      v += (l % 2 == 0) ? term : Integer(-term);
    }
    a[n] = v;
  }
  return a;
}

/// F(y(t)) with y = t/(1-t), the generating function of a_{2^n}.
inline PowerSeries compose_with_geometric(const PowerSeries& f) {
  const std::size_t k = f.order();
  PowerSeries y(k);
  for (std::size_t i = 1; i <= k; ++i) y[i] = 1;
  PowerSeries out(k);
  for (std::size_t i = k + 1; i-- > 0;) out = out * y + PowerSeries::constant(f[i], k);
  return out;
}

// ---- functional equation ---------------------------------------------------------

/// Polynomials in (a, x, y).
using Poly3 = Poly<3>;

inline Poly3 functional_polynomial() {
  const Poly3 a = Poly3::var(0), x = Poly3::var(1), y = Poly3::var(2);
  const Poly3 qx = x * x + x + Poly3(1);
  const Poly3 qy = y * y + y + Poly3(1);
  const Poly3 a2 = a * a, x2 = x * x, y2 = y * y;
  return a2 * a2 * x2 * x2 - a2 * a * x2 * qx * qy + a2 * (x2 * qy * qy + y2 * qx * qx - Poly3(2) * x2 * y2) -
         a * y2 * qx * qy + y2 * y2;
}

/// P(z, w) = z w^2 + (1+z) w - z(1+z) as coefficients in z, for z' = u z + v.
inline CoeffList<3> cubic_in_z(const Poly3& w, const Poly3& u, const Poly3& v) {
  // z' w^2 + (1 + z') w - z'(1 + z'), expanded with z' = u z + v
  const Poly3 one(1);
  const Poly3 c0 = v * w * w + (one + v) * w - v * (one + v);
  const Poly3 c1 = u * w * w + u * w - u * (one + v) - v * u;
  const Poly3 c2 = -(u * u);
  return {c0, c1, c2};
}

struct ResultantReport {
  Poly3 resultant;
  Poly3 target;
  std::optional<Rational> factor;  // resultant = factor * target, when proportional
};

/// Eliminates z between P(z, x) = 0 and P(z', y) = 0 where z' + 1 = a (z + 1).
inline ResultantReport functional_resultant() {
  const Poly3 a = Poly3::var(0), x = Poly3::var(1), y = Poly3::var(2);
  const Poly3 one(1);
  const Poly3 res = resultant(cubic_in_z(x, one, Poly3()), cubic_in_z(y, a, a - one));
  const Poly3 g = functional_polynomial();
  ResultantReport rep{res, g, std::nullopt};
  if (g.is_zero()) return rep;
  const auto& [e, c] = *g.terms().begin();
  Rational ratio(res.coefficient(e), c);
  ratio.canonicalize();
  Poly3 scaled_res = res * Poly3(ratio.get_den());
  Poly3 scaled_g = g * Poly3(ratio.get_num());
  if (scaled_res == scaled_g) rep.factor = ratio;
  return rep;
}

/// Roots of c2 z^2 + c1 z + c0, computed without cancellation.
inline std::array<Complex, 2> quadratic_roots(Complex c2, Complex c1, Complex c0) {
  const Complex disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  const Complex q = (std::real(std::conj(c1) * disc) >= 0) ? -0.5 * (c1 + disc) : -0.5 * (c1 - disc);
  if (std::abs(q) == 0.0) return {Complex(0), Complex(0)};
  return {q / c2, c0 / q};
}

struct FunctionalSample {
  Complex a, x, y;
  double residual;
};

/// Draws (a, x), solves P(z, x) = 0, sets z' = a(z+1) - 1, solves P(z', y) = 0 and evaluates G(a, x, y).
inline std::vector<FunctionalSample> functional_samples(std::size_t count, std::uint64_t seed = 20240229) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Poly3 g = functional_polynomial();
  std::vector<FunctionalSample> out;
  out.reserve(count);
  while (out.size() < count) {
    const Complex a(unit(rng), unit(rng));
    const Complex x(unit(rng), unit(rng));
    if (std::abs(a) < 0.1) continue;
    // P(z, x) as a polynomial in z: -z^2 + (x^2 + x - 1) z + x
    const auto zs = quadratic_roots(-1.0, x * x + x - 1.0, x);
    const Complex z = std::abs(zs[0]) <= std::abs(zs[1]) ? zs[0] : zs[1];
    const Complex zp = a * (z + 1.0) - 1.0;
    if (std::abs(zp) < 1e-6) continue;
    const auto ys = quadratic_roots(zp, 1.0 + zp, -zp * (1.0 + zp));
    const Complex y = std::abs(ys[0]) <= std::abs(ys[1]) ? ys[0] : ys[1];
    out.push_back({a, x, y, std::abs(g.evaluate(std::array<Complex, 3>{a, x, y}))});
  }
  return out;
}

inline SuiteReport functional_eq_check(std::size_t samples = 100, double tolerance = 1e-9) {
  SuiteReport report{"functional", {}};
  const ResultantReport r = functional_resultant();
  const std::array<const char*, 3> names{"a", "x", "y"};
  report.add("resultant proportional to G", 0, r.factor.has_value(),
             json{{"factor", r.factor ? to_string(*r.factor) : "none"}, {"resultant", r.resultant.to_string(names)}});

  const Poly3 diag = functional_polynomial().substitute<3>({Poly3(1), Poly3::var(1), Poly3::var(1)});
  report.add("G(1,x,x) = 0", 0, diag.is_zero(), json{{"value", diag.to_string(names)}});

  double worst = 0.0;
  for (const auto& s : functional_samples(samples)) worst = std::max(worst, s.residual);
  report.add("numeric branch check", static_cast<std::int64_t>(samples), worst < tolerance,
             json{{"max_residual", worst}, {"tolerance", tolerance}});
  return report;
}

// ---- discriminant ----------------------------------------------------------------

/// Delta(z) = (1+z)^2 + 4 z^2 (1+z), the discriminant of P(z, w) in w.
inline SuiteReport delta_roots_check() {
  SuiteReport report{"delta", {}};
  using P1 = Poly<1>;
  const P1 z = P1::var(0);
  const P1 one(1);
  const P1 delta = (one + z) * (one + z) + P1(4) * z * z * (one + z);
  const P1 expected = P1(4) * z * z * z + P1(5) * z * z + P1(2) * z + one;
  report.add("expansion 4z^3 + 5z^2 + 2z + 1", 0, delta == expected, json{{"delta", delta.to_string({"z"})}});

  report.add("Delta(-1) = 0", 0, delta.evaluate(std::array<Rational, 1>{Rational(-1)}) == 0);

  // e = (-1 + w)/8 with w^2 = -15
  const QuadraticNumber e{Rational(-1, 8), Rational(1, 8), -15};
  auto delta_at = [](const QuadraticNumber& v) {
    const QuadraticNumber one{1, 0, v.d};
    const QuadraticNumber v2 = v * v;
    return Rational(4) * (v2 * v) + Rational(5) * v2 + Rational(2) * v + one;
  };
  report.add("Delta(e) = 0", 0, delta_at(e).is_zero());
  report.add("Delta(conj e) = 0", 0, delta_at(e.conjugate()).is_zero());
  report.add("|e|^2 = 1/4", 0, e.norm() == Rational(1, 4), json{{"norm", to_string(e.norm())}});
  return report;
}

}  // namespace zeta_orbit

#pragma once

// Named verification suites. Each returns a SuiteReport whose checks are exact
// unless the check name says otherwise.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeta_orbit/dseries.hpp"
#include "zeta_orbit/exactnum.hpp"
#include "zeta_orbit/matrices.hpp"
#include "zeta_orbit/orbit.hpp"
#include "zeta_orbit/pseries.hpp"
#include "zeta_orbit/rep.hpp"
#include "zeta_orbit/report.hpp"

namespace zeta_orbit {

/// Largest |entry| bit length over column j and the exponent it is compared with.
template <class Fn>
std::optional<json> entry_bound_violation(const IntMatrix& m, Fn&& bits_allowed) {
  for (index_t j = 1; j <= m.cols(); ++j) {
    const std::size_t allowed = bits_allowed(j);
    for (const auto& e : m.column(j)) {
      // |v| <= 2^allowed  <=>  |v| < 2^allowed, or |v| == 2^allowed
      const std::size_t bits = mpz_sizeinbase(e.value.get_mpz_t(), 2);
      if (bits > allowed + 1 || (bits == allowed + 1 && mpz_scan1(e.value.get_mpz_t(), 0) != allowed)) {
        return json{{"row", e.row}, {"col", j}, {"bits", bits}, {"allowed_exponent", allowed}};
      }
    }
  }
  return std::nullopt;
}

/// Z D = J Z and Z (X Z X) = I.
inline SuiteReport verify_jordan(index_t n = 512) {
  SuiteReport report{"jordan", {}};
  const FactorizationTable table(static_cast<std::uint64_t>(n));
  const IntMatrix z = matrix_Z(table, n);
  const IntMatrix zinv = matrix_Zinv(table, n);
  add_matrix_check(report, "Z D = J Z", windowed_mul(z, divisor_matrix(n), n), windowed_mul(matrix_J(n), z, n), n);
  add_matrix_check(report, "Z (XZX) = I", windowed_mul(z, zinv, n), identity_matrix(n), n);
  add_matrix_check(report, "(XZX) Z = I", windowed_mul(zinv, z, n), identity_matrix(n), n);
  const IntMatrix xzx = windowed_mul(windowed_mul(matrix_X(n), z, n), matrix_X(n), n);
  add_matrix_check(report, "XZX entrywise = Zinv", xzx, zinv, n);
  bool unitri = true;
  for (index_t j = 1; j <= n && unitri; ++j) {
    const auto& c = z.column(j);
    unitri = !c.empty() && c.back().row == j && c.back().value == 1;
  }
  report.add("Z upper unitriangular", n, unitri);
  return report;
}

/// P Q = I, P (J~ - I) = (J_inf - I) P and the entry bounds on P and Q.
inline SuiteReport verify_transition(index_t n = 256) {
  SuiteReport report{"transition", {}};
  const IntMatrix p = matrix_P(n);
  const IntMatrix q = matrix_Q(n);
  const IntMatrix id = identity_matrix(n);
  add_matrix_check(report, "P Q = I", windowed_mul(p, q, n), id, n);
  add_matrix_check(report, "Q P = I", windowed_mul(q, p, n), id, n);
  const IntMatrix jt = tau1<Integer>(Letter::T, n);
  const IntMatrix jinf = matrix_Jinf(n);
  add_matrix_check(report, "P (J~ - I) = (J_inf - I) P", windowed_mul(p, jt - id, n), windowed_mul(jinf - id, p, n), n);
  auto pv = entry_bound_violation(p, [](index_t j) { return static_cast<std::size_t>(2 * j); });
  report.add("|p_ij| <= 2^(2j)", n, !pv, pv ? *pv : json(nullptr));
  auto qv = entry_bound_violation(q, [](index_t j) { return static_cast<std::size_t>(3 * j); });
  report.add("|q_ij| <= 2^(3j)", n, !qv, qv ? *qv : json(nullptr));
  return report;
}

/// Filtration check: diagonal 2x2 block r (from 0) of m equals T^r Y T^-r.
///
/// Each quotient of the filtration is the standard module, but in the basis that
/// P induces the r-th quotient sees Y conjugated by T^r; for Y = T this is T itself.
inline bool diagonal_blocks_conjugate(const IntMatrix& m, const Mat2& y) {
  for (index_t r = 0; 2 * r + 2 <= m.cols(); ++r) {
    const Mat2 block = mat2_mul(mat2_mul({1, r, 0, 1}, y), {1, -r, 0, 1});
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        if (m.at(2 * r + a + 1, 2 * r + b + 1) != static_cast<long>(block[static_cast<std::size_t>(2 * a + b)])) {
          return false;
        }
      }
    }
  }
  return true;
}

/// True when m vanishes below its diagonal 2x2 blocks.
inline bool block_upper_triangular(const IntMatrix& m) {
  for (index_t j = 1; j <= m.cols(); ++j) {
    const index_t block_end = ((j - 1) / 2) * 2 + 2;
    for (const auto& e : m.column(j)) {
      if (e.row > block_end) return false;
    }
  }
  return true;
}

/// rho(T) = D, rho(S) integral and 2j-supported, and the group relations from a
/// source window of 8n rows.
inline SuiteReport verify_representation(index_t n = 512) {
  SuiteReport report{"representation", {}};
  add_matrix_check(report, "Z^-1 psi(tau(T)) Z = D", rho_pipeline<Integer>(Letter::T, n), divisor_matrix(n), n);

  const index_t tn = std::min<index_t>(n, 256);
  add_matrix_check(report, "tau(T) = J_inf", tau<Integer>(Letter::T, tn), matrix_Jinf(tn), tn);
  const IntMatrix ts = tau<Integer>(Letter::S, tn);
  bool banded = true;
  for (index_t j = 1; j <= tn; ++j) {
    for (const auto& e : ts.column(j)) banded = banded && e.row <= j + 1;
  }
  report.add("tau(S)_kl = 0 for k > l+1", tn, banded);
  // measured constant: C = 1 in |tau(S)_kl| <= 2^{C l}
  auto tv = entry_bound_violation(ts, [](index_t j) { return static_cast<std::size_t>(j); });
  report.add("|tau(S)_kl| <= 2^l", tn, !tv, tv ? *tv : json(nullptr));
  const GroupWord st = GroupWord::parse("S T");
  const IntMatrix tst = windowed_mul(ts, tau<Integer>(Letter::T, 2 * tn), tn);
  report.add("tau filtration blocks T^r Y T^-r", tn,
             block_upper_triangular(ts) && block_upper_triangular(tst) &&
                 diagonal_blocks_conjugate(ts, letter_matrix(Letter::S)) &&
                 diagonal_blocks_conjugate(tau<Integer>(Letter::T, tn), letter_matrix(Letter::T)) &&
                 diagonal_blocks_conjugate(tst, st.matrix()));

  // Built over Q so that integrality is a finding rather than a type constraint.
  const RatMatrix sq = rho_pipeline<Rational>(Letter::S, n);
  bool integral = true;
  for (index_t j = 1; j <= n && integral; ++j) {
    for (const auto& e : sq.column(j)) integral = integral && e.value.get_den() == 1;
  }
  report.add("rho(S) integral", n, integral);
  const IntMatrix s = sq.cast<Integer>();
  const auto gv = growth_violation(s, 2);
  report.add("rho(S)_ij = 0 for i > 2j", n, !gv,
             gv ? json{{"row", gv->first}, {"col", gv->second}} : json(nullptr));
  // measured constant: C = 2 in |rho(S)_ij| <= 2^{C log2 j + C} = 4 j^2
  json big = nullptr;
  for (index_t j = 1; j <= n && big.is_null(); ++j) {
    for (const auto& e : s.column(j)) {
      if (abs(e.value) > Integer(4) * j * j) {
        big = json{{"row", e.row}, {"col", j}, {"value", to_string(e.value)}};
        break;
      }
    }
  }
  report.add("|rho(S)_ij| <= 4 j^2", n, big.is_null(), big);
  Representation<Integer> rep;
  add_matrix_check(report, "rho(S) rho(S^-1) = I", rep.evaluate(GroupWord::parse("S S^-1"), n / 2),
                   identity_matrix(n / 2), n / 2);

  const SuiteReport rel = verify_relations(8 * n);
  for (const auto& c : rel.checks) report.checks.push_back(c);
  return report;
}

/// rho(W) over Q: W^2 = 1, (WS)^2 = 1, a non-integral entry, and the matching identities for W(t).
inline SuiteReport verify_gl(index_t n = 32) {
  SuiteReport report{"gl", {}};
  const std::size_t order = 128;
  const GammaMatrix w = gamma_W(order);
  const GammaMatrix s = gamma_generators(order).s;
  report.add("W(t)^2 = I", static_cast<std::int64_t>(order), w * w == GammaMatrix::identity(order));
  report.add("W(t) S W(t) = -S", static_cast<std::int64_t>(order), w * s * w == -s);
  report.add("W(0) = [[0,1],[1,0]]", 0,
             w(0, 0)[0] == 0 && w(0, 1)[0] == 1 && w(1, 0)[0] == 1 && w(1, 1)[0] == 0);

  // |r_n| <= 4^n, i.e. C = 2 in |r_n| <= 2^{Cn}
  json worst = nullptr;
  bool bounded = true;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (std::size_t k = 1; k <= order; ++k) {
        Rational bound;
        mpq_set_ui(bound.get_mpq_t(), 1, 1);
        mpq_mul_2exp(bound.get_mpq_t(), bound.get_mpq_t(), 2 * k);
        if (abs(w(r, c)[k]) > bound) {
          bounded = false;
          worst = json{{"entry", json::array({r, c})}, {"n", k}, {"value", to_string(w(r, c)[k])}};
        }
      }
    }
  }
  report.add("|r_n| <= 4^n", static_cast<std::int64_t>(order), bounded, worst);

  Representation<Rational> rep(true);
  add_matrix_check(report, "rho(W)^2 = I", rep.evaluate(GroupWord::parse("W W", true), n),
                   scalar_identity<Rational>(n, n), n);
  add_matrix_check(report, "rho(W) rho(S) rho(W) rho(S) = I", rep.evaluate(GroupWord::parse("W S W S", true), n),
                   scalar_identity<Rational>(n, n), n);
  const RatMatrix rw = rep.generator(Letter::W, n);
  json example = nullptr;
  for (index_t j = 1; j <= n && example.is_null(); ++j) {
    for (const auto& e : rw.column(j)) {
      if (e.value.get_den() != 1) {
        example = json{{"row", e.row}, {"col", j}, {"value", to_string(e.value)}};
        break;
      }
    }
  }
  report.add("rho(W) has a non-integral entry", n, !example.is_null(), example);
  return report;
}

inline SuiteReport verify_phi(std::size_t n = 4096) {
  SuiteReport report{"phi", {}};
  const PhiCoefficients rhos = phi_via_rhos(n);
  const PhiCoefficients cubic = phi_via_cubic(n);
  const PhiCoefficients matrix = phi_via_matrix(n);
  auto agree = [&](const PhiCoefficients& a, const PhiCoefficients& b) {
    std::size_t bad = 0;
    for (std::size_t i = 1; i <= n && bad == 0; ++i) {
      if (a.a[i] != b.a[i]) bad = i;
    }
    report.add(a.oracle + " = " + b.oracle, static_cast<std::int64_t>(n), bad == 0,
               bad ? json{{"index", bad}, {"left", to_string(a.a[bad])}, {"right", to_string(b.a[bad])}}
                   : json(nullptr));
  };
  agree(rhos, matrix);
  agree(rhos, cubic);
  agree(matrix, cubic);

  const std::map<std::size_t, long> pinned{{1, 0}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {8, 0}};
  bool ok = true;
  json values = json::object();
  for (const auto& [i, v] : pinned) {
    if (i > n) continue;
    values[std::to_string(i)] = to_string(rhos.a[i]);
    ok = ok && rhos.a[i] == v;
  }
  report.add("a_1..a_8 regression values", static_cast<std::int64_t>(n), ok, values);

  try {
    const PartitionTable table = partition_table(rhos.a);
    report.add("a_n depends only on the exponent partition", static_cast<std::int64_t>(n), true,
               json{{"partitions", table.size()}});
  } catch (const PartitionInconsistency& e) {
    report.add("a_n depends only on the exponent partition", static_cast<std::int64_t>(n), false,
               json{{"first", e.first}, {"second", e.second}});
  }
  report.checks.push_back(verify_unit_factor(rhos.a));
  return report;
}

inline SuiteReport verify_cubic_suite(std::size_t n = 10000) {
  SuiteReport report{"cubic", {}};
  report.checks.push_back(verify_cubic(n, CubicVariant::plain()));
  report.checks.push_back(verify_cubic(n, CubicVariant::restricted({2, 3})));
  report.checks.push_back(verify_cubic(n, CubicVariant::twisted(chi4_on_primes, "chi4")));

  // Numeric residual at s = 6: the truncated identity only leaves the tail.
  const std::size_t m = std::min<std::size_t>(n, 10000);
  DirichletSeries<Complex> zeta(m), phi(m);
  const auto a = phi_via_rhos(m).a;
  for (std::size_t i = 1; i <= m; ++i) {
    zeta[i] = 1.0;
    phi[i] = a[i].get_d();
  }
  const Complex s(6.0, 0.0);
  const Complex z = eval_at(zeta, s);
  const Complex f = eval_at(phi, s);
  const double residual = std::abs((z - 1.0) * f * f + z * f - z * (z - 1.0));
  report.add("numeric residual at s=6 (float)", static_cast<std::int64_t>(m), residual < 1e-6,
             json{{"residual", residual}});
  return report;
}

/// Signchar and alphacount identities, the alpha_k(m) <= m^c bound and the b_k sequence.
inline SuiteReport verify_combinatorics(std::uint64_t max_m = 10000, unsigned max_k = 12) {
  SuiteReport report{"combinatorics", {}};
  const FactorizationTable table(max_m);
  std::uint64_t bad_sign = 0, bad_count = 0;
  unsigned bad_count_k = 0;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    if (bad_sign == 0 && !verify_signchar(table, m)) bad_sign = m;
    for (unsigned k = 2; k <= max_k && bad_count == 0; ++k) {
      if (!verify_alphacount(table, m, k)) {
        bad_count = m;
        bad_count_k = k;
      }
    }
  }
  report.add("signchar", static_cast<std::int64_t>(max_m), bad_sign == 0,
             bad_sign ? json{{"m", bad_sign}} : json(nullptr));
  report.add("alphacount (k <= " + std::to_string(max_k) + ")", static_cast<std::int64_t>(max_m), bad_count == 0,
             bad_count ? json{{"m", bad_count}, {"k", bad_count_k}} : json(nullptr));

  const Rational c = alpha_exponent_bound();
  const bool certified = exceeds_zeta_two_root(c);
  const auto enclosure = zeta_two_root_enclosure(30);
  report.add("zeta(c) < 2 certified for c = " + to_string(c), 0, certified,
             json{{"root_lower", enclosure.first.get_d()}, {"root_upper", enclosure.second.get_d()}});
  std::uint64_t bad_bound = 0;
  for (std::uint64_t m = 2; m <= max_m && bad_bound == 0; ++m) {
    for (unsigned k = 1; k <= table.max_k(); ++k) {
      if (!within_power_bound(table(k, m), m, c)) {
        bad_bound = m;
        break;
      }
    }
  }
  report.add("alpha_k(m) <= m^c", static_cast<std::int64_t>(max_m), bad_bound == 0,
             bad_bound ? json{{"m", bad_bound}} : json(nullptr));

  const auto rec = signed_catalan_table(64);
  unsigned bad_b = 0;
  for (unsigned k = 0; k <= 64 && bad_b == 0; ++k) {
    if (catalan_b(k) != rec[k]) bad_b = k;
    if (k >= 1) {
      // |b_k| = Catalan(k-1) = C(2k-2, k-1) / k
      Integer cat = binomial(2 * k - 2, k - 1) / k;
      if (abs(rec[k]) != cat) bad_b = k;
    }
  }
  report.add("b_k closed form = recursion = signed Catalan", 64, bad_b == 0,
             bad_b ? json{{"k", bad_b}} : json(nullptr));
  return report;
}

/// g^2 + g = t, h_n, C_k, the y-series relation and its Omega = {2} specialization.
inline SuiteReport verify_genfun(std::size_t order = 64) {
  SuiteReport report{"genfun", {}};
  const std::size_t g_order = 4 * order;
  const PowerSeries g = series_g(g_order);
  report.add("g^2 + g = t", static_cast<std::int64_t>(g_order),
             g * g + g == PowerSeries::monomial(1, 1, g_order));

  const unsigned h_max = static_cast<unsigned>(2 * order);
  unsigned bad_h = 0;
  for (unsigned i = 0; i <= h_max && bad_h == 0; ++i) {
    if (!(series_h(i, h_max) == series_h_closed_form(i, h_max))) bad_h = i;
  }
  report.add("h_n recurrence = closed form", h_max, bad_h == 0, bad_h ? json{{"n", bad_h}} : json(nullptr));

  unsigned bad_c = 0;
  for (unsigned k = 2; k <= 16 && bad_c == 0; ++k) {
    if (!(ck_from_definition(k, order) == ck_closed_form(k, order))) bad_c = k;
  }
  report.add("C_k = y^(2k-1)/(1+y)^(k-1), k <= 16", static_cast<std::int64_t>(order), bad_c == 0,
             bad_c ? json{{"k", bad_c}} : json(nullptr));

  const PowerSeries f = phi_y_series(order);
  report.add("y F^2 + (1+y) F - y(1+y) = 0", static_cast<std::int64_t>(order), pielliptic_residual(f).is_zero());

  PowerSeries f_from_c = PowerSeries::monomial(1, 1, order);
  for (unsigned k = 2; 2 * k - 1 <= order; ++k) f_from_c += ck_closed_form(k, order) * Rational(catalan_b(k));
  report.add("F = y + sum b_k C_k", static_cast<std::int64_t>(order), f_from_c == f);

  const PowerSeries composed = compose_with_geometric(f);
  const auto a = phi_prime_power_coefficients(order);
  bool ok = true;
  for (std::size_t i = 0; i <= order; ++i) ok = ok && composed[i] == a[i];
  report.add("F(t/(1-t)) = sum a_{2^n} t^n", static_cast<std::int64_t>(order), ok);
  return report;
}

inline SuiteReport verify_functional(std::size_t samples = 100) {
  SuiteReport report = functional_eq_check(samples, 1e-9);
  for (const auto& c : delta_roots_check().checks) report.checks.push_back(c);
  return report;
}

/// B B' = I with B' = (2^{j-i-1}) above the diagonal, and B'_{1,j} outgrowing j^10.
inline SuiteReport verify_counterexample(index_t n = 256) {
  SuiteReport report{"counterexample", {}};
  const auto [b, bp] = counterexample_pair(n);
  add_matrix_check(report, "B B' = I", windowed_mul(b, bp, n), identity_matrix(n), n);
  add_matrix_check(report, "B' B = I", windowed_mul(bp, b, n), identity_matrix(n), n);
  // smallest j0 with 2^{j-2} > j^10 for every j0 <= j <= n
  index_t threshold = 0;
  bool run = true;
  bool holds_from_72 = true;
  for (index_t j = n; j >= 2; --j) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j), 10);
    const bool big = bp.at(1, j) > power;
    if (j >= 72 && !big) holds_from_72 = false;
    run = run && big;
    if (run) threshold = j;
  }
  report.add("B'_{1,j} > j^10 for 72 <= j <= N", n, holds_from_72 && n >= 72, json{{"threshold", threshold}});
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jordan", "transition", "representation", "gl",     "phi",
                                              "cubic",  "combinatorics", "genfun",      "functional", "counterexample"};
  return names;
}

/// Runs the named suite at the given size; size <= 0 selects the default.
inline SuiteReport run_suite(const std::string& name, std::int64_t size = 0) {
  auto pick = [&](std::int64_t d) { return size > 0 ? size : d; };
  if (name == "jordan") return verify_jordan(pick(512));
  if (name == "transition") return verify_transition(pick(256));
  if (name == "representation") return verify_representation(pick(512));
  if (name == "gl") return verify_gl(pick(32));
  if (name == "phi") return verify_phi(static_cast<std::size_t>(pick(4096)));
  if (name == "cubic") return verify_cubic_suite(static_cast<std::size_t>(pick(10000)));
  if (name == "combinatorics") return verify_combinatorics(static_cast<std::uint64_t>(pick(10000)));
  if (name == "genfun") return verify_genfun(static_cast<std::size_t>(pick(64)));
  if (name == "functional") return verify_functional(static_cast<std::size_t>(pick(100)));
  if (name == "counterexample") return verify_counterexample(pick(256));
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace zeta_orbit

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zeta_orbit/orbit.hpp"
#include "zeta_orbit/verify.hpp"

using namespace zeta_orbit;

TEST(Orbit, PowersOfT) {
  const std::size_t n = 200;
  const auto z = orbit_series(GroupWord::parse("T"), n);
  const auto mu = orbit_series(GroupWord::parse("T^-1"), n);
  for (std::size_t m = 1; m <= n; ++m) {
    ASSERT_EQ(z[m], 1);
    ASSERT_EQ(mu[m], oracle::mobius(m)) << m;
  }
  EXPECT_EQ(orbit_series(GroupWord::parse("1"), n), IntSeries::unit(n));
  EXPECT_EQ(orbit_series_by_matrix(GroupWord::parse("T^2"), n), orbit_series(GroupWord::parse("T T"), n));
}

TEST(Orbit, ClosedFormsMatchMatrices) {
  const std::size_t n = 64;
  for (int m = -2; m <= 2; ++m) {
    for (const char* head : {"S", "S^-1"}) {
      const auto w = GroupWord::parse(std::string(head) + " T^" + std::to_string(m));
      SCOPED_TRACE(w.to_string());
      EXPECT_EQ(orbit_series(w, n), orbit_series_by_matrix(w, n));
    }
  }
}

TEST(Orbit, GeneralWordsGoThroughMatrices) {
  const std::size_t n = 32;
  const auto w = GroupWord::parse("T S T");
  EXPECT_EQ(orbit_series(w, n), orbit_series_by_matrix(w, n));
  // 1.rho(S^2) = -1
  EXPECT_EQ(orbit_series(GroupWord::parse("S S"), n), -IntSeries::unit(n));
  EXPECT_THROW(orbit_series(GroupWord::parse("T S T"), 64, 100), InsufficientWindow);
}

TEST(Phi, OraclesAgree) {
  const std::size_t n = 1024;
  const auto a = phi_via_rhos(n), b = phi_via_matrix(n), c = phi_via_cubic(n);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.a, c.a);
  EXPECT_EQ(a.oracle, "rhos-formula");
  EXPECT_EQ(b.oracle, "matrix-row");
  EXPECT_EQ(c.oracle, "cubic-recursion");
}

TEST(Phi, RegressionValues) {
  const auto a = phi_via_cubic(16).a;
  EXPECT_EQ(a[1], 0);
  EXPECT_EQ(a[2], 1);
  EXPECT_EQ(a[3], 1);
  EXPECT_EQ(a[4], 1);
  EXPECT_EQ(a[6], 1);
  EXPECT_EQ(a[8], 0);
}

TEST(Phi, MatrixOracleRespectsSourceCap) { EXPECT_THROW(phi_via_matrix(64, 100), InsufficientWindow); }

TEST(Phi, DependsOnlyOnExponentPartition) {
  const auto a = phi_via_rhos(2048).a;
  const auto table = partition_table(a);
  EXPECT_EQ(a[12], a[18]);
  EXPECT_EQ(table.at(Partition{2, 1}), a[12]);
  PrimeSieve sieve(2048);
  for (auto p : sieve.primes()) ASSERT_EQ(a[p], 1) << p;
  EXPECT_EQ(partition_string(Partition{3, 2, 1}), "(3,2,1)");
  IntSeries bad = a;
  bad[18] += 1;
  EXPECT_THROW(partition_table(bad), PartitionInconsistency);
}

TEST(Phi, PrimePowerFormula) {
  const auto a = phi_via_rhos(4096).a;
  const auto pp = phi_prime_power_coefficients(12);
  for (std::size_t k = 1; k <= 7; ++k) {
    std::size_t p2 = std::size_t{1} << k, p3 = 1;
    for (std::size_t i = 0; i < k; ++i) p3 *= 3;
    EXPECT_EQ(a[p2], pp[k]) << k;
    EXPECT_EQ(a[p3], pp[k]) << k;
  }
  const auto gf = compose_with_geometric(phi_y_series(12));
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(gf[k], Rational(pp[k])) << k;
}

TEST(Cubic, UniqueSolutionAndVariants) {
  const std::size_t n = 2000;
  EXPECT_TRUE(verify_cubic(n, CubicVariant::plain()).pass);
  const auto omega = CubicVariant::restricted({2, 3});
  EXPECT_EQ(omega.label, "omega{2,3}");
  EXPECT_TRUE(verify_cubic(n, omega).pass);
  EXPECT_TRUE(verify_cubic(n, CubicVariant::twisted(chi4_on_primes, "chi4")).pass);
  EXPECT_TRUE(verify_unit_factor(phi_via_rhos(n).a).pass);
}

TEST(Cubic, RestrictedSolveMatchesRestrictedPhi) {
  const std::size_t n = 1024;
  const std::set<std::uint64_t> two{2};
  const auto solved = solve_cubic(restrict_omega(zeta_series<Integer>(n), two));
  EXPECT_EQ(solved, restrict_omega(phi_via_cubic(n).a, two));
  IntSeries z = zeta_series<Integer>(8);
  z[1] = 2;
  EXPECT_THROW(solve_cubic(z), std::invalid_argument);
}

TEST(Cubic, ResidualDetectsPerturbation) {
  const std::size_t n = 300;
  IntSeries phi = phi_via_rhos(n).a;
  phi[30] += 1;
  const auto r = cubic_residual(zeta_series<Integer>(n), phi);
  EXPECT_EQ(r.first_nonzero(), 30u);
}

TEST(GeneratingSeries, CkClosedForm) {
  for (unsigned k = 2; k <= 16; ++k) EXPECT_EQ(ck_from_definition(k, 64), ck_closed_form(k, 64)) << k;
  EXPECT_THROW(ck_from_definition(1, 8), std::invalid_argument);
}

TEST(GeneratingSeries, PiellipticResidualVanishes) {
  EXPECT_TRUE(pielliptic_residual(phi_y_series(64)).is_zero());
  PowerSeries f = phi_y_series(16);
  f[5] += 1;
  EXPECT_FALSE(pielliptic_residual(f).is_zero());
}

TEST(Resultant, LinearFactors) {
  using P2 = Poly<2>;
  const P2 u = P2::var(0), v = P2::var(1);
  EXPECT_EQ(resultant<2>({-u, P2(1)}, {-v, P2(1)}), u - v);
  EXPECT_EQ((u * u - v * v).substitute<2>({v, u}), v * v - u * u);
}

TEST(FunctionalEquation, ResultantIsGWithUnitFactor) {
  const auto r = functional_resultant();
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, 1);
  const auto report = functional_eq_check(100, 1e-9);
  for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << c.check << " " << c.witness.dump();
}

TEST(FunctionalEquation, SamplesAreDeterministic) {
  const auto a = functional_samples(5), b = functional_samples(5);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(a[i].a, b[i].a);
    EXPECT_EQ(a[i].y, b[i].y);
  }
}

TEST(Discriminant, RootsCheck) {
  const auto report = delta_roots_check();
  for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << c.check << " " << c.witness.dump();
}

TEST(Suites, SmallSizesPass) {
  const std::vector<std::pair<std::string, std::int64_t>> runs{
      {"jordan", 64}, {"transition", 48}, {"counterexample", 96}, {"genfun", 24},
      {"functional", 20}, {"combinatorics", 500}, {"cubic", 500}, {"phi", 256}};
  for (const auto& [name, size] : runs) {
    const auto report = run_suite(name, size);
    EXPECT_TRUE(report.pass()) << name;
    for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << name << ": " << c.check << " " << c.witness.dump();
  }
  EXPECT_THROW(run_suite("nope", 0), std::invalid_argument);
}

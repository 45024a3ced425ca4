#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zeta_orbit/exactnum.hpp"

using namespace zeta_orbit;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Binomial, PascalRule) {
  for (long long a = 1; a <= 60; ++a) {
    for (long long b = 1; b <= a; ++b) EXPECT_EQ(binomial(a, b), binomial(a - 1, b) + binomial(a - 1, b - 1));
  }
}

TEST(Factoring, TotalPrimeFactorsAgainstTrialDivision) {
  EXPECT_EQ(total_prime_factors(360), 6u);
  EXPECT_EQ(total_prime_factors(1), 0u);
  for (std::uint64_t m = 1; m <= 5000; ++m) {
    ASSERT_EQ(total_prime_factors(m), oracle::prime_factors(m).size()) << m;
  }
}

TEST(Factoring, MoebiusAndValuations) {
  for (std::uint64_t m = 1; m <= 5000; ++m) ASSERT_EQ(moebius(m), oracle::mobius(m)) << m;
  EXPECT_EQ(valuation(360, 2), 3u);
  EXPECT_EQ(valuation(360, 3), 2u);
  EXPECT_EQ(two_adic_valuation(96), 5u);
  EXPECT_EQ(odd_part(96), 3u);
}

TEST(Factoring, Partitions) {
  EXPECT_EQ(partition_of(360), (Partition{3, 2, 1}));
  EXPECT_TRUE(partition_of(1).empty());
  EXPECT_EQ(partition_of(12), partition_of(18));
  EXPECT_EQ(partition_of(97), Partition{1});
}

TEST(Factoring, SieveMatchesTrialDivision) {
  PrimeSieve sieve(2000);
  for (std::uint64_t n = 1; n <= 2000; ++n) EXPECT_EQ(sieve.is_prime(n), is_prime(n)) << n;
  EXPECT_EQ(sieve.primes().size(), 303u);
}

TEST(SignedCatalan, ClosedFormRecursionAndCatalan) {
  EXPECT_EQ(catalan_b(4), -5);
  const auto table = signed_catalan_table(64);
  for (unsigned k = 0; k <= 64; ++k) {
    ASSERT_EQ(catalan_b(k), table[k]) << k;
    ASSERT_EQ(table[k], oracle::signed_catalan(k)) << k;
  }
}

TEST(FactorizationTable, MatchesBruteForce) {
  const std::uint64_t max_m = 3000;
  const FactorizationTable table(max_m);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const auto counts = oracle::ordered_factorization_counts(m);
    for (unsigned k = 1; k <= 12; ++k) {
      const oracle::Int expected = k < counts.size() ? counts[k] : oracle::Int(0);
      ASSERT_EQ(table(k, m), expected) << "k=" << k << " m=" << m;
    }
  }
  EXPECT_EQ(alpha(2, 6), 2);
  EXPECT_EQ(alpha(1, 1), 0);
  EXPECT_EQ(alpha(3, 8), 1);
}

TEST(FactorizationTable, Identities) {
  const std::uint64_t max_m = 2000;
  const FactorizationTable table(max_m);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    ASSERT_TRUE(verify_signchar(table, m)) << m;
    for (unsigned k = 2; k <= 12; ++k) ASSERT_TRUE(verify_alphacount(table, m, k)) << m << " " << k;
  }
}

TEST(FactorizationTable, RejectsBadArguments) {
  const FactorizationTable table(10);
  EXPECT_THROW(table(0, 5), std::invalid_argument);
  EXPECT_THROW(table(1, 11), std::out_of_range);
  EXPECT_THROW(FactorizationTable(0), std::invalid_argument);
}

TEST(ZetaRoot, ExponentBoundIsCertified) {
  const auto [lo, hi] = zeta_two_root_enclosure();
  EXPECT_LT(lo, hi);
  EXPECT_LT(hi - lo, Rational(1, 1000000));
  EXPECT_LT(hi, alpha_exponent_bound());
  EXPECT_TRUE(exceeds_zeta_two_root(alpha_exponent_bound()));
  EXPECT_TRUE(below_zeta_two_root(Rational(17286, 10000)));
}

TEST(ZetaRoot, AlphaBelowPowerBound) {
  const FactorizationTable table(4096);
  const Rational c = alpha_exponent_bound();
  for (std::uint64_t m = 1; m <= 4096; ++m) {
    for (unsigned k = 1; k <= table.max_k(); ++k) ASSERT_TRUE(within_power_bound(table(k, m), m, c)) << m;
  }
}

TEST(PowerBound, ExactTieBreak) {
  EXPECT_TRUE(within_power_bound(8, 4, Rational(3, 2)));
  EXPECT_FALSE(within_power_bound(9, 4, Rational(3, 2)));
  EXPECT_TRUE(within_power_bound(0, 7, Rational(1)));
}

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "zeta_orbit/matrices.hpp"
#include "zeta_orbit/rep.hpp"

using namespace zeta_orbit;

namespace {

oracle::Dense to_dense(const IntMatrix& m) {
  auto d = oracle::dense(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (index_t j = 1; j <= m.cols(); ++j) {
    for (const auto& e : m.column(j)) d[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(j)] = e.value;
  }
  return d;
}

template <class Scalar>
void expect_same_columns(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b, index_t cols) {
  const auto m = column_difference(a, b, cols);
  EXPECT_FALSE(m) << "first mismatch at (" << m->row << "," << m->col << "): " << m->left << " vs " << m->right;
}

}  // namespace

TEST(Windowed, ProductMatchesDenseOracle) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> v(-3, 3);
  const index_t n = 24;
  auto random_matrix = [&](index_t rows, index_t cols, index_t growth) {
    return IntMatrix::build(rows, cols, growth, std::nullopt, [&](index_t j) {
      IntMatrix::Column c;
      for (index_t i = 1; i <= std::min(rows, growth * j); ++i) {
        const int x = v(rng);
        if (x != 0) c.push_back({i, x});
      }
      return c;
    });
  };
  const auto a = random_matrix(6 * n, 3 * n, 2);
  const auto b = random_matrix(3 * n, n, 3);
  const auto c = windowed_mul(a, b, n);
  EXPECT_EQ(c.growth(), 6);
  EXPECT_EQ(c.rows(), 6 * n);
  const auto expected = oracle::multiply(to_dense(a), to_dense(b));
  for (index_t j = 1; j <= n; ++j) {
    for (index_t i = 1; i <= 6 * n; ++i) {
      ASSERT_EQ(c.at(i, j), expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) << i << "," << j;
    }
  }
}

TEST(Windowed, UndersizedOperandsRejected) {
  EXPECT_THROW(windowed_mul(divisor_matrix(4), divisor_matrix(8), 8), InsufficientWindow);
  EXPECT_THROW(windowed_mul(divisor_matrix(8), divisor_matrix(4), 8), InsufficientWindow);
  EXPECT_THROW(divisor_matrix(4).leading(5, 4), InsufficientWindow);
  EXPECT_THROW(psi_expand(matrix_Jinf(2), 64), InsufficientWindow);
  EXPECT_THROW(expand_gamma(gamma_generators(2).s, 32), InsufficientWindow);
  EXPECT_THROW(column_difference(divisor_matrix(4), divisor_matrix(8), 8), InsufficientWindow);
}

TEST(Windowed, CertificatesEnforced) {
  IntMatrix m(8, 2, 1);
  EXPECT_THROW(m.set_column(1, {{3, 1}}), CertificateViolation);
  IntMatrix banded(8, 4, 2, 0);
  EXPECT_THROW(banded.set_column(2, {{4, 1}}), CertificateViolation);
  EXPECT_NO_THROW(banded.set_column(2, {{2, 1}, {1, 5}}));
  EXPECT_EQ(banded.at(1, 2), 5);
  EXPECT_THROW(IntMatrix(2, 2, 0), std::invalid_argument);
}

TEST(Divisor, SquareCountsDivisors) {
  const index_t n = 360;
  const auto dd = windowed_mul(divisor_matrix(n), divisor_matrix(n), n);
  for (index_t j = 1; j <= n; ++j) {
    long count = 0;
    for (index_t d = 1; d <= j; ++d) count += (j % d == 0);
    ASSERT_EQ(dd.at(1, j), count) << j;
  }
  expect_same_columns(windowed_mul(divisor_matrix(n), moebius_matrix(n), n), identity_matrix(n), n);
}

TEST(Jordan, ZConjugatesDToJ) {
  const index_t n = 128;
  const auto z = matrix_Z(n);
  expect_same_columns(windowed_mul(z, divisor_matrix(n), n), windowed_mul(matrix_J(n), z, n), n);
  expect_same_columns(windowed_mul(z, matrix_Zinv(n), n), identity_matrix(n), n);
  const auto xzx = windowed_mul(matrix_X(n), windowed_mul(z, matrix_X(n), n), n);
  expect_same_columns(xzx, matrix_Zinv(n), n);
}

TEST(Jordan, ZIsInvariantUnderOddScaling) {
  const index_t n = 600;
  const auto z = matrix_Z(n);
  for (index_t m : {3, 5, 7, 9, 15}) {
    for (index_t i = 1; i * m <= n && i <= 40; ++i) {
      for (index_t j = 1; j * m <= n && j <= 40; ++j) ASSERT_EQ(z.at(i * m, j * m), z.at(i, j)) << i << "," << j << " m=" << m;
    }
  }
  for (index_t j = 1; j <= n; ++j) ASSERT_EQ(z.at(j, j), 1);
}

TEST(Transition, RowsMatchIterationOracle) {
  const std::size_t n = 80;
  const auto expected = oracle::transition_rows(n);
  const auto p = matrix_P(static_cast<index_t>(n));
  for (std::size_t l = 1; l <= n; ++l) {
    for (std::size_t j = 1; j <= n; ++j) {
      ASSERT_EQ(p.at(static_cast<index_t>(l), static_cast<index_t>(j)), expected[l][j]) << l << "," << j;
    }
  }
}

TEST(Transition, QFactorsThroughA) {
  const std::size_t n = 80;
  auto jinf = oracle::dense(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    jinf[i][i] = 1;
    if (i + 1 <= n) jinf[i][i + 1] = 1;
  }
  const auto expected = oracle::multiply(oracle::matrix_A(n), jinf);
  const auto q = matrix_Q(static_cast<index_t>(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t m = 1; m <= n; ++m) {
      ASSERT_EQ(q.at(static_cast<index_t>(i), static_cast<index_t>(m)), expected[i][m]) << i << "," << m;
    }
  }
}

TEST(Transition, PAndQAreInverse) {
  const index_t n = 96;
  expect_same_columns(windowed_mul(matrix_P(n), matrix_Q(n), n), identity_matrix(n), n);
  expect_same_columns(windowed_mul(matrix_Q(n), matrix_P(n), n), identity_matrix(n), n);
}

TEST(Psi, CarriesJordanBlockToJ) {
  const index_t n = 256;
  expect_same_columns(psi_expand(matrix_Jinf(16), n), matrix_J(n), n);
}

TEST(Psi, PlacesEntriesOnDyadicTowers) {
  const auto t = tau<Integer>(Letter::S, 8);
  const auto psi = psi_expand(t, 64);
  EXPECT_EQ(psi.growth(), 2);
  EXPECT_EQ(psi.at(3, 6), t.at(1, 2));
  EXPECT_EQ(psi.at(12, 24), t.at(3, 4));
  EXPECT_EQ(psi.at(5, 5), t.at(1, 1));
  EXPECT_EQ(psi.at(2, 4), t.at(2, 3));
  EXPECT_EQ(psi.at(3, 5), 0);
  EXPECT_THROW(psi_expand(divisor_matrix(8), 8), std::invalid_argument);
}

TEST(Expansion, IsMultiplicative) {
  const index_t n = 64;
  const std::size_t order = n;
  const auto gens = gamma_generators(order);
  const auto w = gamma_W(order);
  const GammaMatrix pairs[][2] = {{gens.s, gens.j}, {gens.j, gens.s}, {gens.j, gens.j.inverse()}, {w, gens.s}};
  for (const auto& pr : pairs) {
    const auto product = expand_gamma(pr[0] * pr[1], n);
    const auto right = expand_gamma(pr[1], n);
    const auto left = expand_gamma(pr[0], right.growth() * n);
    expect_same_columns(windowed_mul(left, right, n), product, n);
  }
}

TEST(Expansion, SSquaredIsMinusIdentity) {
  const index_t n = 40;
  const auto s = expand_gamma<Integer>(gamma_generators(n).s, 2 * n);
  const auto sq = windowed_mul(s, s.leading(2 * n, n), n);
  expect_same_columns(sq, scalar_identity<Integer>(n, n, Integer(-1)), n);
}

TEST(Counterexample, PairIsInverse) {
  const index_t n = 64;
  const auto [b, bp] = counterexample_pair(n);
  expect_same_columns(windowed_mul(b, bp, n), identity_matrix(n), n);
  expect_same_columns(windowed_mul(bp, b, n), identity_matrix(n), n);
  EXPECT_EQ(bp.at(1, 10), 256);
}

#include <random>

#include <gtest/gtest.h>

#include "zeta_orbit/rep.hpp"
#include "zeta_orbit/verify.hpp"

using namespace zeta_orbit;

namespace {

template <class Scalar>
void expect_same_columns(const WindowedMatrix<Scalar>& a, const WindowedMatrix<Scalar>& b, index_t cols) {
  const auto m = column_difference(a, b, cols);
  EXPECT_FALSE(m) << "first mismatch at (" << m->row << "," << m->col << "): " << m->left << " vs " << m->right;
}

GroupWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  static const Letter letters[] = {Letter::S, Letter::SInv, Letter::T, Letter::TInv};
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = letters[pick(rng)];
  return GroupWord(std::move(w));
}

}  // namespace

TEST(Word, Parsing) {
  const auto w = GroupWord::parse("S T^-2 S^3");
  EXPECT_EQ(w.to_string(), "S T^-1 T^-1 S S S");
  EXPECT_EQ(w.growth(), 16);
  EXPECT_TRUE(GroupWord::parse("1").empty());
  EXPECT_TRUE(GroupWord::parse("").empty());
  EXPECT_EQ(GroupWord::parse("S^-1").letters(), std::vector<Letter>{Letter::SInv});
  EXPECT_THROW(GroupWord::parse("W"), WNotEnabled);
  EXPECT_NO_THROW(GroupWord::parse("W S", true));
  EXPECT_THROW(GroupWord::parse("Q"), WordSyntaxError);
  EXPECT_THROW(GroupWord::parse("S^"), WordSyntaxError);
  EXPECT_THROW(GroupWord::parse("S^2x"), WordSyntaxError);
  EXPECT_THROW(GroupWord::parse("T^5000"), WordSyntaxError);
}

TEST(Word, GroupMatrices) {
  EXPECT_EQ(GroupWord::parse("S").matrix(), (Mat2{0, -1, 1, 0}));
  EXPECT_EQ(GroupWord::parse("T").matrix(), (Mat2{1, 1, 0, 1}));
  EXPECT_EQ(GroupWord::parse("S^4").matrix(), (Mat2{1, 0, 0, 1}));
  EXPECT_EQ(GroupWord::parse("S T S T S T S T S T S T").matrix(), (Mat2{1, 0, 0, 1}));
  EXPECT_EQ(GroupWord::parse("S^2").matrix(), GroupWord::parse("S T S T S T").matrix());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_word(rng, 8);
    EXPECT_EQ((w * w.inverse()).matrix(), (Mat2{1, 0, 0, 1}));
  }
}

TEST(Word, ColumnBudget) {
  const auto w = GroupWord::parse("S T S");
  EXPECT_EQ(Representation<Integer>::column_budget(w, 4), (std::vector<index_t>{8, 8, 4}));
  EXPECT_EQ(Representation<Integer>::source_rows(w, 4), 16);
  EXPECT_EQ(Representation<Integer>::affordable_cols(w, 4096), 1024);
}

TEST(Tau, FirstStageSquaresToMinusIdentity) {
  const index_t n = 48;
  const auto s = tau1<Integer>(Letter::S, 2 * n);
  expect_same_columns(windowed_mul(s, s.leading(2 * n, n), n), scalar_identity<Integer>(n, n, Integer(-1)), n);
}

TEST(Tau, JordanGeneratorBecomesJordanBlock) {
  const index_t n = 64;
  expect_same_columns(tau<Integer>(Letter::T, n), matrix_Jinf(n), n);
  const auto s = tau<Integer>(Letter::S, n);
  EXPECT_EQ(s.band(), 1);
  EXPECT_TRUE(diagonal_blocks_conjugate(s, letter_matrix(Letter::S)));
}

TEST(Rho, TIsTheDivisorMatrix) {
  const index_t n = 128;
  expect_same_columns(rho_pipeline<Integer>(Letter::T, n), divisor_matrix(n), n);
  expect_same_columns(rho_pipeline<Integer>(Letter::TInv, n), moebius_matrix(n), n);
}

TEST(Rho, SSquaredIsMinusIdentity) {
  const index_t n = 64;
  const auto s2 = rho(GroupWord::parse("S S"), n);
  expect_same_columns(s2, scalar_identity<Integer>(n, n, Integer(-1)), n);
  const auto s = rho_pipeline<Integer>(Letter::S, n);
  EXPECT_FALSE(growth_violation(s, 2));
  EXPECT_EQ(s.at(1, 1), 0);
}

TEST(Rho, IntegralWhenBuiltOverRationals) {
  const index_t n = 64;
  const auto s = rho_pipeline<Rational>(Letter::S, n);
  for (index_t j = 1; j <= n; ++j) {
    for (const auto& e : s.column(j)) ASSERT_EQ(e.value.get_den(), 1) << e.row << "," << j;
  }
}

TEST(Rho, IsAHomomorphismOnRandomWords) {
  std::mt19937_64 rng(2024);
  Representation<Integer> rep;
  const index_t n = 8;
  for (int trial = 0; trial < 12; ++trial) {
    const auto u = random_word(rng, 3);
    const auto v = random_word(rng, 3);
    const auto uv = rep.evaluate(u * v, n);
    const auto split = windowed_mul(rep.evaluate(u, v.growth() * n), rep.evaluate(v, n), n);
    SCOPED_TRACE(u.to_string() + " | " + v.to_string());
    expect_same_columns(uv, split, n);
    expect_same_columns(rep.evaluate(u * u.inverse(), n), scalar_identity<Integer>(n, n), n);
  }
}

TEST(Rho, SourceCapEnforced) {
  EXPECT_THROW(rho(GroupWord::parse("S^4"), 64, 512), InsufficientWindow);
  EXPECT_NO_THROW(rho(GroupWord::parse("S^4"), 32, 512));
  EXPECT_THROW(rho(GroupWord::parse("W", true), 4), WNotEnabled);
  EXPECT_THROW(Representation<Integer>(true), std::invalid_argument);
}

TEST(GL, WIsAnInvolutionAndInvertsS) {
  const index_t n = 16;
  Representation<Rational> rep(true);
  const auto id = scalar_identity<Rational>(n, n);
  expect_same_columns(rep.evaluate(GroupWord::parse("W W", true), n), id, n);
  expect_same_columns(rep.evaluate(GroupWord::parse("W S W S", true), n), id, n);
  const auto w = rho_W(n);
  bool fractional = false;
  for (index_t j = 1; j <= n; ++j) {
    for (const auto& e : w.column(j)) fractional = fractional || e.value.get_den() != 1;
  }
  EXPECT_TRUE(fractional);
}

TEST(Relations, HoldOnSmallSource) {
  const auto report = verify_relations(512);
  for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << c.check << " " << c.witness.dump();
  EXPECT_EQ(report.checks.size(), 3u);
}

TEST(Suites, RepresentationAndGLAtSmallSize) {
  for (const auto& [name, size] : std::vector<std::pair<std::string, std::int64_t>>{{"representation", 64}, {"gl", 16}}) {
    const auto report = run_suite(name, size);
    for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << name << ": " << c.check << " " << c.witness.dump();
  }
}

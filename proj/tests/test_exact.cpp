#include "oracles.hpp"

#include <cubic/errors.hpp>
#include <cubic/matq.hpp>
#include <cubic/rat.hpp>
#include <cubic/wpoly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cubic;

namespace {

WPoly P(const std::string& s) { return WPoly::parse(VarSet::chern(), s); }

}  // namespace

TEST(Rat, NormalisesSignAndLowestTerms) {
  EXPECT_EQ(Rat(BigInt(6), BigInt(-4)).str(), "-3/2");
  EXPECT_EQ(Rat::parse("-10/4"), Rat(BigInt(-5), BigInt(2)));
  EXPECT_EQ(Rat::parse("7").str(), "7");
  EXPECT_TRUE(Rat::parse("4/2").is_integer());
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), UsageError);
  EXPECT_THROW(Rat(1) / Rat(0), UsageError);
  EXPECT_THROW(Rat::parse("1/"), UsageError);
  EXPECT_THROW(Rat::parse("abc"), UsageError);
}

TEST(Rat, BeyondMachineWords) {
  Rat r(1);
  for (int i = 0; i < 40; ++i) r *= Rat(1000003);
  EXPECT_EQ(Rat::parse(r.str()), r);
  EXPECT_GT(r.str().size(), 200u);
  EXPECT_EQ(binomial(100, 50).get_str(), "100891344545564193334812497256");
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}

TEST(WPoly, ProductExamples) {
  EXPECT_EQ(poly_mul(P("x"), P("x")).str(), "x^2");
  EXPECT_EQ(poly_mul(P("x^2 - y"), P("1")), P("x^2 - y"));
  EXPECT_EQ(poly_mul(P("x^2 - y"), P("x^2 - y")).str(), "x^4 - 2*x^2*y + y^2");
}

TEST(WPoly, GradedComponent) {
  EXPECT_EQ(graded_component(P("1 + x + y"), 2).str(), "y");
  EXPECT_EQ(graded_component(P("1 + x + y"), 0).str(), "1");
  EXPECT_EQ(graded_component(P("x^3 + x*y"), 3), P("x^3 + x*y"));
  EXPECT_TRUE(graded_component(P("x"), 5).is_zero());
}

TEST(WPoly, CanonicalPrintForm) {
  EXPECT_EQ(P("9*y^2 + 18*x^2*y").str(), "18*x^2*y + 9*y^2");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("-x").str(), "-x");
  EXPECT_EQ(P("1/3*x - 2/5").str(), "1/3*x - 2/5");
  EXPECT_EQ(P("y").homogeneous_degree(), 2);
  EXPECT_FALSE(P("x + y").homogeneous_degree().has_value());
  EXPECT_THROW(P("x +"), UsageError);
  EXPECT_THROW(P("z"), UsageError);
  EXPECT_THROW(P("x") + WPoly(VarSet::roots()), UsageError);
}

TEST(WPoly, MatchesSchoolbookOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const WPoly a = oracle::random_poly(rng, 6);
    const WPoly b = oracle::random_poly(rng, 6);
    EXPECT_EQ(oracle::to_dense(a * b), oracle::schoolbook(oracle::to_dense(a), oracle::to_dense(b)));
  }
}

TEST(WPoly, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const WPoly a = oracle::random_poly(rng, 5);
    const WPoly b = oracle::random_poly(rng, 5);
    const WPoly c = oracle::random_poly(rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(WPoly, ParsePrintRoundTrip) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    WPoly p = oracle::random_poly(rng, 8, 20);
    p *= Rat(BigInt(1), BigInt(den(rng)));
    EXPECT_EQ(WPoly::parse(VarSet::chern(), p.str()), p) << p.str();
  }
}

TEST(WPoly, MonomialsOfDegreeAreGradedLexDescending) {
  const auto m = monomials_of_degree(VarSet::chern(), 5);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m[0], (Exponents{5, 0}));
  EXPECT_EQ(m[1], (Exponents{3, 1}));
  EXPECT_EQ(m[2], (Exponents{1, 2}));
}

TEST(MatQ, KernelExamples) {
  EXPECT_TRUE(kernel_basis(MatQ::identity(2)).empty());
  const auto k1 = kernel_basis(MatQ{{1, 1}});
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(k1[0][0], -k1[0][1]);
  EXPECT_FALSE(k1[0][0].is_zero());
  const auto k2 = kernel_basis(MatQ{{1, 2}, {2, 4}});
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0][0], Rat(-2) * k2[0][1]);
}

TEST(MatQ, SolveExamples) {
  const VecQ b{Rat(4), Rat::parse("-1/2")};
  EXPECT_EQ(solve_linear(MatQ::identity(2), b), b);
  EXPECT_FALSE(solve_linear(MatQ(2, 2), VecQ{Rat(1), Rat(0)}).has_value());
  EXPECT_EQ(solve_linear(MatQ{{1, 1}, {0, 1}}, VecQ{Rat(3), Rat(1)}), (VecQ{Rat(2), Rat(1)}));
  EXPECT_THROW(solve_linear(MatQ::identity(2), VecQ{Rat(1)}), UsageError);
}

TEST(MatQ, DeterminantAndRank) {
  EXPECT_EQ(determinant(MatQ{{2, 1}, {1, 3}}), Rat(5));
  EXPECT_EQ(determinant(MatQ{{0, 1}, {1, 0}}), Rat(-1));
  EXPECT_EQ(determinant(MatQ{{Rat::parse("1/2"), 1}, {1, 2}}), Rat(0));
  EXPECT_THROW(determinant(MatQ(2, 3)), UsageError);
  EXPECT_EQ(rank(MatQ(0, 0)), 0u);
}

TEST(MatQ, RankNullityAndBareissAgreeWithRref) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = dim(rng);
    const std::size_t c = dim(rng);
    MatQ m(r, c);
    // Low-rank bias: some rows copy combinations of earlier ones.
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(BigInt(val(rng)), BigInt(den(rng)));
      if (i >= 2 && trial % 3 == 0) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = m(i - 1, j) - Rat(2) * m(i - 2, j);
      }
    }
    const auto kb = kernel_basis(m);
    EXPECT_EQ(rank(m) + kb.size(), c);
    EXPECT_EQ(rank(m), rref(m).pivots.size());
    for (const auto& v : kb) EXPECT_TRUE(is_zero_vector(m * v));
    VecQ x(c);
    for (auto& e : x) e = Rat(val(rng));
    const VecQ b = m * x;
    const auto sol = solve_linear(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, b);
    if (r == c) EXPECT_EQ(determinant(m).is_zero(), rank(m) < r);
  }
}

TEST(MatQ, ProductAndTranspose) {
  const MatQ a{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a * MatQ::identity(3), a);
  EXPECT_EQ((a * a.transpose()), (MatQ{{14, 32}, {32, 77}}));
}

#include "oracles.hpp"

#include <cubic/errors.hpp>
#include <cubic/fano.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace cubic;
using namespace cubic::fano;

namespace {

WPoly mono(int i, int j) { return WPoly::monomial(VarSet::chern(), {i, j}); }

std::vector<std::size_t> ranks(int n) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= 2 * (n - 2); ++k) out.push_back(taut_rank_F(n, k));
  return out;
}

}  // namespace

TEST(FanoPairing, Examples) {
  EXPECT_EQ(fano_pairing(2, 0).matrix, (MatQ{{27}}));
  EXPECT_EQ(fano_pairing(3, 0).matrix, (MatQ{{45, 27}}));
  EXPECT_EQ(fano_pairing(3, 1).matrix, (MatQ{{45}}));
  const auto p = fano_pairing(3, 2);
  EXPECT_EQ(p.left.size(), 2u);
  EXPECT_EQ(p.right.size(), 1u);
}

TEST(FanoPairing, RangeErrors) {
  EXPECT_THROW(fano_pairing(1, 0), UnsupportedRange);
  EXPECT_THROW(fano_pairing(3, 3), UnsupportedRange);
  EXPECT_THROW(fano_pairing(3, -1), UnsupportedRange);
  EXPECT_THROW(taut_rank_F(4, 5), UnsupportedRange);
}

TEST(FanoPairing, TransposeSymmetry) {
  for (int n = 2; n <= 8; ++n) {
    const int top = 2 * (n - 2);
    for (int k = 0; k <= top; ++k) {
      const auto a = fano_pairing(n, k);
      const auto b = fano_pairing(n, top - k);
      EXPECT_EQ(a.matrix, b.matrix.transpose());
      EXPECT_EQ(a.left, b.right);
    }
  }
}

TEST(TautRank, KnownTables) {
  EXPECT_EQ(ranks(2), (std::vector<std::size_t>{1}));
  EXPECT_EQ(ranks(3), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(ranks(4), (std::vector<std::size_t>{1, 1, 2, 1, 1}));
  EXPECT_EQ(ranks(5), (std::vector<std::size_t>{1, 1, 2, 2, 2, 1, 1}));
  EXPECT_EQ(ranks(6), (std::vector<std::size_t>{1, 1, 2, 2, 3, 2, 2, 1, 1}));
}

TEST(TautRank, BoundedByBothSidesAndPerfect) {
  for (int n = 2; n <= 10; ++n) {
    const auto ring = grassmann::build_ring(n);
    const int top = 2 * (n - 2);
    for (int k = 0; k <= top; ++k) {
      const auto p = fano_pairing(ring, k);
      EXPECT_LE(taut_rank_F(ring, k), std::min(ring->dim(k), ring->dim(top - k)));
      EXPECT_EQ(taut_rank_F(ring, k), taut_rank_F(ring, top - k));
      EXPECT_TRUE(pairing_is_perfect(p));
    }
    EXPECT_EQ(taut_rank_F(ring, 0), 1u);
  }
}

TEST(TautTable, RowsMatchRanks) {
  const auto t = taut_table(4);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[2].k, 2);
  EXPECT_EQ(t[2].dim_G, 2u);
  EXPECT_EQ(t[2].rank, 2u);
}

TEST(ExtraRelation, KnownGenerators) {
  const auto r3 = extra_relation(3);
  EXPECT_EQ(r3.kernel_dimension, 1u);
  EXPECT_EQ(r3.P.str(), "x^2 - 5/3*y");
  const auto r4 = extra_relation(4);
  EXPECT_EQ(r4.P.coeff({3, 0}), Rat(1));
  EXPECT_GE(r4.kernel_dimension, 1u);
  // Kernel (11/21, -13/7, 1) on x^4, x^2 y, y^2, rescaled to a leading 1.
  EXPECT_EQ(extra_relation(5).P.str(), "x^4 - 39/11*x^2*y + 21/11*y^2");
  EXPECT_THROW(extra_relation(2), UnsupportedRange);
}

TEST(ExtraRelation, AnnihilatesFanoClass) {
  for (int n = 3; n <= 12; ++n) {
    const auto rel = extra_relation(n);
    const auto ring = grassmann::build_ring(n);
    EXPECT_EQ(rel.P.homogeneous_degree(), n - 1);
    EXPECT_EQ(rel.P.coeff({n - 1, 0}), Rat(1));
    EXPECT_GE(rel.kernel_dimension, ring->dim(n - 1) - ring->dim(n + 3));
    EXPECT_TRUE((grassmann::normal_form(ring, rel.P, n - 1) * grassmann::fano_class(ring)).is_zero());
  }
}

TEST(IdealDecomposition, Examples) {
  for (int n = 3; n <= 6; ++n) {
    const WPoly r = mono(2, 0) * grassmann::complete_symmetric(n + 1);
    const auto cof = ideal_decomposition(n, r);
    ASSERT_TRUE(cof.has_value());
    EXPECT_EQ(cof->A.str(), "x^2");
    EXPECT_TRUE(cof->B.is_zero());

    const auto rel = extra_relation(n);
    EXPECT_TRUE(ideal_decomposition(n, rel.P * grassmann::sym_power_chern(3).at(4)).has_value());

    const auto ring = grassmann::build_ring(n);
    const WPoly top = mono(n + 3, 0);
    EXPECT_EQ(ideal_decomposition(n, top).has_value(), grassmann::normal_form(ring, top).is_zero());
  }
  EXPECT_THROW(ideal_decomposition(3, mono(1, 0)), UsageError);
}

TEST(IdealDecomposition, MembershipIffNormalFormVanishes) {
  std::mt19937 rng(29);
  std::bernoulli_distribution pick(0.5);
  for (int n = 3; n <= 6; ++n) {
    const auto ring = grassmann::build_ring(n);
    int members = 0;
    for (int t = 0; t < 1000; ++t) {
      WPoly r;
      if (pick(rng)) {
        r = oracle::random_homogeneous(rng, 2) * grassmann::complete_symmetric(n + 1) +
            oracle::random_homogeneous(rng, 1) * grassmann::complete_symmetric(n + 2);
      } else {
        r = oracle::random_homogeneous(rng, n + 3);
      }
      const auto cof = ideal_decomposition(n, r);
      const bool vanishes = grassmann::normal_form(ring, r, n + 3).is_zero();
      ASSERT_EQ(cof.has_value(), vanishes) << r.str();
      if (cof) {
        ++members;
        EXPECT_EQ(cof->A * grassmann::complete_symmetric(n + 1) + cof->B * grassmann::complete_symmetric(n + 2), r);
      }
    }
    EXPECT_GT(members, 400);
  }
}

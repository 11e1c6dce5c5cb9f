#include "oracles.hpp"

#include <cubic/errors.hpp>
#include <cubic/fano.hpp>
#include <cubic/hodge.hpp>

#include <gtest/gtest.h>

using namespace cubic;
using namespace cubic::hodge;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(HodgeCubic, KnownEntries) {
  EXPECT_EQ(hodge_cubic(3).at(3, 2, 1), 5);
  EXPECT_EQ(hodge_cubic(3).at(3, 3, 0), 0);
  EXPECT_EQ(hodge_cubic(4).at(4, 3, 1), 1);
  EXPECT_EQ(hodge_cubic(4).at(4, 2, 2), 21);
  EXPECT_EQ(primitive_dimension(4), 22);
  EXPECT_EQ(hodge_cubic(2).at(2, 1, 1), 7);
  EXPECT_EQ(hodge_cubic(1).betti(1), 2);
  EXPECT_THROW(hodge_cubic(0), UnsupportedRange);
}

TEST(HodgeCubic, MatchesJacobianRingCount) {
  for (int n = 1; n <= 12; ++n) {
    const auto d = hodge_cubic(n);
    EXPECT_EQ(EPoly::from_diamond(d).coeffs(), oracle::cubic_e(n)) << n;
    EXPECT_TRUE(d.is_hodge_symmetric());
    EXPECT_TRUE(d.all_nonnegative());
    for (const auto& [cell, v] : d.entries()) EXPECT_EQ(d.at(2 * n - cell.k, n - cell.p, n - cell.q), v);
  }
}

TEST(EulerCubic, SpotValuesAndCrossCheck) {
  EXPECT_EQ(euler_cubic(1), 0);
  EXPECT_EQ(euler_cubic(2), 9);
  EXPECT_EQ(euler_cubic(3), -6);
  EXPECT_EQ(euler_cubic(4), 27);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(euler_cubic(n), hodge_cubic(n).euler());
    EXPECT_EQ(euler_cubic(n), 3 * top_chern_coefficient(n));
  }
}

TEST(Sym2Diamond, SmallCases) {
  HodgeDiamond point;
  point.add({0, 0, 0}, 1);
  EXPECT_EQ(sym2_diamond(point), point);

  HodgeDiamond odd;
  odd.add({1, 1, 0}, 1);
  odd.add({1, 0, 1}, 1);
  const auto s = sym2_diamond(odd);
  EXPECT_EQ(s.betti(2), 1);
  EXPECT_EQ(s.at(2, 1, 1), 1);

  HodgeDiamond mid;
  mid.add({3, 2, 1}, 5);
  mid.add({3, 1, 2}, 5);
  const auto m = sym2_diamond(mid);
  EXPECT_EQ(m.betti(6), 45);
  EXPECT_EQ(m.at(6, 4, 2), 10);
  EXPECT_EQ(m.at(6, 3, 3), 25);
  EXPECT_EQ(m.at(6, 2, 4), 10);
}

TEST(Sym2Diamond, AgreesWithSymmetricSquareFormula) {
  for (int n = 1; n <= 10; ++n) {
    const auto d = hodge_cubic(n);
    EXPECT_EQ(EPoly::from_diamond(sym2_diamond(d)).coeffs(), oracle::sym2(oracle::cubic_e(n))) << n;
  }
  // Sym^2 of an elliptic curve is a P^1-bundle over it.
  const EPoly curve = EPoly::from_diamond(hodge_cubic(1));
  EXPECT_EQ(EPoly::from_diamond(sym2_diamond(hodge_cubic(1))), curve * EPoly::projective_space(1));
}

TEST(EHilb2, KnownValueAndEuler) {
  EXPECT_EQ(e_hilb2(2).str(), "1 + 8*u*v + 36*u^2*v^2 + 8*u^3*v^3 + u^4*v^4");
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(e_hilb2(n).coeffs(), oracle::hilb2(n)) << n;
    const BigInt chi = euler_cubic(n);
    EXPECT_EQ(e_hilb2(n).evaluate_at_one(), (chi * chi + chi) / 2 + (n - 1) * chi);
  }
}

TEST(EFano, KnownInvariants) {
  EXPECT_EQ(e_fano(2).str(), "27");
  EXPECT_EQ(e_fano(3).evaluate_at_one(), 27);
  EXPECT_EQ(fano_diamond(3).at(1, 1, 0), 5);
  EXPECT_EQ(fano_diamond(3).betti(1), 10);
  EXPECT_EQ(fano_diamond(3).betti(2), 45);
  const auto f4 = fano_diamond(4);
  EXPECT_EQ(f4.betti(2), 23);
  EXPECT_EQ(f4.at(2, 2, 0), 1);
  EXPECT_EQ(f4.at(2, 1, 1), 21);
  EXPECT_EQ(f4.at(2, 0, 2), 1);
  EXPECT_EQ(f4.betti(4), 276);
  EXPECT_THROW(e_fano(1), UnsupportedRange);
}

TEST(EFano, ChiValues) {
  const std::vector<long> chi{27, 27, 324, 702, 4185, 13365, 61074, 226800, 945999};
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(e_fano(n).evaluate_at_one(), chi[n - 2]) << n;
}

TEST(EFano, MotivicRelationAndShape) {
  for (int n = 2; n <= 10; ++n) {
    const EPoly f = e_fano(n);
    EXPECT_EQ(e_hilb2(n), e_cubic(n) * EPoly::projective_space(n) + f.times_uv_power(2));
    EXPECT_TRUE(f.is_symmetric());
    const auto d = fano_diamond(n);
    EXPECT_TRUE(d.all_nonnegative());
    EXPECT_TRUE(d.is_hodge_symmetric());
    EXPECT_EQ(EPoly::from_diamond(d), f);
    if (n >= 3) {
      const int dim = 2 * (n - 2);
      EXPECT_EQ(f.at(dim, dim), 1);
      EXPECT_EQ(d.max_degree(), 2 * dim);
      for (const auto& [cell, v] : d.entries()) EXPECT_EQ(d.at(2 * dim - cell.k, dim - cell.p, dim - cell.q), v);
    }
  }
}

TEST(EPoly, Arithmetic) {
  const EPoly p = EPoly::projective_space(2);
  EXPECT_EQ(p.str(), "1 + u*v + u^2*v^2");
  EXPECT_EQ(p.times_uv_power(3).divided_by_uv_power(3), p);
  EXPECT_THROW(p.divided_by_uv_power(1), NonIntegralResult);
  EXPECT_EQ(EPoly::tate_range(1, 2), p - EPoly::tate_range(0, 0));
  EXPECT_EQ(EPoly::tate_range(3, 2).str(), "0");
  EXPECT_EQ((p * p).evaluate_at_one(), 9);
}

TEST(HodgeDiamond, ShiftAndArithmetic) {
  HodgeDiamond d;
  d.add({1, 1, 0}, 2);
  d.add({1, 0, 1}, 2);
  const auto s = d.shifted(1);
  EXPECT_EQ(s.at(3, 2, 1), 2);
  EXPECT_EQ(s.euler(), -4);
  EXPECT_TRUE((d - d).empty());
  EXPECT_FALSE((HodgeDiamond() - d).all_nonnegative());
  HodgeDiamond lop;
  lop.add({1, 1, 0}, 1);
  EXPECT_FALSE(lop.is_hodge_symmetric());
  EXPECT_THROW(d.add({2, 2, 1}, 1), UsageError);
}

TEST(GsStructure, TateMultiplicities) {
  // A cubic surface has 27 lines; 21 + 6 of them are accounted for by Sym^2 H
  // and H, leaving no Tate part.
  EXPECT_EQ(gs_structure(2), big({0}));
  EXPECT_EQ(gs_structure(3), big({1, 0, 1}));
  EXPECT_EQ(gs_structure(4), big({1, 1, 1, 1, 1}));
  EXPECT_EQ(gs_structure(5), big({1, 1, 2, 1, 2, 1, 1}));
  EXPECT_EQ(gs_structure(6), big({1, 1, 2, 2, 2, 2, 2, 1, 1}));
  for (int n = 2; n <= 10; ++n) {
    const auto gs = gs_structure_full(n);
    ASSERT_EQ(static_cast<int>(gs.a.size()), 2 * (n - 2) + 1);
    EXPECT_TRUE(gs.remainder.all_nonnegative());
    for (const auto& [cell, v] : gs.remainder.entries()) EXPECT_EQ(cell.p, cell.q);
    for (std::size_t k = 0; k < gs.a.size(); ++k) EXPECT_EQ(gs.a[k], gs.a[gs.a.size() - 1 - k]);
    if (n >= 3) EXPECT_EQ(gs.a[0], 1);
  }
}

TEST(GsStructure, PrimitiveTwistPlacement) {
  for (int n = 2; n <= 8; ++n) {
    const auto h = primitive_twisted(n);
    for (const auto& [cell, v] : h.entries()) EXPECT_EQ(cell.k, n - 2);
    EXPECT_EQ(h.total_dimension(), primitive_dimension(n));
  }
}

TEST(RankRFX, SmallCasesAndFormula) {
  EXPECT_EQ(rank_R_FX(3, 0), 1u);
  EXPECT_EQ(rank_R_FX(3, 2), 4u);
  for (int n = 3; n <= 7; ++n) {
    const int top = 2 * (n - 2) + n;
    EXPECT_EQ(rank_R_FX(n, top + 1), 0u);
    EXPECT_EQ(rank_R_FX(n, top), 1u);
    std::size_t total = 0;
    for (int k = 0; k <= top; ++k) total += rank_R_FX(n, k);
    std::size_t taut = 0;
    for (int a = 0; a <= 2 * (n - 2); ++a) taut += fano::taut_rank_F(n, a);
    EXPECT_EQ(total, taut * (n + 1) + (n - 1));
  }
  EXPECT_THROW(rank_R_FX(2, 0), UnsupportedRange);
}

#pragma once

// Hodge numbers of cubic hypersurfaces and the E-polynomial form of the
// relation [X^[2]] = [X][P^n] + L^2 [F].

#include <cubic/rat.hpp>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cubic::hodge {

struct HodgeCell {
  int k = 0;  // cohomological degree
  int p = 0;
  int q = 0;
  friend auto operator<=>(const HodgeCell&, const HodgeCell&) = default;
};

/// Per-degree (k, p, q) multiplicity table. Zero entries are not stored;
/// entries may go negative only as intermediate differences.
class HodgeDiamond {
 public:
  using Entries = std::map<HodgeCell, BigInt>;

  void add(HodgeCell cell, const BigInt& v);
  BigInt at(HodgeCell cell) const;
  BigInt at(int k, int p, int q) const { return at({k, p, q}); }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  BigInt betti(int k) const;
  BigInt total_dimension() const;
  /// Alternating sum of Betti numbers.
  BigInt euler() const;
  int max_degree() const;

  /// Tate twist by (-t): (k, p, q) -> (k + 2t, p + t, q + t).
  HodgeDiamond shifted(int t) const;

  bool is_hodge_symmetric() const;
  bool all_nonnegative() const;

  HodgeDiamond& operator+=(const HodgeDiamond& o);
  HodgeDiamond& operator-=(const HodgeDiamond& o);
  friend HodgeDiamond operator+(HodgeDiamond a, const HodgeDiamond& b) { return a += b; }
  friend HodgeDiamond operator-(HodgeDiamond a, const HodgeDiamond& b) { return a -= b; }
  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

  std::string str() const;

 private:
  Entries entries_;
};

/// Signed Hodge-Deligne polynomial sum (-1)^k h^{p,q}(H^k) u^p v^q.
class EPoly {
 public:
  using Coeffs = std::map<std::pair<int, int>, BigInt>;

  static EPoly from_diamond(const HodgeDiamond& d);
  /// 1 + uv + ... + (uv)^n.
  static EPoly projective_space(int n);
  /// sum_{k=lo}^{hi} (uv)^k.
  static EPoly tate_range(int lo, int hi);

  void add(int p, int q, const BigInt& v);
  BigInt at(int p, int q) const;
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt evaluate_at_one() const;
  bool is_symmetric() const;

  /// Multiply by (uv)^t.
  EPoly times_uv_power(int t) const;
  /// Exact division by (uv)^t; throws NonIntegralResult when some term has
  /// p < t or q < t.
  EPoly divided_by_uv_power(int t) const;

  EPoly& operator+=(const EPoly& o);
  EPoly& operator-=(const EPoly& o);
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  friend bool operator==(const EPoly&, const EPoly&) = default;

  /// Canonical form "1 + 8*u*v + 36*u^2*v^2 ...", ordered by (p+q, p).
  std::string str() const;

 private:
  Coeffs coeffs_;
};

/// Full Hodge diamond of a smooth cubic n-fold (Jacobian-ring count for the
/// primitive middle cohomology).
HodgeDiamond hodge_cubic(int n);

/// H^n_prim(X, Q(1)): primitive middle cohomology twisted into degree n-2.
/// Requires n >= 2.
HodgeDiamond primitive_twisted(int n);

/// dim H^n_prim(X).
BigInt primitive_dimension(int n);

/// Euler characteristic from c(TX) = (1+h)^{n+2}/(1+3h). Throws CheckFailed
/// if it disagrees with the alternating Betti sum of hodge_cubic(n).
BigInt euler_cubic(int n);

/// Coefficient c with c_n(TX) = c * h^n.
BigInt top_chern_coefficient(int n);

/// Graded-symmetric square: Sym^2 on even degrees, Lambda^2 on odd degrees,
/// tensor products across distinct (k, p, q) cells.
HodgeDiamond sym2_diamond(const HodgeDiamond& d);

EPoly e_cubic(int n);
EPoly e_hilb2(int n);

/// (E(X^[2]) - E(X) E(P^n)) / (uv)^2, checked to be the E-polynomial of a
/// smooth projective variety of dimension 2(n-2).
EPoly e_fano(int n);

/// Hodge diamond read off a pure E-polynomial (cell (p,q) sits in degree
/// p+q). Throws CheckFailed if some sign-stripped coefficient is negative.
HodgeDiamond diamond_from_epoly(const EPoly& e);
HodgeDiamond fano_diamond(int n);

struct GsStructure {
  int n = 0;
  std::vector<BigInt> a;  // a_0 .. a_{2(n-2)}
  HodgeDiamond remainder;
};

/// Tate multiplicities left after removing Sym^2 H and the twists H(-k),
/// 0 <= k <= n-2, from the cohomology of F. Throws CheckFailed if the
/// remainder has off-diagonal or negative entries.
GsStructure gs_structure_full(int n);
std::vector<BigInt> gs_structure(int n);

}  // namespace cubic::hodge

namespace cubic::hodge {

/// Rank of R^k(F x X): decomposable part sum_{a+b=k} rank R^a(F) * rank R^b(X)
/// plus one for each Gamma * c1^j, 0 <= j <= n-2. Requires n >= 3.
std::size_t rank_R_FX(int n, int k);

}  // namespace cubic::hodge

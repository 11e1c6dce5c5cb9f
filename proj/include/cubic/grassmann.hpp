#pragma once

// Chow ring of the Grassmannian of lines G = Gr(2, n+2), presented as
// Q[c1, c2] / (h_{n+1}, h_{n+2}) with c1 = sigma_1, c2 = sigma_{1,1}
// (Chern classes of the dual tautological subbundle).

#include <cubic/matq.hpp>
#include <cubic/parallel.hpp>
#include <cubic/wpoly.hpp>

#include <compare>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cubic::grassmann {

/// h_k(c1, c2) via h_k = c1*h_{k-1} - c2*h_{k-2}; weighted degree k.
WPoly complete_symmetric(int k);

class GRing;
using RingPtr = std::shared_ptr<const GRing>;

/// Immutable quotient ring. For every degree k <= 2n it stores all weight-k
/// monomials, the subset forming the quotient basis, and the reduction
/// matrix taking monomial coordinates to basis coordinates.
class GRing {
 public:
  /// n >= 1 is the dimension of the cubic; G has dimension 2n.
  static RingPtr build(int n);

  int n() const { return n_; }
  int top_degree() const { return 2 * n_; }
  const VarSet& vars() const { return vars_; }

  /// h_{n+1} and h_{n+2}.
  const WPoly& relation(int index) const { return relations_.at(index); }

  std::size_t dim(int k) const;
  std::span<const Exponents> monomials(int k) const { return piece(k).monomials; }
  std::span<const Exponents> basis(int k) const { return piece(k).basis; }
  const MatQ& reduction(int k) const { return piece(k).reduction; }

  /// Basis coordinates of a polynomial whose terms all have degree k.
  VecQ reduce(const WPoly& p, int k) const;

  /// Basis element as a polynomial.
  WPoly basis_poly(int k, std::size_t i) const;

 private:
  struct Piece {
    std::vector<Exponents> monomials;
    std::vector<Exponents> basis;
    MatQ reduction;  // dim x #monomials
  };

  explicit GRing(int n);
  const Piece& piece(int k) const;

  int n_;
  VarSet vars_;
  std::vector<WPoly> relations_;
  std::vector<Piece> pieces_;
};

inline RingPtr build_ring(int n) { return GRing::build(n); }

/// Element of A^degree(G) in basis coordinates.
class GClass {
 public:
  GClass(RingPtr ring, int degree, VecQ coords);
  static GClass zero(RingPtr ring, int degree);

  const RingPtr& ring() const { return ring_; }
  int degree() const { return degree_; }
  const VecQ& coords() const { return coords_; }
  bool is_zero() const { return is_zero_vector(coords_); }

  WPoly to_poly() const;

  GClass& operator+=(const GClass& o);
  GClass& operator-=(const GClass& o);
  friend GClass operator+(GClass a, const GClass& b) { return a += b; }
  friend GClass operator-(GClass a, const GClass& b) { return a -= b; }
  friend GClass operator*(const Rat& s, GClass a);
  /// Ring product; the total degree must not exceed 2n.
  friend GClass operator*(const GClass& a, const GClass& b);
  friend bool operator==(const GClass& a, const GClass& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
  }

 private:
  void require_compatible(const GClass& o) const;

  RingPtr ring_;
  int degree_;
  VecQ coords_;
};

/// Image of a weighted-homogeneous polynomial in the quotient. Throws
/// UsageError when p is inhomogeneous, zero without an explicit degree, or
/// of degree above 2n.
GClass normal_form(const RingPtr& ring, const WPoly& p);
GClass normal_form(const RingPtr& ring, const WPoly& p, int degree);

/// Integral against the fundamental class, normalised so deg(c2^n) = 1.
Rat degree(const GClass& c);

// Schubert calculus oracle --------------------------------------------------

struct Partition2 {
  int a = 0;
  int b = 0;
  int size() const { return a + b; }
  friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

using SchubertSum = std::map<Partition2, Rat>;

/// sigma_{a,b} * sigma_p by the Pieri rule inside the 2 x n box.
SchubertSum pieri_mul(int n, Partition2 lambda, int p);
/// sigma_{a,b} * sigma_{1,1} = sigma_{a+1,b+1} (zero outside the box).
SchubertSum sigma11_mul(int n, Partition2 lambda);

/// sum * c1^e[0] * c2^e[1], expanded by repeated Pieri multiplication.
SchubertSum schubert_times_monomial(int n, const SchubertSum& sum, const Exponents& e);
SchubertSum schubert_of_monomial(int n, const Exponents& e);

/// sigma_{a,b} = h_a h_b - h_{a+1} h_{b-1} as a polynomial in (c1, c2).
WPoly giambelli(Partition2 lambda);

/// Coefficient of the point class sigma_{n,n}.
Rat schubert_degree(int n, const SchubertSum& sum);

std::string to_string(const SchubertSum& sum);

/// Number of pairs of basis monomials whose product disagrees between the
/// quotient-ring normal form and the Pieri/Giambelli route.
std::size_t oracle_mismatches(const RingPtr& ring, Execution exec = Execution::parallel);

/// deg(x_i * y_j) for the bases of A^k and A^{2n-k}.
MatQ poincare_pairing(const RingPtr& ring, int k);

/// Number of partitions (a, b) with n >= a >= b >= 0 and a + b = k.
std::size_t partition_count(int n, int k);

// Chern classes ---------------------------------------------------------------

/// Rewrites a symmetric polynomial in formal roots (a, b) as a polynomial in
/// (x, y) = (a + b, a*b). Throws UsageError if p is not symmetric.
WPoly symmetric_to_chern(const WPoly& p);

/// [c_0, ..., c_{m+1}] of Sym^m of a rank-2 bundle, by the splitting
/// principle.
std::vector<WPoly> sym_power_chern(int m);

/// [F] = c_4(Sym^3) = 18 c1^2 c2 + 9 c2^2 in A^4(G). Requires n >= 2.
GClass fano_class(const RingPtr& ring);

}  // namespace cubic::grassmann

#pragma once

// Finite tautological models of X, X x X and X^3 for a smooth cubic n-fold
// X, with diagonal generators, together with a cohomological model that
// adds formal primitive Kunneth projectors.
//
// Chow-side rewrite rules (deg h^n = 3, c_n(TX) = c * h^n):
//   Delta * h1^s h2^t = Delta_*(h^{s+t}) = 1/3 sum_{a+b=n+s+t} h1^a h2^b  (s+t >= 1)
//   Delta * Delta     = Delta_*(c_n TX)  = c/3 * h1^n h2^n
// and on X^3 the pullbacks of these, Delta_ab * Delta_bc = Delta^3, and
// Delta^3 * h^e = delta_*(h^{|e|}) computed through Delta_12 then Delta_23.
//
// Cohomology-side: [Delta_ab] = 1/3 sum_j h_a^j h_b^{n-j} + d_ab with
// d_ab * h_a = d_ab * h_b = 0 and d_ab * d_bc = 1/3 h_b^n d_ac.

#include <cubic/errors.hpp>
#include <cubic/matq.hpp>
#include <cubic/wpoly.hpp>

#include <array>
#include <compare>
#include <map>
#include <string>

namespace cubic::diagonal {

template <class Derived, class Term>
class SparseClass {
 public:
  using TermMap = std::map<Term, Rat>;

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Term& t) const {
    const auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add(const Term& t, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Derived& operator+=(const Derived& o) {
    require_same_n(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return static_cast<Derived&>(*this);
  }
  Derived& operator-=(const Derived& o) {
    require_same_n(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return static_cast<Derived&>(*this);
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(const Rat& s, Derived a) {
    if (s.is_zero()) {
      a.terms_.clear();
    } else {
      for (auto& [t, c] : a.terms_) c *= s;
    }
    return a;
  }
  friend bool operator==(const Derived& a, const Derived& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 protected:
  explicit SparseClass(int n) : n_(n) {
    if (n < 1) throw UnsupportedRange("cubic models require n >= 1");
  }
  void require_same_n(const SparseClass& o) const {
    if (o.n_ != n_) throw UsageError("classes for different n");
  }

 private:
  int n_;
  TermMap terms_;
};

// X -----------------------------------------------------------------------

/// Element of R*(X) = Q[h]/(h^{n+1}).
class XClass {
 public:
  explicit XClass(int n);
  static XClass power(int n, int k, const Rat& c = Rat(1));

  int n() const { return n_; }
  const VecQ& coeffs() const { return coeffs_; }
  Rat coeff(int k) const { return coeffs_.at(k); }
  bool is_zero() const { return is_zero_vector(coeffs_); }

  /// deg(h^n) = 3.
  Rat degree() const { return 3 * coeffs_.at(n_); }

  friend XClass operator*(const XClass& a, const XClass& b);
  friend XClass operator+(XClass a, const XClass& b);
  friend XClass operator*(const Rat& s, XClass a);
  friend bool operator==(const XClass&, const XClass&) = default;

  /// "1/9*h^2".
  std::string str() const;

 private:
  int n_;
  VecQ coeffs_;
};

// X x X ---------------------------------------------------------------------

/// Basis element h1^r h2^s, or the diagonal (r = s = 0).
struct XXTerm {
  bool diagonal = false;
  int r = 0;
  int s = 0;
  friend auto operator<=>(const XXTerm&, const XXTerm&) = default;
};

class XXClass : public SparseClass<XXClass, XXTerm> {
 public:
  explicit XXClass(int n) : SparseClass(n) {}
  static XXClass monomial(int n, int r, int s, const Rat& c = Rat(1));
  static XXClass diagonal(int n, const Rat& c = Rat(1));
  std::string str() const;
};

XXClass xx_mul(const XXClass& a, const XXClass& b);
/// Degree of the codimension-2n part; deg(h1^n h2^n) = 9.
Rat xx_degree(const XXClass& a);
/// Delta_*(h^m) on the basis.
XXClass diagonal_pushforward(int n, int m);

struct CohXXTerm {
  bool primitive = false;
  int r = 0;
  int s = 0;
  friend auto operator<=>(const CohXXTerm&, const CohXXTerm&) = default;
};

/// Cohomology of X x X restricted to classes built from h1, h2 and the
/// primitive Kunneth projector d. The self-product d*d is the trace of the
/// identity on primitive cohomology: (-1)^n dim H^n_prim / 9 * h1^n h2^n.
class CohXXClass : public SparseClass<CohXXClass, CohXXTerm> {
 public:
  explicit CohXXClass(int n) : SparseClass(n) {}
  static CohXXClass monomial(int n, int r, int s, const Rat& c = Rat(1));
  static CohXXClass primitive(int n, const Rat& c = Rat(1));
  std::string str() const;
};

CohXXClass coh_mul(const CohXXClass& a, const CohXXClass& b);
Rat coh_degree(const CohXXClass& a);
/// Cycle class map Delta -> 1/3 sum_j h1^j h2^{n-j} + d.
CohXXClass cycle_class(const XXClass& a);

// X^3 -------------------------------------------------------------------------

/// Unordered pair of factors; the remaining factor is `other`.
enum class Pair : int { p12 = 0, p13 = 1, p23 = 2 };

struct PairSlots {
  int a;
  int b;
  int other;
};
PairSlots slots(Pair p);
Pair pair_of(int a, int b);

struct X3Term {
  enum class Kind : int { monomial = 0, diagonal = 1, small_diagonal = 2 };
  Kind kind = Kind::monomial;
  Pair pair = Pair::p12;      // diagonal terms only
  std::array<int, 3> e{};     // for diagonal terms only e[other] is set
  friend auto operator<=>(const X3Term&, const X3Term&) = default;
};

/// Element of the Chow model of R*(X^3). Terms of codimension above 3n are
/// dropped; they vanish in every model.
class X3Class : public SparseClass<X3Class, X3Term> {
 public:
  explicit X3Class(int n) : SparseClass(n) {}
  static X3Class monomial(int n, std::array<int, 3> e, const Rat& c = Rat(1));
  /// Delta_ab * h_other^m.
  static X3Class diagonal(int n, Pair p, int m = 0, const Rat& c = Rat(1));
  static X3Class small_diagonal(int n, const Rat& c = Rat(1));
  std::string str() const;
};

X3Class x3_mul(const X3Class& a, const X3Class& b);
/// deg(h1^n h2^n h3^n) = 27.
Rat x3_degree(const X3Class& a);
/// pi_ab^* : R*(X x X) -> R*(X^3), first factor to slot a, second to b.
X3Class pullback(const XXClass& a, Pair p);

struct CohX3Term {
  bool primitive = false;
  Pair pair = Pair::p12;
  std::array<int, 3> e{};
  friend auto operator<=>(const CohX3Term&, const CohX3Term&) = default;
};

/// Cohomological model of X^3: h-monomials plus d_ab * h_other^m. Never
/// contains two primitive factors; d_ab * d_ab is a UsageError.
class CohX3Class : public SparseClass<CohX3Class, CohX3Term> {
 public:
  explicit CohX3Class(int n) : SparseClass(n) {}
  static CohX3Class monomial(int n, std::array<int, 3> e, const Rat& c = Rat(1));
  static CohX3Class primitive(int n, Pair p, int m = 0, const Rat& c = Rat(1));
  bool has_primitive_terms() const;
  std::string str() const;
};

CohX3Class coh_mul(const CohX3Class& a, const CohX3Class& b);
Rat coh_degree(const CohX3Class& a);
CohX3Class cycle_class(const X3Class& a);

/// Push forward along the projection forgetting factor `dropped` (0-based);
/// the remaining factors keep their order.
CohXXClass push_forward(const CohX3Class& a, int dropped);

// Modified diagonals -------------------------------------------------------

/// [Delta^3] in the cohomological model, computed as [Delta_12][Delta_23].
CohX3Class small_diagonal_coh(int n);

using Triple = std::array<int, 3>;

/// a_ijk with [gamma^3] = sum a_ijk h1^i h2^j h3^k, for every i+j+k = 2n
/// with 0 <= i,j,k <= n (zero entries included). Throws CheckFailed if a
/// primitive term survives or the result is not S3-symmetric.
std::map<Triple, Rat> a_coefficients(int n);

/// gamma^3 = Delta^3 - 1/3 (Delta_12 h3^n + Delta_13 h2^n + Delta_23 h1^n).
X3Class gamma3_chow(int n);
/// Gamma^3 = gamma^3 - sum a_ijk h1^i h2^j h3^k.
X3Class Gamma3_chow(int n);
bool Gamma3_coh_check(int n);

struct PairingReport {
  std::size_t tested = 0;
  std::size_t nonzero = 0;
};

/// Pairs Gamma^3 in the Chow model against every h1^a h2^b h3^c with
/// a+b+c = n and against each Delta_ab.
PairingReport gamma3_pairings(int n);

// Product evaluator ----------------------------------------------------------

/// A cycle class known only through its codimension and its moment
/// m = deg(alpha * h^{n-codim}).
struct FormalCycle {
  int codim = 0;
  Rat moment;
};

struct ProductEvaluation {
  XClass value;
  Rat coefficient;                   // a_{n-i, n-j, i+j}
  std::array<Rat, 3> diagonal_terms; // Delta_12 h3^n, Delta_13 h2^n, Delta_23 h1^n contributions
};

/// pi_3*(pi_1^* alpha . pi_2^* beta . gamma^3) with gamma^3 replaced by its
/// decomposable expression. Requires 0 < i, 0 < j, i + j < n.
ProductEvaluation evaluate_product(int n, const FormalCycle& alpha, const FormalCycle& beta);
XClass product_theorem(int n, const FormalCycle& alpha, const FormalCycle& beta);

/// Rank of the span of evaluate_product(n, alpha, beta) over a spread of
/// moments, for fixed codimensions i, j.
std::size_t product_image_rank(int n, int i, int j);

}  // namespace cubic::diagonal

#pragma once

#include <cubic/rat.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubic {

using Exponents = std::vector<int>;

/// Named variables with positive integer weights. Two polynomials can only
/// be combined when their variable sets compare equal.
struct VarSet {
  std::vector<std::string> names;
  std::vector<int> weights;

  std::size_t size() const { return names.size(); }
  int weighted_degree(const Exponents& e) const;

  /// (x, y) with weights (1, 2), standing for (c1, c2).
  static VarSet chern();
  /// (a, b) with weights (1, 1): formal Chern roots.
  static VarSet roots();

  friend bool operator==(const VarSet&, const VarSet&) = default;
};

/// Sparse polynomial with exact rational coefficients over weighted
/// variables. No zero coefficient is ever stored.
class WPoly {
 public:
  using Terms = std::map<Exponents, Rat>;

  WPoly() : WPoly(VarSet::chern()) {}
  explicit WPoly(VarSet vars) : vars_(std::move(vars)) {}

  static WPoly constant(VarSet vars, const Rat& c);
  static WPoly monomial(VarSet vars, Exponents e, const Rat& c = Rat(1));
  static WPoly variable(VarSet vars, std::size_t index);

  /// Inverse of str(); the variable names of `vars` are recognised.
  static WPoly parse(const VarSet& vars, std::string_view text);

  const VarSet& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Exponents& e) const;

  /// Weighted degree when every term shares it; nullopt for inhomogeneous
  /// or zero polynomials.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  /// Sum of the terms of weighted degree exactly d.
  WPoly graded_component(int d) const;

  void add_term(const Exponents& e, const Rat& c);

  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o);
  WPoly& operator*=(const Rat& c);
  WPoly operator-() const;

  friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
  friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
  friend WPoly operator*(const WPoly& a, const WPoly& b);
  friend WPoly operator*(WPoly a, const Rat& c) { return a *= c; }
  friend WPoly operator*(const Rat& c, WPoly a) { return a *= c; }
  friend bool operator==(const WPoly& a, const WPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  WPoly pow(int k) const;

  /// Canonical text form, terms in graded-lex order (higher weighted degree
  /// first, then lexicographically larger exponents): "18*x^2*y + 9*y^2".
  std::string str() const;

 private:
  void require_same_vars(const WPoly& o) const;

  VarSet vars_;
  Terms terms_;
};

/// Exact product; the polynomial ring operation spelled as a function.
WPoly poly_mul(const WPoly& a, const WPoly& b);
WPoly graded_component(const WPoly& p, int d);

/// All exponent vectors of weighted degree d, in graded-lex (descending)
/// order.
std::vector<Exponents> monomials_of_degree(const VarSet& vars, int d);

}  // namespace cubic

#include <cubic/diagonal.hpp>
#include <cubic/errors.hpp>
#include <cubic/hodge.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace cubic::diagonal {

namespace {

const Rat kThird = Rat(1) / Rat(3);

// c with c_n(TX) = c h^n; Delta^2 = Delta_*(c_n TX) = c/3 h1^n h2^n.
Rat tangent_top_chern(int n) { return Rat(hodge::top_chern_coefficient(n)); }

std::string power(const std::string& var, int e) { return e == 1 ? var : var + "^" + std::to_string(e); }

// "c*factor*factor" with the conventions of WPoly::str().
void append_term(std::ostringstream& os, bool& first, const Rat& c, const std::vector<std::string>& factors) {
  const Rat mag = c.sign() < 0 ? -c : c;
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  first = false;
  std::vector<std::string> f = factors;
  if (f.empty() || mag != Rat(1)) f.insert(f.begin(), mag.str());
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "*" : "") << f[i];
}

std::vector<std::string> h_factors(const std::array<int, 3>& e, int count) {
  std::vector<std::string> f;
  for (int i = 0; i < count; ++i) {
    if (e[i] > 0) f.push_back(power("h" + std::to_string(i + 1), e[i]));
  }
  return f;
}

std::string pair_name(Pair p) {
  const auto s = slots(p);
  return std::to_string(s.a + 1) + std::to_string(s.b + 1);
}

}  // namespace

// X -----------------------------------------------------------------------------

XClass::XClass(int n) : n_(n), coeffs_(n + 1) {
  if (n < 1) throw UnsupportedRange("XClass requires n >= 1");
}

XClass XClass::power(int n, int k, const Rat& c) {
  XClass x(n);
  if (k < 0) throw UsageError("negative power of h");
  if (k <= n) x.coeffs_[k] = c;
  return x;
}

XClass operator*(const XClass& a, const XClass& b) {
  if (a.n_ != b.n_) throw UsageError("XClass: different n");
  XClass out(a.n_);
  for (int i = 0; i <= a.n_; ++i) {
    for (int j = 0; i + j <= a.n_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

XClass operator+(XClass a, const XClass& b) {
  if (a.n_ != b.n_) throw UsageError("XClass: different n");
  for (int i = 0; i <= a.n_; ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

XClass operator*(const Rat& s, XClass a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

std::string XClass::str() const {
  WPoly p(VarSet{{"h"}, {1}});
  for (int k = 0; k <= n_; ++k) p.add_term({k}, coeffs_[k]);
  return p.str();
}

// X x X ---------------------------------------------------------------------------

XXClass XXClass::monomial(int n, int r, int s, const Rat& c) {
  XXClass x(n);
  if (r < 0 || s < 0) throw UsageError("negative exponent");
  if (r <= n && s <= n) x.add({false, r, s}, c);
  return x;
}

XXClass XXClass::diagonal(int n, const Rat& c) {
  XXClass x(n);
  x.add({true, 0, 0}, c);
  return x;
}

std::string XXClass::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms()) {
    std::vector<std::string> f = h_factors({t.r, t.s, 0}, 2);
    if (t.diagonal) f.insert(f.begin(), "D");
    append_term(os, first, c, f);
  }
  return os.str();
}

XXClass diagonal_pushforward(int n, int m) {
  XXClass out(n);
  if (m > n) return out;
  if (m == 0) return XXClass::diagonal(n);
  for (int a = 0; a <= n; ++a) {
    const int b = n + m - a;
    if (b >= 0 && b <= n) out.add({false, a, b}, kThird);
  }
  return out;
}

namespace {

XXClass xx_basis_mul(int n, const XXTerm& s, const XXTerm& t) {
  if (s.diagonal && t.diagonal) return XXClass::monomial(n, n, n, tangent_top_chern(n) * kThird);
  if (s.diagonal || t.diagonal) {
    const XXTerm& m = s.diagonal ? t : s;
    return diagonal_pushforward(n, m.r + m.s);
  }
  return XXClass::monomial(n, s.r + t.r, s.s + t.s);
}

}  // namespace

XXClass xx_mul(const XXClass& a, const XXClass& b) {
  if (a.n() != b.n()) throw UsageError("xx_mul: different n");
  XXClass out(a.n());
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) out += (cs * ct) * xx_basis_mul(a.n(), s, t);
  }
  return out;
}

Rat xx_degree(const XXClass& a) { return 9 * a.coeff({false, a.n(), a.n()}); }

CohXXClass CohXXClass::monomial(int n, int r, int s, const Rat& c) {
  CohXXClass x(n);
  if (r <= n && s <= n) x.add({false, r, s}, c);
  return x;
}

CohXXClass CohXXClass::primitive(int n, const Rat& c) {
  CohXXClass x(n);
  x.add({true, 0, 0}, c);
  return x;
}

std::string CohXXClass::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms()) {
    std::vector<std::string> f = h_factors({t.r, t.s, 0}, 2);
    if (t.primitive) f.insert(f.begin(), "d");
    append_term(os, first, c, f);
  }
  return os.str();
}

CohXXClass coh_mul(const CohXXClass& a, const CohXXClass& b) {
  if (a.n() != b.n()) throw UsageError("coh_mul: different n");
  const int n = a.n();
  const Rat sign = n % 2 == 0 ? Rat(1) : Rat(-1);
  const Rat dd = sign * Rat(hodge::primitive_dimension(n)) / Rat(9);
  CohXXClass out(n);
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      const Rat c = cs * ct;
      if (s.primitive && t.primitive) {
        out += CohXXClass::monomial(n, n, n, c * dd);
      } else if (s.primitive || t.primitive) {
        const CohXXTerm& m = s.primitive ? t : s;
        if (m.r == 0 && m.s == 0) out.add({true, 0, 0}, c);
      } else {
        out += CohXXClass::monomial(n, s.r + t.r, s.s + t.s, c);
      }
    }
  }
  return out;
}

Rat coh_degree(const CohXXClass& a) { return 9 * a.coeff({false, a.n(), a.n()}); }

CohXXClass cycle_class(const XXClass& a) {
  const int n = a.n();
  CohXXClass diag = CohXXClass::primitive(n);
  for (int j = 0; j <= n; ++j) diag += CohXXClass::monomial(n, j, n - j, kThird);
  CohXXClass out(n);
  for (const auto& [t, c] : a.terms()) {
    const CohXXClass mono = CohXXClass::monomial(n, t.r, t.s);
    out += c * (t.diagonal ? coh_mul(diag, mono) : mono);
  }
  return out;
}

// X^3 -------------------------------------------------------------------------------

PairSlots slots(Pair p) {
  switch (p) {
    case Pair::p12: return {0, 1, 2};
    case Pair::p13: return {0, 2, 1};
    case Pair::p23: return {1, 2, 0};
  }
  throw UsageError("bad pair");
}

Pair pair_of(int a, int b) {
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 1) return Pair::p12;
  if (a == 0 && b == 2) return Pair::p13;
  if (a == 1 && b == 2) return Pair::p23;
  throw UsageError("pair_of: not a pair of distinct factors");
}

namespace {

bool within(const std::array<int, 3>& e, int n) {
  return std::all_of(e.begin(), e.end(), [n](int v) { return v >= 0 && v <= n; });
}

int total(const std::array<int, 3>& e) { return e[0] + e[1] + e[2]; }

constexpr std::array<Pair, 3> kPairs{Pair::p12, Pair::p13, Pair::p23};

}  // namespace

X3Class X3Class::monomial(int n, std::array<int, 3> e, const Rat& c) {
  X3Class x(n);
  if (within(e, n)) x.add({X3Term::Kind::monomial, Pair::p12, e}, c);
  return x;
}

X3Class X3Class::diagonal(int n, Pair p, int m, const Rat& c) {
  X3Class x(n);
  if (m < 0) throw UsageError("negative exponent");
  if (m <= n) {
    std::array<int, 3> e{};
    e[slots(p).other] = m;
    x.add({X3Term::Kind::diagonal, p, e}, c);
  }
  return x;
}

X3Class X3Class::small_diagonal(int n, const Rat& c) {
  X3Class x(n);
  x.add({X3Term::Kind::small_diagonal, Pair::p12, {}}, c);
  return x;
}

std::string X3Class::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms()) {
    std::vector<std::string> f = h_factors(t.e, 3);
    if (t.kind == X3Term::Kind::diagonal) f.insert(f.begin(), "D" + pair_name(t.pair));
    if (t.kind == X3Term::Kind::small_diagonal) f.insert(f.begin(), "D123");
    append_term(os, first, c, f);
  }
  return os.str();
}

namespace {

// Delta_ab * h^e.
X3Class diag_times_mono(int n, Pair p, const std::array<int, 3>& e) {
  const auto [a, b, c] = slots(p);
  X3Class out(n);
  if (e[c] > n) return out;
  const int s = e[a] + e[b];
  if (s == 0) return X3Class::diagonal(n, p, e[c]);
  for (int x = 0; x <= n; ++x) {
    const int y = n + s - x;
    if (y < 0 || y > n) continue;
    std::array<int, 3> f{};
    f[a] = x;
    f[b] = y;
    f[c] = e[c];
    out += X3Class::monomial(n, f, kThird);
  }
  return out;
}

// Delta^3 * h^e = delta_*(h^{|e|}); for |e| >= 1 expanded as
// Delta_23 * (Delta_12 * h1^{|e|}).
X3Class small_times_mono(int n, const std::array<int, 3>& e) {
  const int m = total(e);
  if (m == 0) return X3Class::small_diagonal(n);
  X3Class out(n);
  if (m > n) return out;
  const X3Class first = diag_times_mono(n, Pair::p12, {m, 0, 0});
  for (const auto& [t, c] : first.terms()) {
    if (t.kind != X3Term::Kind::monomial) throw CheckFailed("small diagonal expansion left a diagonal term");
    out += c * diag_times_mono(n, Pair::p23, t.e);
  }
  return out;
}

std::array<int, 3> add(std::array<int, 3> x, const std::array<int, 3>& y) {
  for (int i = 0; i < 3; ++i) x[i] += y[i];
  return x;
}

X3Class x3_basis_mul(int n, const X3Term& s, const X3Term& t) {
  using K = X3Term::Kind;
  if (s.kind > t.kind) return x3_basis_mul(n, t, s);
  const auto e = add(s.e, t.e);
  if (s.kind == K::monomial) {
    if (t.kind == K::monomial) return X3Class::monomial(n, e);
    if (t.kind == K::diagonal) return diag_times_mono(n, t.pair, e);
    return small_times_mono(n, e);
  }
  if (s.kind == K::diagonal && t.kind == K::diagonal) {
    if (s.pair == t.pair) {
      // pi_ab^*(Delta^2) * h_other^{m+m'}
      const auto [a, b, c] = slots(s.pair);
      std::array<int, 3> f{};
      f[a] = n;
      f[b] = n;
      f[c] = e[c];
      return X3Class::monomial(n, f, tangent_top_chern(n) * kThird);
    }
    return small_times_mono(n, e);
  }
  if (s.kind == K::diagonal) {
    // Delta^3 * Delta_ab = delta_*(c_n TX) = c * delta_*(h^n)
    std::array<int, 3> f = e;
    f[0] += n;
    return tangent_top_chern(n) * small_times_mono(n, f);
  }
  // Delta^3 * Delta^3 = delta_*(c_{2n}(TX + TX)) = 0.
  return X3Class(n);
}

}  // namespace

X3Class x3_mul(const X3Class& a, const X3Class& b) {
  if (a.n() != b.n()) throw UsageError("x3_mul: different n");
  X3Class out(a.n());
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) out += (cs * ct) * x3_basis_mul(a.n(), s, t);
  }
  return out;
}

Rat x3_degree(const X3Class& a) {
  const int n = a.n();
  return 27 * a.coeff({X3Term::Kind::monomial, Pair::p12, {n, n, n}});
}

X3Class pullback(const XXClass& x, Pair p) {
  const int n = x.n();
  const auto [a, b, c] = slots(p);
  X3Class out(n);
  for (const auto& [t, coef] : x.terms()) {
    if (t.diagonal) {
      out += X3Class::diagonal(n, p, 0, coef);
    } else {
      std::array<int, 3> e{};
      e[a] = t.r;
      e[b] = t.s;
      out += X3Class::monomial(n, e, coef);
    }
  }
  return out;
}

// Cohomological X^3 ---------------------------------------------------------------

CohX3Class CohX3Class::monomial(int n, std::array<int, 3> e, const Rat& c) {
  CohX3Class x(n);
  if (within(e, n)) x.add({false, Pair::p12, e}, c);
  return x;
}

CohX3Class CohX3Class::primitive(int n, Pair p, int m, const Rat& c) {
  CohX3Class x(n);
  if (m <= n) {
    std::array<int, 3> e{};
    e[slots(p).other] = m;
    x.add({true, p, e}, c);
  }
  return x;
}

bool CohX3Class::has_primitive_terms() const {
  return std::any_of(terms().begin(), terms().end(), [](const auto& t) { return t.first.primitive; });
}

std::string CohX3Class::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms()) {
    std::vector<std::string> f = h_factors(t.e, 3);
    if (t.primitive) f.insert(f.begin(), "d" + pair_name(t.pair));
    append_term(os, first, c, f);
  }
  return os.str();
}

namespace {

// d_p * h^e: killed by h on either factor of the pair.
CohX3Class prim_times_mono(int n, Pair p, const std::array<int, 3>& e) {
  const auto [a, b, c] = slots(p);
  if (e[a] > 0 || e[b] > 0) return CohX3Class(n);
  return CohX3Class::primitive(n, p, e[c]);
}

CohX3Class coh_basis_mul(int n, const CohX3Term& s, const CohX3Term& t) {
  const auto e = add(s.e, t.e);
  if (!s.primitive && !t.primitive) return CohX3Class::monomial(n, e);
  if (s.primitive != t.primitive) return prim_times_mono(n, s.primitive ? s.pair : t.pair, e);
  if (s.pair == t.pair) throw UsageError("coh_mul: product of two primitive projectors on the same pair");
  // d_ab * d_bc = 1/3 h_b^n d_ac
  const auto ps = slots(s.pair);
  const auto pt = slots(t.pair);
  const int shared = (ps.a == pt.a || ps.a == pt.b) ? ps.a : ps.b;
  const int x = ps.a == shared ? ps.b : ps.a;
  const int y = pt.a == shared ? pt.b : pt.a;
  std::array<int, 3> f = e;
  f[shared] += n;
  return kThird * prim_times_mono(n, pair_of(x, y), f);
}

}  // namespace

CohX3Class coh_mul(const CohX3Class& a, const CohX3Class& b) {
  if (a.n() != b.n()) throw UsageError("coh_mul: different n");
  CohX3Class out(a.n());
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) out += (cs * ct) * coh_basis_mul(a.n(), s, t);
  }
  return out;
}

Rat coh_degree(const CohX3Class& a) {
  const int n = a.n();
  return 27 * a.coeff({false, Pair::p12, {n, n, n}});
}

namespace {

CohX3Class coh_diagonal(int n, Pair p) {
  const auto [a, b, c] = slots(p);
  CohX3Class out = CohX3Class::primitive(n, p);
  for (int j = 0; j <= n; ++j) {
    std::array<int, 3> e{};
    e[a] = j;
    e[b] = n - j;
    out += CohX3Class::monomial(n, e, kThird);
  }
  return out;
}

}  // namespace

CohX3Class cycle_class(const X3Class& x) {
  const int n = x.n();
  CohX3Class out(n);
  for (const auto& [t, c] : x.terms()) {
    const CohX3Class mono = CohX3Class::monomial(n, t.e);
    switch (t.kind) {
      case X3Term::Kind::monomial:
        out += c * mono;
        break;
      case X3Term::Kind::diagonal:
        out += c * coh_mul(coh_diagonal(n, t.pair), mono);
        break;
      case X3Term::Kind::small_diagonal:
        out += c * coh_mul(coh_mul(coh_diagonal(n, Pair::p12), coh_diagonal(n, Pair::p23)), mono);
        break;
    }
  }
  return out;
}

CohXXClass push_forward(const CohX3Class& x, int dropped) {
  if (dropped < 0 || dropped > 2) throw UsageError("push_forward: factor index out of range");
  const int n = x.n();
  std::array<int, 2> keep{};
  for (int i = 0, j = 0; i < 3; ++i) {
    if (i != dropped) keep[j++] = i;
  }
  CohXXClass out(n);
  for (const auto& [t, c] : x.terms()) {
    // Integrating over the dropped factor picks out its h^n coefficient
    // (deg h^n = 3); a primitive class on that factor integrates to zero.
    if (t.e[dropped] != n) continue;
    if (!t.primitive) {
      out += CohXXClass::monomial(n, t.e[keep[0]], t.e[keep[1]], 3 * c);
    } else if (slots(t.pair).other == dropped) {
      out += CohXXClass::primitive(n, 3 * c);
    }
  }
  return out;
}

// Modified diagonals -----------------------------------------------------------

CohX3Class small_diagonal_coh(int n) { return coh_mul(coh_diagonal(n, Pair::p12), coh_diagonal(n, Pair::p23)); }

X3Class gamma3_chow(int n) {
  X3Class g = X3Class::small_diagonal(n);
  for (Pair p : kPairs) g -= X3Class::diagonal(n, p, n, kThird);
  return g;
}

std::map<Triple, Rat> a_coefficients(int n) {
  const CohX3Class img = cycle_class(gamma3_chow(n));
  if (img.has_primitive_terms()) throw CheckFailed("a_coefficients: primitive terms survive in [gamma^3]: " + img.str());
  std::map<Triple, Rat> a;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int k = 2 * n - i - j;
      if (k < 0 || k > n) continue;
      a[{i, j, k}] = img.coeff({false, Pair::p12, {i, j, k}});
    }
  }
  for (const auto& [t, c] : img.terms()) {
    if (total(t.e) != 2 * n) throw CheckFailed("a_coefficients: term of wrong codimension");
  }
  for (const auto& [t, c] : a) {
    const std::array<Triple, 5> perms{Triple{t[1], t[0], t[2]}, Triple{t[2], t[1], t[0]}, Triple{t[0], t[2], t[1]},
                                      Triple{t[1], t[2], t[0]}, Triple{t[2], t[0], t[1]}};
    for (const auto& q : perms) {
      if (a.at(q) != c) throw CheckFailed("a_coefficients: not S3-symmetric");
    }
  }
  return a;
}

X3Class Gamma3_chow(int n) {
  X3Class g = gamma3_chow(n);
  for (const auto& [t, c] : a_coefficients(n)) g -= X3Class::monomial(n, t, c);
  return g;
}

bool Gamma3_coh_check(int n) { return cycle_class(Gamma3_chow(n)).is_zero(); }

PairingReport gamma3_pairings(int n) {
  const X3Class g = Gamma3_chow(n);
  PairingReport rep;
  auto pair_with = [&](const X3Class& dual) {
    ++rep.tested;
    if (!x3_degree(x3_mul(g, dual)).is_zero()) ++rep.nonzero;
  };
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) pair_with(X3Class::monomial(n, {a, b, n - a - b}));
  }
  for (Pair p : kPairs) pair_with(X3Class::diagonal(n, p));
  return rep;
}

// Product evaluator -------------------------------------------------------------

namespace {

// deg of the zero-cycle h^r * alpha, or zero when h^r * alpha is not a
// zero-cycle (positive dimension pushes forward to zero; codimension above
// n vanishes).
Rat zero_cycle_degree(int n, const FormalCycle& alpha, int r) {
  return alpha.codim + r == n ? alpha.moment : Rat(0);
}

}  // namespace

ProductEvaluation evaluate_product(int n, const FormalCycle& alpha, const FormalCycle& beta) {
  if (alpha.codim <= 0 || beta.codim <= 0 || alpha.codim + beta.codim >= n) {
    throw UnsupportedRange("product_theorem: requires 0 < i, 0 < j and i + j < n");
  }
  const int i = alpha.codim;
  const int j = beta.codim;
  ProductEvaluation ev{XClass(n), Rat(0), {Rat(0), Rat(0), Rat(0)}};

  // Delta_12 h3^n: pi_12^* Delta_*(alpha beta) . pi_3^* h^n pushes forward to
  // deg(alpha beta) h^n, and alpha beta is a zero-cycle only when i + j = n.
  ev.diagonal_terms[0] = (i + j == n) ? Rat(1) : Rat(0);
  // Delta_13 h2^n carries beta h^n and Delta_23 h1^n carries alpha h^n,
  // both of codimension above n.
  ev.diagonal_terms[1] = (j + n <= n) ? Rat(1) : Rat(0);
  ev.diagonal_terms[2] = (i + n <= n) ? Rat(1) : Rat(0);
  for (const Rat& t : ev.diagonal_terms) {
    if (!t.is_zero()) throw CheckFailed("product_theorem: a diagonal term of gamma^3 contributes");
  }

  for (const auto& [rst, a] : a_coefficients(n)) {
    if (a.is_zero()) continue;
    const Rat ma = zero_cycle_degree(n, alpha, rst[0]);
    const Rat mb = zero_cycle_degree(n, beta, rst[1]);
    if (ma.is_zero() || mb.is_zero()) continue;
    ev.value = ev.value + XClass::power(n, rst[2], a * ma * mb);
  }
  ev.coefficient = a_coefficients(n).at({n - i, n - j, i + j});
  return ev;
}

XClass product_theorem(int n, const FormalCycle& alpha, const FormalCycle& beta) {
  return evaluate_product(n, alpha, beta).value;
}

std::size_t product_image_rank(int n, int i, int j) {
  const std::vector<Rat> moments{Rat(1), Rat(2), Rat(3), Rat(-1, 2) , Rat(7, 5)};
  std::vector<XClass> images;
  for (const Rat& ma : moments) {
    for (const Rat& mb : moments) images.push_back(product_theorem(n, {i, ma}, {j, mb}));
  }
  MatQ m(images.size(), n + 1);
  for (std::size_t r = 0; r < images.size(); ++r) {
    for (int k = 0; k <= n; ++k) m(r, k) = images[r].coeff(k);
  }
  return rank(m);
}

}  // namespace cubic::diagonal

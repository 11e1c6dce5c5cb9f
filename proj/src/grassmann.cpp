#include <cubic/errors.hpp>
#include <cubic/grassmann.hpp>

#include <omp.h>

#include <sstream>
#include <utility>

namespace cubic::grassmann {

WPoly complete_symmetric(int k) {
  if (k < 0) throw UsageError("complete_symmetric: negative degree");
  const VarSet v = VarSet::chern();
  const WPoly x = WPoly::variable(v, 0);
  const WPoly y = WPoly::variable(v, 1);
  WPoly prev(v);                        // h_{-1}
  WPoly cur = WPoly::constant(v, 1);    // h_0
  for (int i = 1; i <= k; ++i) {
    WPoly next = x * cur - y * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// GRing -------------------------------------------------------------------

GRing::GRing(int n) : n_(n), vars_(VarSet::chern()) {
  relations_ = {complete_symmetric(n + 1), complete_symmetric(n + 2)};
  pieces_.reserve(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    Piece piece;
    piece.monomials = monomials_of_degree(vars_, k);
    const std::size_t m = piece.monomials.size();

    // Spanning set of the ideal in degree k.
    std::vector<VecQ> rows;
    for (int r = 0; r < 2; ++r) {
      for (const auto& e : monomials_of_degree(vars_, k - (n + 1 + r))) {
        const WPoly g = WPoly::monomial(vars_, e) * relations_[r];
        VecQ row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = g.coeff(piece.monomials[j]);
        rows.push_back(std::move(row));
      }
    }
    MatQ ideal(rows.size(), m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < m; ++j) ideal(i, j) = rows[i][j];
    }
    const Rref rr = rref(ideal);

    // Pivot monomials are eliminated; the rest form the basis.
    std::vector<long> basis_index(m, -1);
    std::vector<long> pivot_row(m, -1);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) pivot_row[rr.pivots[i]] = static_cast<long>(i);
    for (std::size_t j = 0; j < m; ++j) {
      if (pivot_row[j] < 0) {
        basis_index[j] = static_cast<long>(piece.basis.size());
        piece.basis.push_back(piece.monomials[j]);
      }
    }
    piece.reduction = MatQ(piece.basis.size(), m);
    for (std::size_t j = 0; j < m; ++j) {
      if (basis_index[j] >= 0) {
        piece.reduction(basis_index[j], j) = 1;
        continue;
      }
      // monomial_j == -(sum of the row's entries on basis columns) mod I
      const auto i = static_cast<std::size_t>(pivot_row[j]);
      for (std::size_t c = 0; c < m; ++c) {
        if (basis_index[c] >= 0) piece.reduction(basis_index[c], j) = -rr.reduced(i, c);
      }
    }
    pieces_.push_back(std::move(piece));
  }
}

RingPtr GRing::build(int n) {
  if (n < 1) throw UnsupportedRange("build_ring: n must be >= 1");
  return RingPtr(new GRing(n));
}

const GRing::Piece& GRing::piece(int k) const {
  if (k < 0 || k > 2 * n_) throw UsageError("degree " + std::to_string(k) + " outside [0, 2n]");
  return pieces_[k];
}

std::size_t GRing::dim(int k) const {
  if (k < 0 || k > 2 * n_) return 0;
  return pieces_[k].basis.size();
}

VecQ GRing::reduce(const WPoly& p, int k) const {
  const Piece& pc = piece(k);
  VecQ v(pc.monomials.size());
  for (const auto& [e, c] : p.terms()) {
    if (vars_.weighted_degree(e) != k) throw UsageError("reduce: term of wrong degree");
    for (std::size_t j = 0; j < pc.monomials.size(); ++j) {
      if (pc.monomials[j] == e) {
        v[j] = c;
        break;
      }
    }
  }
  return pc.reduction * v;
}

WPoly GRing::basis_poly(int k, std::size_t i) const { return WPoly::monomial(vars_, piece(k).basis.at(i)); }

// GClass ------------------------------------------------------------------

GClass::GClass(RingPtr ring, int degree, VecQ coords)
    : ring_(std::move(ring)), degree_(degree), coords_(std::move(coords)) {
  if (!ring_) throw UsageError("GClass without ring");
  if (degree_ < 0 || degree_ > ring_->top_degree()) throw UsageError("GClass degree out of range");
  if (coords_.size() != ring_->dim(degree_)) throw UsageError("GClass coordinate count mismatch");
}

GClass GClass::zero(RingPtr ring, int degree) {
  const std::size_t d = ring->dim(degree);
  return GClass(std::move(ring), degree, VecQ(d));
}

WPoly GClass::to_poly() const {
  WPoly out(ring_->vars());
  const auto basis = ring_->basis(degree_);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.add_term(basis[i], coords_[i]);
  return out;
}

void GClass::require_compatible(const GClass& o) const {
  if (ring_ != o.ring_) throw UsageError("classes from different rings");
  if (degree_ != o.degree_) throw UsageError("adding classes of different degree");
}

GClass& GClass::operator+=(const GClass& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

GClass& GClass::operator-=(const GClass& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

GClass operator*(const Rat& s, GClass a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

GClass operator*(const GClass& a, const GClass& b) {
  if (a.ring_ != b.ring_) throw UsageError("classes from different rings");
  return normal_form(a.ring_, a.to_poly() * b.to_poly(), a.degree_ + b.degree_);
}

GClass normal_form(const RingPtr& ring, const WPoly& p, int degree) {
  if (!(p.vars() == ring->vars())) throw UsageError("normal_form: polynomial not in (c1, c2)");
  if (degree < 0 || degree > ring->top_degree()) {
    throw UsageError("normal_form: degree " + std::to_string(degree) + " exceeds 2n");
  }
  const auto d = p.homogeneous_degree();
  if (!p.is_zero() && d != degree) throw UsageError("normal_form: input not homogeneous of the stated degree");
  return GClass(ring, degree, ring->reduce(p, degree));
}

GClass normal_form(const RingPtr& ring, const WPoly& p) {
  const auto d = p.homogeneous_degree();
  if (!d) throw UsageError("normal_form: input is zero or not weighted-homogeneous");
  return normal_form(ring, p, *d);
}

Rat degree(const GClass& c) {
  const GRing& r = *c.ring();
  if (c.degree() != r.top_degree()) {
    throw NotTopDegree("degree of a class in A^" + std::to_string(c.degree()) + ", expected A^" +
                       std::to_string(r.top_degree()));
  }
  const WPoly point = WPoly::monomial(r.vars(), {0, r.n()});
  const VecQ unit = r.reduce(point, r.top_degree());
  return c.coords().at(0) / unit.at(0);
}

// Schubert calculus -------------------------------------------------------

SchubertSum pieri_mul(int n, Partition2 lambda, int p) {
  if (p < 0) throw UsageError("pieri_mul: negative special class index");
  SchubertSum out;
  const int total = lambda.a + lambda.b + p;
  for (int b2 = lambda.b; b2 <= lambda.a; ++b2) {
    const int a2 = total - b2;
    if (a2 < lambda.a || a2 > n || a2 < b2) continue;
    out[{a2, b2}] += 1;
  }
  return out;
}

SchubertSum sigma11_mul(int n, Partition2 lambda) {
  if (lambda.a + 1 > n) return {};
  return {{{lambda.a + 1, lambda.b + 1}, Rat(1)}};
}

namespace {

void accumulate(SchubertSum& into, const SchubertSum& terms, const Rat& scale) {
  for (const auto& [mu, c] : terms) {
    Rat& slot = into[mu];
    slot += c * scale;
    if (slot.is_zero()) into.erase(mu);
  }
}

}  // namespace

SchubertSum schubert_times_monomial(int n, const SchubertSum& sum, const Exponents& e) {
  SchubertSum cur = sum;
  for (int i = 0; i < e.at(0); ++i) {
    SchubertSum next;
    for (const auto& [lam, c] : cur) accumulate(next, pieri_mul(n, lam, 1), c);
    cur = std::move(next);
  }
  for (int i = 0; i < e.at(1); ++i) {
    SchubertSum next;
    for (const auto& [lam, c] : cur) accumulate(next, sigma11_mul(n, lam), c);
    cur = std::move(next);
  }
  return cur;
}

SchubertSum schubert_of_monomial(int n, const Exponents& e) {
  return schubert_times_monomial(n, {{{0, 0}, Rat(1)}}, e);
}

WPoly giambelli(Partition2 lambda) {
  WPoly out = complete_symmetric(lambda.a) * complete_symmetric(lambda.b);
  if (lambda.b >= 1) out -= complete_symmetric(lambda.a + 1) * complete_symmetric(lambda.b - 1);
  return out;
}

Rat schubert_degree(int n, const SchubertSum& sum) {
  const auto it = sum.find({n, n});
  return it == sum.end() ? Rat(0) : it->second;
}

std::string to_string(const SchubertSum& sum) {
  if (sum.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = sum.rbegin(); it != sum.rend(); ++it) {
    const auto& [lam, c] = *it;
    os << (first ? "" : " + ");
    if (c != Rat(1)) os << c << "*";
    os << "s" << lam.a << "," << lam.b;
    first = false;
  }
  return os.str();
}

std::size_t oracle_mismatches(const RingPtr& self, Execution exec) {
  const GRing& ring = *self;
  const int n = ring.n();
  struct Pair {
    int k1;
    std::size_t i1;
    int k2;
    std::size_t i2;
  };
  std::vector<Pair> pairs;
  for (int k1 = 0; k1 <= 2 * n; ++k1) {
    for (int k2 = k1; k1 + k2 <= 2 * n; ++k2) {
      for (std::size_t i1 = 0; i1 < ring.dim(k1); ++i1) {
        for (std::size_t i2 = 0; i2 < ring.dim(k2); ++i2) pairs.push_back({k1, i1, k2, i2});
      }
    }
  }

  auto mismatch = [&](const Pair& pr) -> bool {
    const Exponents& e1 = ring.basis(pr.k1)[pr.i1];
    const Exponents& e2 = ring.basis(pr.k2)[pr.i2];
    const int k = pr.k1 + pr.k2;
    const GClass direct =
        normal_form(self, WPoly::monomial(ring.vars(), e1) * WPoly::monomial(ring.vars(), e2), k);
    const SchubertSum s = schubert_times_monomial(n, schubert_of_monomial(n, e1), e2);
    WPoly via(ring.vars());
    for (const auto& [lam, c] : s) via += c * giambelli(lam);
    return !(normal_form(self, via, k) == direct);
  };

  const auto count = static_cast<long>(pairs.size());
  std::size_t bad = 0;
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) bad += mismatch(pairs[i]) ? 1 : 0;
  } else {
#pragma omp parallel for reduction(+ : bad) schedule(dynamic)
    for (long i = 0; i < count; ++i) bad += mismatch(pairs[i]) ? 1 : 0;
  }
  return bad;
}

MatQ poincare_pairing(const RingPtr& ring, int k) {
  const int dual = ring->top_degree() - k;
  const std::size_t rows = ring->dim(k);
  const std::size_t cols = ring->dim(dual);
  MatQ m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = degree(normal_form(ring, ring->basis_poly(k, i) * ring->basis_poly(dual, j), ring->top_degree()));
    }
  }
  return m;
}

std::size_t partition_count(int n, int k) {
  std::size_t c = 0;
  for (int b = 0; 2 * b <= k; ++b) {
    if (k - b <= n) ++c;
  }
  return c;
}

// Chern classes -------------------------------------------------------------

WPoly symmetric_to_chern(const WPoly& p) {
  if (!(p.vars() == VarSet::roots())) throw UsageError("symmetric_to_chern: expects root variables (a, b)");
  const VarSet rv = VarSet::roots();
  const VarSet cv = VarSet::chern();
  const WPoly e1 = WPoly::variable(rv, 0) + WPoly::variable(rv, 1);
  const WPoly e2 = WPoly::variable(rv, 0) * WPoly::variable(rv, 1);
  WPoly rest = p;
  WPoly out(cv);
  while (!rest.is_zero()) {
    // std::map order: the last key has the largest a-exponent.
    const auto& [e, c] = *rest.terms().rbegin();
    const int i = e[0];
    const int j = e[1];
    if (i < j) throw UsageError("symmetric_to_chern: polynomial is not symmetric");
    const Rat coeff = c;
    rest -= coeff * (e1.pow(i - j) * e2.pow(j));
    out.add_term({i - j, j}, coeff);
  }
  return out;
}

std::vector<WPoly> sym_power_chern(int m) {
  if (m < 1) throw UsageError("sym_power_chern: m must be >= 1");
  const VarSet rv = VarSet::roots();
  const WPoly alpha = WPoly::variable(rv, 0);
  const WPoly beta = WPoly::variable(rv, 1);
  // Elementary symmetric functions of the roots i*alpha + (m-i)*beta.
  std::vector<WPoly> e(m + 2, WPoly(rv));
  e[0] = WPoly::constant(rv, 1);
  for (int i = 0; i <= m; ++i) {
    const WPoly root = Rat(i) * alpha + Rat(m - i) * beta;
    for (int r = i + 1; r >= 1; --r) e[r] += root * e[r - 1];
  }
  std::vector<WPoly> out;
  out.reserve(e.size());
  for (const auto& er : e) out.push_back(symmetric_to_chern(er));
  return out;
}

GClass fano_class(const RingPtr& ring) {
  if (ring->n() < 2) throw UnsupportedRange("fano_class: requires n >= 2");
  return normal_form(ring, sym_power_chern(3).at(4), 4);
}

}  // namespace cubic::grassmann

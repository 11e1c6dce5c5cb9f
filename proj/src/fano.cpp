#include <cubic/errors.hpp>
#include <cubic/fano.hpp>

#include <string>

namespace cubic::fano {

using grassmann::GClass;
using grassmann::RingPtr;

namespace {

void check_range(int n, int k) {
  if (n < 2) throw UnsupportedRange("fano_pairing: requires n >= 2");
  if (k < 0 || k > 2 * (n - 2)) {
    throw UnsupportedRange("fano_pairing: k = " + std::to_string(k) + " outside [0, " + std::to_string(2 * (n - 2)) + "]");
  }
}

}  // namespace

FanoPairing fano_pairing(const RingPtr& ring, int k) {
  const int n = ring->n();
  check_range(n, k);
  const int dual = 2 * (n - 2) - k;
  const GClass f = grassmann::fano_class(ring);
  const WPoly fpoly = f.to_poly();

  FanoPairing out;
  out.n = n;
  out.k = k;
  out.left.assign(ring->basis(k).begin(), ring->basis(k).end());
  out.right.assign(ring->basis(dual).begin(), ring->basis(dual).end());
  out.matrix = MatQ(out.left.size(), out.right.size());
  for (std::size_t i = 0; i < out.left.size(); ++i) {
    for (std::size_t j = 0; j < out.right.size(); ++j) {
      const WPoly prod = WPoly::monomial(ring->vars(), out.left[i]) * WPoly::monomial(ring->vars(), out.right[j]) * fpoly;
      out.matrix(i, j) = grassmann::degree(normal_form(ring, prod, ring->top_degree()));
    }
  }
  return out;
}

FanoPairing fano_pairing(int n, int k) {
  check_range(n, k);
  return fano_pairing(grassmann::build_ring(n), k);
}

std::size_t taut_rank_F(const RingPtr& ring, int k) { return rank(fano_pairing(ring, k).matrix); }

std::size_t taut_rank_F(int n, int k) { return rank(fano_pairing(n, k).matrix); }

bool pairing_is_perfect(const FanoPairing& p) {
  const std::size_t r = rank(p.matrix);
  const std::size_t left_kernel = kernel_basis(p.matrix.transpose()).size();
  const std::size_t right_kernel = kernel_basis(p.matrix).size();
  return r == p.matrix.rows() - left_kernel && r == p.matrix.cols() - right_kernel;
}

std::vector<TautRow> taut_table(int n) {
  const RingPtr ring = grassmann::build_ring(n);
  std::vector<TautRow> rows;
  for (int k = 0; k <= 2 * (n - 2); ++k) rows.push_back({k, ring->dim(k), taut_rank_F(ring, k)});
  return rows;
}

ExtraRelation extra_relation(int n) {
  if (n < 3) throw UnsupportedRange("extra_relation: requires n >= 3 (target degree n+3 must be <= 2n)");
  const RingPtr ring = grassmann::build_ring(n);
  const int src = n - 1;
  const int dst = n + 3;
  const WPoly fpoly = grassmann::fano_class(ring).to_poly();
  const auto basis = ring->basis(src);

  MatQ mult(ring->dim(dst), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const GClass img = normal_form(ring, WPoly::monomial(ring->vars(), basis[j]) * fpoly, dst);
    for (std::size_t i = 0; i < img.coords().size(); ++i) mult(i, j) = img.coords()[i];
  }
  const auto kernel = kernel_basis(mult);
  if (kernel.empty()) throw CheckFailed("extra_relation: multiplication by [F] is injective for n = " + std::to_string(n));

  // Below degree n+1 there are no relations, so the basis is every monomial
  // and c1^{n-1} sits at index 0.
  const Exponents lead{src, 0};
  std::size_t lead_index = basis.size();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == lead) lead_index = i;
  }
  if (lead_index == basis.size()) throw CheckFailed("extra_relation: c1^(n-1) is not a basis monomial");

  for (const VecQ& v : kernel) {
    if (v[lead_index].is_zero()) continue;
    const Rat scale = Rat(1) / v[lead_index];
    WPoly p(ring->vars());
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i] * scale);
    return {n, std::move(p), kernel.size()};
  }
  throw CheckFailed("extra_relation: every kernel element has zero c1^(n-1) coefficient for n = " + std::to_string(n));
}

std::optional<Cofactors> ideal_decomposition(int n, const WPoly& R) {
  if (n < 1) throw UnsupportedRange("ideal_decomposition: requires n >= 1");
  const VarSet v = VarSet::chern();
  if (!(R.vars() == v)) throw UsageError("ideal_decomposition: polynomial not in (c1, c2)");
  const int d = n + 3;
  if (!R.is_zero() && R.homogeneous_degree() != d) {
    throw UsageError("ideal_decomposition: R must be homogeneous of weighted degree n+3");
  }
  const WPoly h1 = grassmann::complete_symmetric(n + 1);
  const WPoly h2 = grassmann::complete_symmetric(n + 2);
  const std::vector<Exponents> a_span{{2, 0}, {0, 1}};
  const std::vector<Exponents> b_span{{1, 0}};

  std::vector<WPoly> columns;
  for (const auto& e : a_span) columns.push_back(WPoly::monomial(v, e) * h1);
  for (const auto& e : b_span) columns.push_back(WPoly::monomial(v, e) * h2);

  const auto monos = monomials_of_degree(v, d);
  MatQ m(monos.size(), columns.size());
  VecQ rhs(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = columns[j].coeff(monos[i]);
    rhs[i] = R.coeff(monos[i]);
  }
  const auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;
  Cofactors out{WPoly(v), WPoly(v)};
  for (std::size_t j = 0; j < a_span.size(); ++j) out.A.add_term(a_span[j], (*sol)[j]);
  for (std::size_t j = 0; j < b_span.size(); ++j) out.B.add_term(b_span[j], (*sol)[a_span.size() + j]);
  return out;
}

}  // namespace cubic::fano

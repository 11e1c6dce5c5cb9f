#include <cubic/errors.hpp>
#include <cubic/fano.hpp>
#include <cubic/hodge.hpp>

#include <algorithm>
#include <sstream>
#include <string>

namespace cubic::hodge {

// HodgeDiamond --------------------------------------------------------------

void HodgeDiamond::add(HodgeCell cell, const BigInt& v) {
  if (cell.p + cell.q != cell.k || cell.p < 0 || cell.q < 0) throw UsageError("Hodge cell needs p + q = k");
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace(cell, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

BigInt HodgeDiamond::at(HodgeCell cell) const {
  const auto it = entries_.find(cell);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt HodgeDiamond::betti(int k) const {
  BigInt s = 0;
  for (const auto& [c, v] : entries_) {
    if (c.k == k) s += v;
  }
  return s;
}

BigInt HodgeDiamond::total_dimension() const {
  BigInt s = 0;
  for (const auto& [c, v] : entries_) s += v;
  return s;
}

BigInt HodgeDiamond::euler() const {
  BigInt s = 0;
  for (const auto& [c, v] : entries_) s += (c.k % 2 == 0) ? v : BigInt(-v);
  return s;
}

int HodgeDiamond::max_degree() const {
  int m = -1;
  for (const auto& [c, v] : entries_) m = std::max(m, c.k);
  return m;
}

HodgeDiamond HodgeDiamond::shifted(int t) const {
  HodgeDiamond out;
  for (const auto& [c, v] : entries_) out.add({c.k + 2 * t, c.p + t, c.q + t}, v);
  return out;
}

bool HodgeDiamond::is_hodge_symmetric() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return at({e.first.k, e.first.q, e.first.p}) == e.second; });
}

bool HodgeDiamond::all_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

HodgeDiamond& HodgeDiamond::operator+=(const HodgeDiamond& o) {
  for (const auto& [c, v] : o.entries_) add(c, v);
  return *this;
}

HodgeDiamond& HodgeDiamond::operator-=(const HodgeDiamond& o) {
  for (const auto& [c, v] : o.entries_) add(c, -v);
  return *this;
}

std::string HodgeDiamond::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, v] : entries_) {
    os << (first ? "" : " ") << "H" << c.k << "(" << c.p << "," << c.q << ")=" << v.get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

// EPoly ---------------------------------------------------------------------

void EPoly::add(int p, int q, const BigInt& v) {
  if (v == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({p, q}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt EPoly::at(int p, int q) const {
  const auto it = coeffs_.find({p, q});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

EPoly EPoly::from_diamond(const HodgeDiamond& d) {
  EPoly e;
  for (const auto& [c, v] : d.entries()) e.add(c.p, c.q, c.k % 2 == 0 ? v : BigInt(-v));
  return e;
}

EPoly EPoly::tate_range(int lo, int hi) {
  EPoly e;
  for (int k = lo; k <= hi; ++k) e.add(k, k, 1);
  return e;
}

EPoly EPoly::projective_space(int n) { return tate_range(0, n); }

BigInt EPoly::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& [pq, v] : coeffs_) s += v;
  return s;
}

bool EPoly::is_symmetric() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const auto& e) { return at(e.first.second, e.first.first) == e.second; });
}

EPoly EPoly::times_uv_power(int t) const {
  EPoly out;
  for (const auto& [pq, v] : coeffs_) out.add(pq.first + t, pq.second + t, v);
  return out;
}

EPoly EPoly::divided_by_uv_power(int t) const {
  EPoly out;
  for (const auto& [pq, v] : coeffs_) {
    if (pq.first < t || pq.second < t) {
      throw NonIntegralResult("E-polynomial not divisible by (uv)^" + std::to_string(t) + ": term u^" +
                              std::to_string(pq.first) + " v^" + std::to_string(pq.second));
    }
    out.add(pq.first - t, pq.second - t, v);
  }
  return out;
}

EPoly& EPoly::operator+=(const EPoly& o) {
  for (const auto& [pq, v] : o.coeffs_) add(pq.first, pq.second, v);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
  for (const auto& [pq, v] : o.coeffs_) add(pq.first, pq.second, -v);
  return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly out;
  for (const auto& [pa, va] : a.coeffs_) {
    for (const auto& [pb, vb] : b.coeffs_) out.add(pa.first + pb.first, pa.second + pb.second, va * vb);
  }
  return out;
}

std::string EPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, BigInt>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.first + l.first.second;
    const int dr = r.first.first + r.first.second;
    return dl != dr ? dl < dr : l.first.first > r.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [pq, v] : terms) {
    const BigInt mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> f;
    const auto var = [](const char* name, int e) { return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e); };
    if (pq.first > 0) f.push_back(var("u", pq.first));
    if (pq.second > 0) f.push_back(var("v", pq.second));
    if (f.empty() || mag != 1) f.insert(f.begin(), mag.get_str());
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "*" : "") << f[i];
  }
  return os.str();
}

// Cubic hypersurfaces -------------------------------------------------------

namespace {

void require_n(int n, int min, const char* op) {
  if (n < min) throw UnsupportedRange(std::string(op) + ": requires n >= " + std::to_string(min));
}

// h^{n-q,q}_prim = dim of the degree-(3q+1-n) piece of the Jacobian ring,
// whose Hilbert series is (1+t)^{n+2}.
BigInt primitive_hodge_number(int n, int q) { return binomial(n + 2, 3 * q + 1 - n); }

}  // namespace

HodgeDiamond hodge_cubic(int n) {
  require_n(n, 1, "hodge_cubic");
  HodgeDiamond d;
  for (int p = 0; p <= n; ++p) d.add({2 * p, p, p}, 1);
  for (int q = 0; q <= n; ++q) d.add({n, n - q, q}, primitive_hodge_number(n, q));
  return d;
}

HodgeDiamond primitive_twisted(int n) {
  require_n(n, 2, "primitive_twisted");
  HodgeDiamond d;
  for (int q = 1; q < n; ++q) d.add({n - 2, n - q - 1, q - 1}, primitive_hodge_number(n, q));
  return d;
}

BigInt primitive_dimension(int n) {
  BigInt s = 0;
  for (int q = 0; q <= n; ++q) s += primitive_hodge_number(n, q);
  return s;
}

BigInt top_chern_coefficient(int n) {
  require_n(n, 1, "top_chern_coefficient");
  // [h^n] (1+h)^{n+2} * sum_j (-3h)^j
  BigInt c = 0;
  BigInt pow = 1;
  for (int j = 0; j <= n; ++j) {
    c += binomial(n + 2, n - j) * pow;
    pow *= -3;
  }
  return c;
}

BigInt euler_cubic(int n) {
  const BigInt chi = 3 * top_chern_coefficient(n);
  const BigInt betti = hodge_cubic(n).euler();
  if (chi != betti) {
    throw CheckFailed("euler_cubic(" + std::to_string(n) + "): Chern series gives " + chi.get_str() +
                      ", Hodge diamond gives " + betti.get_str());
  }
  return chi;
}

HodgeDiamond sym2_diamond(const HodgeDiamond& d) {
  std::vector<std::pair<HodgeCell, BigInt>> cells(d.entries().begin(), d.entries().end());
  HodgeDiamond out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& [c1, v1] = cells[i];
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const auto& [c2, v2] = cells[j];
      out.add({c1.k + c2.k, c1.p + c2.p, c1.q + c2.q}, v1 * v2);
    }
    const BigInt self = (c1.k % 2 == 0) ? BigInt(v1 * (v1 + 1) / 2) : BigInt(v1 * (v1 - 1) / 2);
    out.add({2 * c1.k, 2 * c1.p, 2 * c1.q}, self);
  }
  return out;
}

EPoly e_cubic(int n) { return EPoly::from_diamond(hodge_cubic(n)); }

EPoly e_hilb2(int n) {
  require_n(n, 1, "e_hilb2");
  const EPoly ex = e_cubic(n);
  // Blow-up of Sym^2 X along the diagonal: the exceptional divisor is a
  // P^{n-1}-bundle over X replacing a copy of X.
  return EPoly::from_diamond(sym2_diamond(hodge_cubic(n))) + EPoly::tate_range(1, n - 1) * ex;
}

HodgeDiamond diamond_from_epoly(const EPoly& e) {
  HodgeDiamond d;
  for (const auto& [pq, v] : e.coeffs()) {
    const int k = pq.first + pq.second;
    const BigInt h = (k % 2 == 0) ? v : BigInt(-v);
    if (h < 0) {
      throw CheckFailed("negative Hodge number h^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                        "} = " + h.get_str());
    }
    d.add({k, pq.first, pq.second}, h);
  }
  return d;
}

EPoly e_fano(int n) {
  require_n(n, 2, "e_fano");
  const EPoly rest = e_hilb2(n) - e_cubic(n) * EPoly::projective_space(n);
  const EPoly ef = rest.divided_by_uv_power(2);
  const int dim = 2 * (n - 2);

  diamond_from_epoly(ef);  // nonnegativity
  for (const auto& [pq, v] : ef.coeffs()) {
    if (pq.first > dim || pq.second > dim) {
      throw CheckFailed("e_fano(" + std::to_string(n) + "): term beyond dimension " + std::to_string(dim));
    }
  }
  const BigInt top = ef.at(dim, dim);
  // F is connected for n >= 3; for n = 2 it is a finite set of points.
  if (top <= 0 || (n >= 3 && top != 1)) {
    throw CheckFailed("e_fano(" + std::to_string(n) + "): top coefficient " + top.get_str());
  }
  if (!ef.is_symmetric()) throw CheckFailed("e_fano: not Hodge-symmetric");
  return ef;
}

HodgeDiamond fano_diamond(int n) { return diamond_from_epoly(e_fano(n)); }

GsStructure gs_structure_full(int n) {
  require_n(n, 2, "gs_structure");
  const HodgeDiamond h = primitive_twisted(n);
  HodgeDiamond rem = fano_diamond(n) - sym2_diamond(h);
  for (int k = 0; k <= n - 2; ++k) rem -= h.shifted(k);

  GsStructure out;
  out.n = n;
  out.a.assign(2 * (n - 2) + 1, 0);
  for (const auto& [c, v] : rem.entries()) {
    const bool tate = c.p == c.q && c.k == 2 * c.p && c.p >= 0 && c.p <= 2 * (n - 2);
    if (!tate || v < 0) {
      throw CheckFailed("gs_structure(" + std::to_string(n) + "): remainder entry H" + std::to_string(c.k) + "(" +
                        std::to_string(c.p) + "," + std::to_string(c.q) + ") = " + v.get_str());
    }
    out.a[c.p] = v;
  }
  out.remainder = std::move(rem);
  return out;
}

std::vector<BigInt> gs_structure(int n) { return gs_structure_full(n).a; }

std::size_t rank_R_FX(int n, int k) {
  if (n < 3) throw UnsupportedRange("rank_R_FX: requires n >= 3");
  if (k < 0) throw UnsupportedRange("rank_R_FX: negative codimension");
  const int dim_f = 2 * (n - 2);
  const auto ring = grassmann::build_ring(n);
  std::size_t total = 0;
  for (int a = 0; a <= std::min(k, dim_f); ++a) {
    const int b = k - a;
    if (b < 0 || b > n) continue;
    total += fano::taut_rank_F(ring, a);
  }
  // Gamma has codimension n-1 in F x X.
  const int j = k - (n - 1);
  if (j >= 0 && j <= n - 2) total += 1;
  return total;
}

}  // namespace cubic::hodge

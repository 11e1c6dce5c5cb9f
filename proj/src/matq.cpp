#include <cubic/errors.hpp>
#include <cubic/matq.hpp>

#include <algorithm>
#include <utility>

namespace cubic {

MatQ::MatQ(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

VecQ MatQ::operator*(std::span<const Rat> v) const {
  if (v.size() != cols_) throw UsageError("matrix-vector size mismatch");
  VecQ out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product size mismatch");
  MatQ out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Rref rref(const MatQ& m) {
  Rref out{m, {}};
  MatQ& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    }
    const Rat inv = Rat(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rat f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

namespace {

// Integer copy of m with each row scaled by the lcm of its denominators.
std::vector<std::vector<BigInt>> integer_rows(const MatQ& m) {
  std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (const Rat& v : m.row(r)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rat& v = m(r, c);
      out[r][c] = v.numerator() * (l / v.denominator());
    }
  }
  return out;
}

struct BareissResult {
  std::size_t rank = 0;
  int swaps = 0;
  BigInt last_pivot = 1;
};

// Fraction-free elimination; every division below is exact.
BareissResult bareiss(std::vector<std::vector<BigInt>>& a, std::size_t cols) {
  BareissResult res;
  BigInt prev = 1;
  const std::size_t rows = a.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != row) {
      std::swap(a[piv], a[row]);
      ++res.swaps;
    }
    const BigInt& p = a[row][col];
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        BigInt t = p * a[r][c] - a[r][col] * a[row][c];
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = p;
    ++row;
  }
  res.rank = row;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank(const MatQ& m) {
  auto a = integer_rows(m);
  return bareiss(a, m.cols()).rank;
}

Rat determinant(const MatQ& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  BigInt scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (const Rat& v : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
    scale *= l;
  }
  auto a = integer_rows(m);
  const auto res = bareiss(a, m.cols());
  if (res.rank < m.rows()) return 0;
  Rat det(res.last_pivot, scale);
  return res.swaps % 2 ? -det : det;
}

std::vector<VecQ> kernel_basis(const MatQ& m) {
  const Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<VecQ> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VecQ v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<VecQ> solve_linear(const MatQ& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw UsageError("right-hand side size mismatch");
  MatQ aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Rref rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  VecQ x(m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
  return x;
}

bool is_zero_vector(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

}  // namespace cubic

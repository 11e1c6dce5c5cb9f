#pragma once

#include <cubic/rat.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace cubic {

using VecQ = std::vector<Rat>;

/// Dense matrix of exact rationals, row-major.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatQ(std::initializer_list<std::initializer_list<Rat>> rows);

  static MatQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  MatQ transpose() const;
  VecQ operator*(std::span<const Rat> v) const;
  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend bool operator==(const MatQ&, const MatQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct Rref {
  MatQ reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination over Q.
Rref rref(const MatQ& m);

/// Rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators. Independent of rref().
std::size_t rank(const MatQ& m);

/// Determinant of a square matrix, fraction-free.
Rat determinant(const MatQ& m);

/// Basis of the right kernel, one vector per free column of the rref.
std::vector<VecQ> kernel_basis(const MatQ& m);

/// Some x with m*x = b, or nullopt when the system is inconsistent.
std::optional<VecQ> solve_linear(const MatQ& m, std::span<const Rat> b);

bool is_zero_vector(std::span<const Rat> v);

}  // namespace cubic

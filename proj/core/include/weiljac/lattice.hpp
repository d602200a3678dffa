#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weiljac/rational.hpp"

namespace weiljac {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Integer> apply(std::span<const Integer> v) const;
  IntMatrix transposed() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Exact inverse over Q; throws InvalidInput for a singular matrix.
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all d_i >= 0. The inverses of U and V are tracked alongside.
struct SmithForm {
  IntMatrix u, u_inv, v, v_inv;
  std::vector<Integer> diagonal;  // length min(rows, cols)
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Row basis (in echelon form) of the lattice spanned by the given integer
/// row vectors of length `dim`.
IntMatrix lattice_basis(std::span<const std::vector<Integer>> generators, std::size_t dim);

}  // namespace weiljac

#pragma once

#include <cstddef>
#include <vector>

#include "weiljac/cyclotomic.hpp"

namespace weiljac {

/// Dense matrix over cyclotomic numbers, row-major.
class MatrixCyc {
 public:
  MatrixCyc() = default;
  MatrixCyc(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static MatrixCyc identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  MatrixCyc operator*(const MatrixCyc& other) const;
  MatrixCyc operator-(const MatrixCyc& other) const;
  MatrixCyc scaled(const CycNum& c) const;
  MatrixCyc conjugate_transpose() const;
  MatrixCyc conjugate() const;
  std::vector<CycNum> apply(const std::vector<CycNum>& v) const;
  bool is_zero() const;

  friend bool operator==(const MatrixCyc& a, const MatrixCyc& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> data_;
};

/// Basis of {v : A v = 0} by Gauss-Jordan elimination over the field;
/// pivots are the first nonzero entries, so the result is deterministic.
/// Each basis vector has a 1 in its free coordinate.
std::vector<std::vector<CycNum>> kernel(MatrixCyc a);

std::size_t rank(MatrixCyc a);

/// Rank of a list of vectors of a common length.
std::size_t span_rank(const std::vector<std::vector<CycNum>>& vectors);

}  // namespace weiljac

#include "weiljac/linalg.hpp"

#include <algorithm>

#include "weiljac/errors.hpp"

namespace weiljac {

MatrixCyc MatrixCyc::identity(std::size_t n) {
  MatrixCyc m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1L);
  return m;
}

MatrixCyc MatrixCyc::operator*(const MatrixCyc& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix dimensions do not match");
  MatrixCyc out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t t = 0; t < cols_; ++t) {
      const CycNum& a = (*this)(i, t);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const CycNum& b = other(t, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

MatrixCyc MatrixCyc::operator-(const MatrixCyc& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix dimensions do not match");
  MatrixCyc out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= other.data_[k];
  return out;
}

MatrixCyc MatrixCyc::scaled(const CycNum& c) const {
  MatrixCyc out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

MatrixCyc MatrixCyc::conjugate_transpose() const {
  MatrixCyc out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conjugate();
  return out;
}

MatrixCyc MatrixCyc::conjugate() const {
  MatrixCyc out = *this;
  for (auto& x : out.data_) x = x.conjugate();
  return out;
}

std::vector<CycNum> MatrixCyc::apply(const std::vector<CycNum>& v) const {
  if (v.size() != cols_) throw InvalidInput("vector length does not match matrix");
  std::vector<CycNum> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool MatrixCyc::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycNum& x) { return x.is_zero(); });
}

bool operator==(const MatrixCyc& a, const MatrixCyc& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(MatrixCyc& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const CycNum inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const CycNum factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<CycNum>> kernel(MatrixCyc a) {
  const std::vector<std::size_t> pivots = row_reduce(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<CycNum>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycNum> v(a.cols());
    v[f] = CycNum(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(MatrixCyc a) { return row_reduce(a).size(); }

std::size_t span_rank(const std::vector<std::vector<CycNum>>& vectors) {
  if (vectors.empty()) return 0;
  MatrixCyc m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != m.cols()) throw InvalidInput("vectors of different lengths");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  }
  return rank(std::move(m));
}

}  // namespace weiljac

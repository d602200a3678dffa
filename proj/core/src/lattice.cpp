#include "weiljac/lattice.hpp"

#include <algorithm>
#include <utility>

#include "weiljac/errors.hpp"

namespace weiljac {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), other(k, j).get_mpz_t());
    }
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw InvalidInput("vector length mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidInput("inverse of a non-square matrix");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("matrix is singular");
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

namespace {

// Row and column operations on the working matrix, mirrored on the transforms.
struct SmithWork {
  IntMatrix a;
  SmithForm f;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < f.u.cols(); ++c) std::swap(f.u(i, c), f.u(j, c));
    for (std::size_t r = 0; r < f.u_inv.rows(); ++r) std::swap(f.u_inv(r, i), f.u_inv(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < f.v.rows(); ++r) std::swap(f.v(r, i), f.v(r, j));
    for (std::size_t c = 0; c < f.v_inv.cols(); ++c) std::swap(f.v_inv(i, c), f.v_inv(j, c));
  }
  // row_i -= q * row_t
  void row_axpy(std::size_t i, std::size_t t, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_submul(a(i, c).get_mpz_t(), q.get_mpz_t(), a(t, c).get_mpz_t());
    for (std::size_t c = 0; c < f.u.cols(); ++c) mpz_submul(f.u(i, c).get_mpz_t(), q.get_mpz_t(), f.u(t, c).get_mpz_t());
    for (std::size_t r = 0; r < f.u_inv.rows(); ++r)
      mpz_addmul(f.u_inv(r, t).get_mpz_t(), q.get_mpz_t(), f.u_inv(r, i).get_mpz_t());
  }
  // col_j -= q * col_t
  void col_axpy(std::size_t j, std::size_t t, const Integer& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) mpz_submul(a(r, j).get_mpz_t(), q.get_mpz_t(), a(r, t).get_mpz_t());
    for (std::size_t r = 0; r < f.v.rows(); ++r) mpz_submul(f.v(r, j).get_mpz_t(), q.get_mpz_t(), f.v(r, t).get_mpz_t());
    for (std::size_t c = 0; c < f.v_inv.cols(); ++c)
      mpz_addmul(f.v_inv(t, c).get_mpz_t(), q.get_mpz_t(), f.v_inv(j, c).get_mpz_t());
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < f.u.cols(); ++c) f.u(i, c) = -f.u(i, c);
    for (std::size_t r = 0; r < f.u_inv.rows(); ++r) f.u_inv(r, i) = -f.u_inv(r, i);
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  SmithWork w{input, SmithForm{IntMatrix::identity(rows), IntMatrix::identity(rows),
                               IntMatrix::identity(cols), IntMatrix::identity(cols), {}}};
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot: nonzero entry of least absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (w.a(i, j) == 0) continue;
          if (pi == rows || abs(w.a(i, j)) < abs(w.a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        for (std::size_t r = t; r < n; ++r) w.f.diagonal.push_back(0);
        return w.f;
      }
      if (pi != t) w.swap_rows(pi, t);
      if (pj != t) w.swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.a(i, t) == 0) continue;
        w.row_axpy(i, t, floor_div(w.a(i, t), w.a(t, t)));
        if (w.a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a(t, j) == 0) continue;
        w.col_axpy(j, t, floor_div(w.a(t, j), w.a(t, t)));
        if (w.a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with an offending entry into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          Integer r;
          mpz_tdiv_r(r.get_mpz_t(), w.a(i, j).get_mpz_t(), w.a(t, t).get_mpz_t());
          if (r != 0) {
            bad = i;
            break;
          }
        }
      if (bad == rows) break;
      w.row_axpy(t, bad, Integer(-1));
    }
    if (w.a(t, t) < 0) w.negate_row(t);
    w.f.diagonal.push_back(w.a(t, t));
  }
  return w.f;
}

IntMatrix lattice_basis(std::span<const std::vector<Integer>> generators, std::size_t dim) {
  std::vector<std::vector<Integer>> rows(generators.begin(), generators.end());
  for (const auto& r : rows)
    if (r.size() != dim) throw InvalidInput("generator length mismatch");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < dim && rank < rows.size(); ++c) {
    // Euclid on column c among rows [rank, end).
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[best], rows[rank]);
      bool done = true;
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = floor_div(rows[i][c], rows[rank][c]);
        for (std::size_t j = c; j < dim; ++j) mpz_submul(rows[i][j].get_mpz_t(), q.get_mpz_t(), rows[rank][j].get_mpz_t());
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[rank][c] == 0) continue;
    if (rows[rank][c] < 0)
      for (auto& x : rows[rank]) x = -x;
    ++rank;
  }
  IntMatrix basis(rank, dim);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < dim; ++j) basis(i, j) = rows[i][j];
  return basis;
}

}  // namespace weiljac

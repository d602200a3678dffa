#include "weiljac/gram.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "weiljac/errors.hpp"

namespace weiljac {
namespace {

Integer leading_minor(const IntMatrix& a, std::size_t k) {
  IntMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, j);
  return determinant(sub);
}

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidInput("index matrix must be square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

}  // namespace

HalfIntegralMatrix::HalfIntegralMatrix(const std::vector<std::vector<std::int64_t>>& two_f)
    : HalfIntegralMatrix(from_rows(two_f)) {}

HalfIntegralMatrix::HalfIntegralMatrix(IntMatrix two_f) : two_f_(std::move(two_f)) {
  const std::size_t n = two_f_.rows();
  if (n == 0 || two_f_.cols() != n) throw InvalidInput("index matrix must be square and nonempty");
  for (std::size_t i = 0; i < n; ++i) {
    if (two_f_(i, i) % 2 != 0) throw InvalidInput("2F must have even diagonal entries");
    for (std::size_t j = 0; j < i; ++j)
      if (two_f_(i, j) != two_f_(j, i)) throw InvalidInput("2F must be symmetric");
  }
  for (std::size_t k = 1; k <= n; ++k)
    if (leading_minor(two_f_, k) <= 0) throw InvalidInput("2F must be positive definite");
  det_ = determinant(two_f_);
  inv_ = rational_inverse(two_f_);

  const std::int64_t bound = to_int64(det_);
  for (std::int64_t f = 1; f <= bound; ++f) {
    const Rational fr(f);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = is_integer(Rational(i == j ? fr * inv_[i][j] : Rational(2 * fr * inv_[i][j])));
    if (ok) {
      level_ = f;
      break;
    }
  }
}

HalfIntegralMatrix HalfIntegralMatrix::parse(std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string s(text);
  std::stringstream outer(s);
  std::string row;
  while (std::getline(outer, row, ';')) {
    for (char& c : row)
      if (c == ',') c = ' ';
    std::stringstream in(row);
    std::vector<std::int64_t> vals;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw InvalidInput("malformed matrix entry '" + tok + "'");
      }
      if (used != tok.size()) throw InvalidInput("malformed matrix entry '" + tok + "'");
      vals.push_back(v);
    }
    if (!vals.empty()) rows.push_back(std::move(vals));
  }
  if (rows.empty()) throw InvalidInput("empty matrix");
  return HalfIntegralMatrix(rows);
}

HalfIntegralMatrix HalfIntegralMatrix::scalar(std::int64_t l) {
  if (l < 1) throw InvalidInput("scalar index must be positive");
  return HalfIntegralMatrix(std::vector<std::vector<std::int64_t>>{{2 * l}});
}

HalfIntegralMatrix HalfIntegralMatrix::e8() {
  return HalfIntegralMatrix(std::vector<std::vector<std::int64_t>>{
      {2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
      {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, -1, 0, 0, 0, 0, 2}});
}

HalfIntegralMatrix HalfIntegralMatrix::binary_prime(std::int64_t p) {
  if (p < 3 || p % 4 != 3) throw InvalidInput("binary prime index needs p = 3 mod 4");
  return HalfIntegralMatrix(std::vector<std::vector<std::int64_t>>{{2, 1}, {1, (p + 1) / 2}});
}

std::int64_t HalfIntegralMatrix::two_f(std::size_t i, std::size_t j) const { return to_int64(two_f_(i, j)); }

Rational HalfIntegralMatrix::inv_bilinear(std::span<const Integer> r, std::span<const Integer> s) const {
  const std::size_t n = size();
  if (r.size() != n || s.size() != n) throw InvalidInput("vector length does not match index size");
  Rational acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += inv_[i][j] * s[j];
    acc += row * r[i];
  }
  return acc;
}

Rational HalfIntegralMatrix::quarter_inv_quadratic(std::span<const Integer> r) const {
  return inv_bilinear(r, r) / 2;
}

Rational HalfIntegralMatrix::quarter_inv_quadratic(std::span<const std::int64_t> r) const {
  std::vector<Integer> v;
  for (std::int64_t x : r) v.emplace_back(static_cast<long>(x));
  return quarter_inv_quadratic(v);
}

HalfIntegralMatrix HalfIntegralMatrix::with_scalar_block(std::int64_t l) const {
  if (l < 1) throw InvalidInput("scalar index must be positive");
  const std::size_t n = size();
  IntMatrix m(n + 1, n + 1);
  m(0, 0) = static_cast<long>(2 * l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i + 1, j + 1) = two_f_(i, j);
  return HalfIntegralMatrix(std::move(m));
}

DiscriminantForm::DiscriminantForm(const HalfIntegralMatrix& f) : f_(f), snf_(smith_normal_form(f.two_f())) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    if (snf_.diagonal[i] > 1) kept_.push_back(i);
  std::vector<std::int64_t> orders;
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i : kept_) {
    orders.push_back(to_int64(snf_.diagonal[i]));
    std::vector<Integer> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = snf_.u_inv(j, i);
    gens.push_back(std::move(col));
  }
  std::vector<std::vector<Rational>> gram(kept_.size(), std::vector<Rational>(kept_.size()));
  for (std::size_t i = 0; i < kept_.size(); ++i)
    for (std::size_t j = 0; j < kept_.size(); ++j)
      gram[i][j] = mod1(i == j ? f.quarter_inv_quadratic(gens[i]) : f.inv_bilinear(gens[i], gens[j]));
  module_ = FiniteQuadraticModule(std::move(orders), std::move(gram));
}

Element DiscriminantForm::element_of(std::span<const Integer> r) const {
  const std::vector<Integer> ur = snf_.u.apply(r);
  Element x;
  for (std::size_t i : kept_) {
    Integer v;
    mpz_fdiv_r(v.get_mpz_t(), ur[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t());
    x.push_back(to_int64(v));
  }
  return x;
}

Element DiscriminantForm::element_of(std::span<const std::int64_t> r) const {
  std::vector<Integer> v;
  for (std::int64_t x : r) v.emplace_back(static_cast<long>(x));
  return element_of(v);
}

std::vector<Integer> DiscriminantForm::representative(const Element& x) const {
  const std::size_t n = f_.size();
  if (x.size() != kept_.size()) throw InvalidInput("element has wrong length");
  std::vector<Integer> r(n, 0);
  for (std::size_t k = 0; k < kept_.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) r[j] += snf_.u_inv(j, kept_[k]) * static_cast<long>(x[k]);
  return r;
}

FiniteQuadraticModule discriminant_module(const HalfIntegralMatrix& f) { return DiscriminantForm(f).module(); }

MilgramReport milgram_report(const HalfIntegralMatrix& f, double margin) {
  const FiniteQuadraticModule m = discriminant_module(f);
  const GaussSum g = sigma_invariant(m);
  const auto n = static_cast<std::int64_t>(f.size());
  MilgramReport report;
  report.exact_identity =
      g.sum * g.sum == CycNum(static_cast<long>(m.order())) * CycNum::root_of_unity(-n, 4);
  const std::complex<double> rotated = g.sigma() * (CycNum::root_of_unity(n, 8).eval_complex());
  report.real_part = rotated.real();
  report.sign_ok = rotated.real() > margin;
  return report;
}

bool milgram_check(const HalfIntegralMatrix& f) { return milgram_report(f).passed(); }

}  // namespace weiljac

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "weiljac/fqm.hpp"
#include "weiljac/lattice.hpp"
#include "weiljac/rational.hpp"

namespace weiljac {

/// Index matrix F, stored as the integral matrix 2F.
///
/// 2F must be symmetric with even diagonal and positive definite; the latter
/// is checked through the leading principal minors.
class HalfIntegralMatrix {
 public:
  explicit HalfIntegralMatrix(IntMatrix two_f);
  explicit HalfIntegralMatrix(const std::vector<std::vector<std::int64_t>>& two_f);

  /// Rows separated by ';', entries by blanks or commas: "2 1; 1 2".
  static HalfIntegralMatrix parse(std::string_view text);
  /// 2F = 2I (F = identity) scaled so that F = (l).
  static HalfIntegralMatrix scalar(std::int64_t l);
  /// The E8 root lattice Gram matrix as 2F.
  static HalfIntegralMatrix e8();
  /// 2F = [[2, 1], [1, (p + 1)/2]], det(2F) = p for p = 3 mod 4.
  static HalfIntegralMatrix binary_prime(std::int64_t p);

  std::size_t size() const noexcept { return two_f_.rows(); }
  const IntMatrix& two_f() const noexcept { return two_f_; }
  std::int64_t two_f(std::size_t i, std::size_t j) const;

  const Integer& det_two_f() const noexcept { return det_; }
  /// Smallest f with f (2F)^{-1} integral on the diagonal and half-integral
  /// off it.
  std::int64_t level() const noexcept { return level_; }
  /// (2F)^{-1}.
  const std::vector<std::vector<Rational>>& two_f_inverse() const noexcept { return inv_; }

  /// (1/4) F^{-1}[r] = (1/2) r^t (2F)^{-1} r.
  Rational quarter_inv_quadratic(std::span<const Integer> r) const;
  Rational quarter_inv_quadratic(std::span<const std::int64_t> r) const;
  /// r^t (2F)^{-1} s.
  Rational inv_bilinear(std::span<const Integer> r, std::span<const Integer> s) const;

  /// (l) + F as a block diagonal index of size n + 1.
  HalfIntegralMatrix with_scalar_block(std::int64_t l) const;

  friend bool operator==(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) { return a.two_f_ == b.two_f_; }

 private:
  IntMatrix two_f_;
  Integer det_;
  std::int64_t level_ = 1;
  std::vector<std::vector<Rational>> inv_;
};

/// D_F = Z^n / 2F Z^n presented through the Smith form U (2F) V = D.
/// An integer vector r maps to the element ((U r)_i mod d_i) over the
/// components with d_i > 1; component generators are columns of U^{-1}.
class DiscriminantForm {
 public:
  explicit DiscriminantForm(const HalfIntegralMatrix& f);

  const HalfIntegralMatrix& index() const noexcept { return f_; }
  const FiniteQuadraticModule& module() const noexcept { return module_; }

  Element element_of(std::span<const Integer> r) const;
  Element element_of(std::span<const std::int64_t> r) const;
  /// Integer vector representing x.
  std::vector<Integer> representative(const Element& x) const;

 private:
  HalfIntegralMatrix f_;
  SmithForm snf_;
  std::vector<std::size_t> kept_;  // SNF positions with d_i > 1
  FiniteQuadraticModule module_;
};

FiniteQuadraticModule discriminant_module(const HalfIntegralMatrix& f);

struct MilgramReport {
  bool exact_identity = false;  // G^2 == |D_F| e(-n/4)
  bool sign_ok = false;         // Re(sigma e(n/8)) > margin
  double real_part = 0.0;       // Re(sigma e(n/8))
  bool passed() const noexcept { return exact_identity && sign_ok; }
};

MilgramReport milgram_report(const HalfIntegralMatrix& f, double margin = 0.1);
bool milgram_check(const HalfIntegralMatrix& f);

}  // namespace weiljac

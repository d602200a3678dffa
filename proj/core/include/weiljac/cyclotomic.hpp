#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "weiljac/rational.hpp"

namespace weiljac {

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Computed once per N and cached; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

/// An element of the cyclotomic field Q(zeta_N), zeta_N = e^{2 pi i / N}.
///
/// Stored in the power basis 1, zeta, ..., zeta^{phi(N)-1} after reduction
/// modulo Phi_N, as integer numerators over one positive common denominator
/// with gcd 1. The representation is canonical for a fixed order, so
/// equality is coefficient-wise; operands of different orders are promoted
/// to the lcm of their orders.
class CycNum {
 public:
  CycNum();
  CycNum(const Rational& value);  // NOLINT: implicit by design of the field embedding
  CycNum(long value);             // NOLINT

  /// e(num/den) = exp(2 pi i num / den) in Q(zeta_den).
  static CycNum root_of_unity(std::int64_t num, std::int64_t den);

  /// Builds sum_j coeffs[j] zeta_order^j; any length is accepted and reduced.
  static CycNum from_coefficients(std::uint32_t order, std::span<const Rational> coeffs);

  /// sum_j coeffs[j] zeta_order^j / den with integer coefficients.
  static CycNum from_integers(std::uint32_t order, std::vector<Integer> coeffs, Integer den = 1);

  /// sqrt(3) = zeta_12 + zeta_12^{-1}.
  static CycNum sqrt3();

  std::uint32_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return num_.size(); }

  Rational coefficient(std::size_t j) const;
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidInput when the element is not rational.
  Rational to_rational() const;

  /// Same element viewed in Q(zeta_new_order); order() must divide new_order.
  CycNum promote(std::uint32_t new_order) const;
  /// Same element viewed in Q(zeta_new_order); throws InvalidInput when it
  /// does not lie in that subfield.
  CycNum demote(std::uint32_t new_order) const;

  CycNum conjugate() const;
  CycNum real_part() const;
  CycNum inverse() const;

  /// Multiplies by zeta_order^exponent without a general product.
  CycNum times_root(std::int64_t exponent) const;

  /// Numeric embedding zeta_N -> e^{2 pi i/N}, evaluated with `precision`
  /// bits of working precision.
  std::complex<double> eval_complex(int precision = 64) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  CycNum(std::uint32_t order, std::vector<Integer> num, Integer den);
  void normalize();

  std::uint32_t order_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// Reduces an integer polynomial (constant term first) modulo Phi_order, in
/// place; the result has exactly euler_phi(order) coefficients.
void reduce_mod_cyclotomic(std::vector<Integer>& poly, std::uint32_t order);

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b);

}  // namespace weiljac

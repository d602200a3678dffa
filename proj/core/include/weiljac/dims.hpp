#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weiljac/gram.hpp"
#include "weiljac/rational.hpp"

namespace weiljac {

/// Right hand side of the dimension formula at weight k, term by term.
struct DimResult {
  std::int64_t k = 0;
  Integer value;
  Rational main_term;    // (k - n/2 - 1)/12 dim X
  Rational s_term;       // 1/4 Re(e((2k-n)/8) tr(rho*(S)|X))
  Rational st_term;      // 2/(3 sqrt 3) Re(e((2k-n+1)/12) tr(rho*(ST)|X))
  Rational lambda_term;  // -sum (lambda_j - 1/2)
  std::size_t dim_x = 0;
  /// T-eigenvalue exponents on the basis of X, in [0, 1), zeros included.
  std::vector<Rational> lambdas;
};

/// Dimension of J_{k,F}(SL2(Z)) for k >= n/2 + 2 from the Weil-representation
/// formula. Throws InvalidInput below that range and InvariantViolation when
/// the total is not a nonnegative integer.
DimResult theorem1_dim(const HalfIntegralMatrix& f, std::int64_t k, std::size_t bound = 2000);

/// Kronecker symbol (a/n).
int kronecker(std::int64_t a, std::int64_t n);

bool is_prime(std::int64_t n);

/// Number of reduced primitive positive definite forms of discriminant -p,
/// p = 3 mod 4 prime, p > 3.
std::int64_t class_number(std::int64_t p);

struct BinaryPrimeTerms {
  Rational t1, t2, t3, t4, t5;
  Rational total() const { return t1 + t2 + t3 + t4 + t5; }
};

BinaryPrimeTerms binary_prime_terms(std::int64_t p, std::int64_t k);
/// Closed formula for dim J_{k,F} with binary F, det(2F) = p prime, k >= 3.
Integer binary_prime_dim(std::int64_t p, std::int64_t k);

/// dim Inv(W(D_F)) for even n; equals dim J_{n/2,F}.
std::size_t singular_weight_dim(const HalfIntegralMatrix& f, std::size_t bound = 200);

/// Smallest m > 0 with level(F) | 4m.
std::int64_t default_critical_m(const HalfIntegralMatrix& f);

/// dim J_{(n+1)/2,F} for odd n as a sum over l | m, m/l squarefree, of
/// iota-fixed invariant dimensions. Throws InvalidInput unless level(F) | 4m.
std::size_t critical_weight_dim(const HalfIntegralMatrix& f, std::optional<std::int64_t> m = std::nullopt,
                                std::size_t bound = 200);

struct PoincareResult {
  std::int64_t k_max = 0;
  /// dims[k] for 0 <= k <= k_max; the unknown weight holds 0.
  std::vector<Integer> dims;
  /// Weight n/2 + 1 (even n) or (n + 3)/2 (odd n), not covered by any formula.
  std::int64_t unknown_weight = 0;
  /// (1 - x^4)(1 - x^6) sum_k dims[k] x^k, coefficients 0..k_max.
  std::vector<Integer> ptilde;
  bool recurrence_ok = false;
  bool degree_ok = false;  // ptilde has degree <= 12
  Integer ptilde_at_one;
  bool rank_identity = false;  // ptilde(1) == det(2F)
  /// Dimension at the unknown weight when the nonnegativity argument pins it.
  std::optional<Integer> inferred_unknown;
  Integer unknown_upper_bound;  // feasible values are 0..upper
};

PoincareResult hilbert_poincare(const HalfIntegralMatrix& f, std::int64_t k_max = 24);

/// Coefficient of x^k in poly / ((1 - x^4)(1 - x^6)).
Integer series_coefficient(const std::vector<Integer>& poly, std::int64_t k);

}  // namespace weiljac

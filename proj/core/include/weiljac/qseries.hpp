#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weiljac/fqm.hpp"
#include "weiljac/gram.hpp"
#include "weiljac/rational.hpp"

namespace weiljac {

using Complex = std::complex<double>;

/// Truncated expansion sum c(l) q^l with rational exponents l. Terms with
/// l > truncation are unknown; an empty truncation marks an exact
/// (finite) series.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::optional<Rational> truncation) : truncation_(std::move(truncation)) {}
  static QSeries monomial(const Rational& coeff, const Rational& exponent);

  const std::map<Rational, Rational>& coefficients() const noexcept { return coeffs_; }
  const std::optional<Rational>& truncation() const noexcept { return truncation_; }
  /// lcm of the exponent denominators.
  Integer exponent_denominator() const;

  Rational coefficient(const Rational& exponent) const;
  void add_term(const Rational& exponent, const Rational& coeff);
  std::optional<Rational> valuation() const;
  bool is_zero() const { return coeffs_.empty(); }

  QSeries truncated(const Rational& t) const;
  QSeries pow(unsigned e) const;
  Complex evaluate(Complex tau) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::optional<Rational> truncation_;
  std::map<Rational, Rational> coeffs_;
};

/// Truncated sum c(l, r) q^l zeta^{r / zeta_den} in n elliptic variables;
/// zeta_den = 2 carries half-integral zeta exponents.
class FourierJacobiSeries {
 public:
  using Key = std::pair<Rational, std::vector<std::int64_t>>;

  FourierJacobiSeries(std::size_t nvars, std::int64_t zeta_den, std::optional<Rational> truncation);
  static FourierJacobiSeries from_q(const QSeries& s, std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  std::int64_t zeta_den() const noexcept { return zeta_den_; }
  const std::optional<Rational>& truncation() const noexcept { return truncation_; }
  const std::map<Key, Rational>& coefficients() const noexcept { return coeffs_; }
  Integer exponent_denominator() const;

  Rational coefficient(const Rational& l, const std::vector<std::int64_t>& r) const;
  void add_term(const Rational& l, std::vector<std::int64_t> r, const Rational& coeff);
  std::optional<Rational> valuation() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// zeta_new^{M r}: row i of `map` gives new exponent i in terms of the old ones.
  FourierJacobiSeries substitute(const std::vector<std::vector<std::int64_t>>& map) const;
  /// Rewrites with the given zeta denominator (a multiple of the current one,
  /// or a divisor when every exponent allows it).
  FourierJacobiSeries with_zeta_den(std::int64_t den) const;
  /// Smallest zeta denominator representing the same series.
  FourierJacobiSeries normalized() const;
  FourierJacobiSeries truncated(const Rational& t) const;
  /// Sets zeta_i = 1 for the given variable index, dropping it.
  FourierJacobiSeries specialize_to_one(std::size_t var) const;

  Complex evaluate(Complex tau, const std::vector<Complex>& z) const;

  FourierJacobiSeries& operator+=(const FourierJacobiSeries& o);
  FourierJacobiSeries& operator-=(const FourierJacobiSeries& o);
  friend FourierJacobiSeries operator+(FourierJacobiSeries a, const FourierJacobiSeries& b) { return a += b; }
  friend FourierJacobiSeries operator-(FourierJacobiSeries a, const FourierJacobiSeries& b) { return a -= b; }
  friend FourierJacobiSeries operator*(const FourierJacobiSeries& a, const FourierJacobiSeries& b);
  friend FourierJacobiSeries operator*(const Rational& c, const FourierJacobiSeries& a);
  friend bool operator==(const FourierJacobiSeries& a, const FourierJacobiSeries& b) = default;

 private:
  std::size_t nvars_;
  std::int64_t zeta_den_;
  std::optional<Rational> truncation_;
  std::map<Key, Rational> coeffs_;
};

/// Truncation of a product: min(tA + val(B), tB + val(A)).
std::optional<Rational> product_truncation(const std::optional<Rational>& ta, const std::optional<Rational>& va,
                                           const std::optional<Rational>& tb, const std::optional<Rational>& vb);

/// Integer vectors r with (1/4) F^{-1}[r] <= bound, r = x mod 2F Z^n when a
/// class is given. Fincke-Pohst style enumeration with an exact final test.
std::vector<std::vector<std::int64_t>> lattice_points(const HalfIntegralMatrix& f, const Rational& bound,
                                                      const std::vector<std::int64_t>* coset = nullptr);

/// Same set by scanning the bounding box; kept as an independent oracle.
std::vector<std::vector<std::int64_t>> lattice_points_box(const HalfIntegralMatrix& f, const Rational& bound,
                                                          const std::vector<std::int64_t>* coset = nullptr);

/// theta_{F,x} = sum_{r = x mod 2F Z^n} q^{(1/4)F^{-1}[r]} zeta^r.
FourierJacobiSeries theta_F_x(const HalfIntegralMatrix& f, const std::vector<std::int64_t>& x, const Rational& truncation);

enum class ThetaForm { sum, product };

/// vartheta(tau, z) = sum_n (-4/n) q^{n^2/8} zeta^{n/2}, stored with zeta_den 2.
FourierJacobiSeries jacobi_theta(const Rational& truncation, ThetaForm form = ThetaForm::sum);

/// prod_{n >= 1} (1 - q^n) up to q^truncation.
QSeries euler_product(const Rational& truncation);
/// q^{1/24} prod_{n >= 1} (1 - q^n).
QSeries dedekind_eta(const Rational& truncation);

/// vartheta(z1) vartheta(z1 + z2) vartheta(z2) eta^15, index 2F = [[2,1],[1,2]].
FourierJacobiSeries psi9(const Rational& truncation);

/// a_k(N) = sum_{st = N} s^{k-2} [(s/3) - (t/3)]; a_k(0) = L(2-k, (./3))/2.
Rational a_k_coefficient(std::int64_t k, std::int64_t n);

enum class PsiWindow {
  support,  // 3n - (a^2 - ab + b^2) >= 0, i.e. 4l - F^{-1}[r] >= 0
  literal,  // n - (a^2 - ab + b^2) >= 0
};

/// Psi_k for even k, index 2F = [[2,1],[1,2]], terms with n <= truncation.
FourierJacobiSeries psi_k(std::int64_t k, std::int64_t truncation, PsiWindow window = PsiWindow::support);

/// h_x read off from c(l, r) = coefficient of q^{l - (1/4)F^{-1}[r]} in h_{r mod 2F}.
/// Keys are elements of D_F. Throws InvalidInput when two representatives disagree.
std::map<Element, QSeries> theta_decomposition(const FourierJacobiSeries& phi, const HalfIntegralMatrix& f);

struct JacobiReport {
  bool support = true;
  bool periodicity = true;
  bool parity = true;
  std::string witness;
  bool passed() const noexcept { return support && periodicity && parity; }
};

JacobiReport check_jacobi_constraints(const FourierJacobiSeries& phi, std::int64_t k, const HalfIntegralMatrix& f);

struct SL2 {
  std::int64_t a, b, c, d;
};

enum class Multiplier { none, theta };

/// Index as a rational matrix F (F[z] = z^t F z), so half-integral indices
/// such as vartheta's (1/2) are allowed.
struct TransformSpec {
  std::vector<std::vector<Rational>> index;
  Rational weight;
  Multiplier multiplier = Multiplier::none;
};

struct TransformResult {
  bool passed = false;
  double error = 0.0;
  SL2 matrix{1, 0, 0, 1};
  Complex lhs, rhs;
};

/// Matrix and metaplectic w_A(tau) of a word in S, T, T^{-1}; w_S = sqrt(tau)
/// on the principal branch, composition (A,w)(B,v) = (AB, w(B tau) v(tau)).
std::pair<SL2, Complex> metaplectic_word(const std::vector<char>& letters, Complex tau);

/// phi(A tau, z/(c tau + d)) w(tau)^{-2k} e(-c F[z]/(c tau + d)) against
/// mult * phi(tau, z); mult = eps^3, eps = eta(A tau)/(w(tau) eta(tau)) for
/// Multiplier::theta. Throws InsufficientTruncation when the series tail at
/// tau or A tau is not below tol/10.
TransformResult numeric_transform_check(const FourierJacobiSeries& phi, const std::string& word,
                                        const TransformSpec& spec, Complex tau, const std::vector<Complex>& z,
                                        double tol);

}  // namespace weiljac

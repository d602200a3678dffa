#include "weiljac/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "weiljac/errors.hpp"

namespace weiljac {
namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division of `num` by the monic polynomial `den`; both constant term first.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  const std::size_t dn = den.size() - 1;
  IntPoly quot(rem.size() - dn, 0);
  for (std::size_t i = rem.size(); i-- > dn;) {
    const std::int64_t c = rem[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) {
      __int128 v = static_cast<__int128>(rem[i - dn + t]) - static_cast<__int128>(c) * den[t];
      if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw InvalidInput("cyclotomic polynomial coefficients overflow 64 bits");
      rem[i - dn + t] = static_cast<std::int64_t>(v);
    }
  }
  for (std::size_t t = 0; t < dn; ++t)
    if (rem[t] != 0) throw InvariantViolation("inexact cyclotomic division");
  return quot;
}

struct PhiCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint32_t, std::unique_ptr<const IntPoly>> table;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// RAII holder for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw InvalidInput("cyclotomic polynomial of order 0");
  auto& cache = phi_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(n);
    if (it != cache.table.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = divide_exact(poly, cyclotomic_polynomial(d));
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.emplace(n, std::make_unique<const IntPoly>(std::move(poly)));
  return *it->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint32_t lcm_order(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > std::numeric_limits<std::uint32_t>::max())
    throw InvalidInput("cyclotomic order overflow");
  return static_cast<std::uint32_t>(l);
}

void reduce_mod_cyclotomic(std::vector<Integer>& poly, std::uint32_t order) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  if (poly.size() > order) {
    for (std::size_t i = order; i < poly.size(); ++i) {
      if (poly[i] != 0) poly[i % order] += poly[i];
    }
    poly.resize(order);
  }
  std::vector<std::size_t> support;
  for (std::size_t t = 0; t < deg; ++t)
    if (phi[t] != 0) support.push_back(t);
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const Integer c = poly[i];
    for (std::size_t t : support) {
      Integer& target = poly[i - deg + t];
      const long f = static_cast<long>(phi[t]);
      if (f > 0)
        mpz_submul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(f));
      else
        mpz_addmul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-f));
    }
    poly[i] = 0;
  }
  poly.resize(deg);
}

CycNum::CycNum() : order_(1), num_(1), den_(1) {}

CycNum::CycNum(const Rational& value) : order_(1), num_{value.get_num()}, den_(value.get_den()) {}

CycNum::CycNum(long value) : order_(1), num_{Integer(value)}, den_(1) {}

CycNum::CycNum(std::uint32_t order, std::vector<Integer> num, Integer den)
    : order_(order), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_)
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycNum CycNum::root_of_unity(std::int64_t num, std::int64_t den) {
  if (den < 1) throw InvalidInput("root_of_unity: denominator must be positive");
  const std::int64_t e = ((num % den) + den) % den;
  const auto order = static_cast<std::uint32_t>(den);
  std::vector<Integer> v(static_cast<std::size_t>(std::max<std::int64_t>(e + 1, 1)));
  v[static_cast<std::size_t>(e)] = 1;
  reduce_mod_cyclotomic(v, order);
  return CycNum(order, std::move(v), 1);
}

CycNum CycNum::from_coefficients(std::uint32_t order, std::span<const Rational> coeffs) {
  if (order == 0) throw InvalidInput("cyclotomic order must be positive");
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  std::vector<Integer> v(std::max<std::size_t>(coeffs.size(), 1));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    v[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  }
  reduce_mod_cyclotomic(v, order);
  return CycNum(order, std::move(v), std::move(den));
}

CycNum CycNum::from_integers(std::uint32_t order, std::vector<Integer> coeffs, Integer den) {
  if (order == 0) throw InvalidInput("cyclotomic order must be positive");
  if (den == 0) throw DivisionByZero();
  if (coeffs.empty()) coeffs.resize(1);
  reduce_mod_cyclotomic(coeffs, order);
  return CycNum(order, std::move(coeffs), std::move(den));
}

CycNum CycNum::sqrt3() { return root_of_unity(1, 12) + root_of_unity(11, 12); }

Rational CycNum::coefficient(std::size_t j) const {
  if (j >= num_.size()) return Rational(0);
  Rational r(num_[j], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNum::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t j = 0; j < num_.size(); ++j) out.push_back(coefficient(j));
  return out;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return c == 0; });
}

Rational CycNum::to_rational() const {
  if (!is_rational()) throw InvalidInput("cyclotomic number is not rational");
  return coefficient(0);
}

CycNum CycNum::promote(std::uint32_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order == 0 || new_order % order_ != 0)
    throw InvalidInput("promote: target order " + std::to_string(new_order) +
                       " is not a multiple of " + std::to_string(order_));
  const std::size_t k = new_order / order_;
  std::vector<Integer> v((num_.size() - 1) * k + 1);
  for (std::size_t j = 0; j < num_.size(); ++j) v[j * k] = num_[j];
  reduce_mod_cyclotomic(v, new_order);
  return CycNum(new_order, std::move(v), den_);
}

CycNum CycNum::demote(std::uint32_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order == 0 || order_ % new_order != 0)
    throw InvalidInput("demote: target order does not divide the current order");
  if (is_rational()) return CycNum(to_rational()).promote(new_order);
  // Solve sum_j b_j zeta_M^j = a over Q with the images of the subfield basis
  // as columns.
  const std::size_t rows = num_.size();
  const std::size_t cols = euler_phi(new_order);
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    CycNum img = root_of_unity(static_cast<std::int64_t>(j), new_order).promote(order_);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = img.coefficient(i);
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][cols] = coefficient(i);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t t = c; t <= cols; ++t) m[i][t] -= f * m[r][t];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0)
      throw InvalidInput("demote: element does not lie in Q(zeta_" + std::to_string(new_order) + ")");
  std::vector<Rational> b(cols);
  for (std::size_t i = 0; i < r; ++i) b[pivots[i]] = m[i][cols];
  return from_coefficients(new_order, b);
}

CycNum CycNum::conjugate() const {
  if (order_ <= 2) return *this;
  std::vector<Integer> v(order_);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    v[(order_ - j) % order_] = num_[j];
  }
  reduce_mod_cyclotomic(v, order_);
  return CycNum(order_, std::move(v), den_);
}

CycNum CycNum::real_part() const {
  CycNum s = *this + conjugate();
  s.den_ *= 2;
  s.normalize();
  return s;
}

CycNum CycNum::times_root(std::int64_t exponent) const {
  const std::int64_t n = order_;
  const std::size_t e = static_cast<std::size_t>(((exponent % n) + n) % n);
  if (e == 0) return *this;
  std::vector<Integer> v(num_.size() + e);
  for (std::size_t j = 0; j < num_.size(); ++j) v[j + e] = num_[j];
  reduce_mod_cyclotomic(v, order_);
  return CycNum(order_, std::move(v), den_);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycNum(Rational(1) / to_rational());
  // Extended Euclid in Q[x]: find t with A(x) t(x) = 1 mod Phi_N, where this = A/den.
  const auto& phi = cyclotomic_polynomial(order_);
  QPoly old_r(phi.begin(), phi.end());
  for (auto& c : old_r) c = Rational(c);
  QPoly r(num_.begin(), num_.end());
  trim(r);
  QPoly old_t;          // 0
  QPoly t{Rational(1)}; // 1
  auto sub_mul = [](QPoly a, const QPoly& q, const QPoly& b) {
    // a - q*b
    if (a.size() < q.size() + b.size()) a.resize(q.size() + b.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    trim(a);
    return a;
  };
  while (!r.empty()) {
    // Polynomial division old_r = q r + rem.
    QPoly rem = old_r;
    QPoly q;
    const Rational lead_inv = 1 / r.back();
    while (rem.size() >= r.size() && !rem.empty()) {
      const std::size_t shift = rem.size() - r.size();
      const Rational f = rem.back() * lead_inv;
      if (q.size() < shift + 1) q.resize(shift + 1);
      q[shift] = f;
      for (std::size_t j = 0; j < r.size(); ++j) rem[shift + j] -= f * r[j];
      rem.pop_back();
      trim(rem);
    }
    QPoly new_t = sub_mul(old_t, q, t);
    old_r = std::move(r);
    r = std::move(rem);
    old_t = std::move(t);
    t = std::move(new_t);
  }
  if (old_r.size() != 1) throw InvariantViolation("cyclotomic inverse: non-unit gcd");
  const Rational scale = Rational(den_) / old_r[0];
  for (auto& c : old_t) c *= scale;
  return from_coefficients(order_, old_t);
}

std::complex<double> CycNum::eval_complex(int precision) const {
  const mpfr_prec_t prec = std::max(precision, 24) + 16;
  Mpfr re(prec), im(prec), angle(prec), c(prec), s(prec), coef(prec), pi2(prec);
  mpfr_const_pi(pi2.get(), MPFR_RNDN);
  mpfr_mul_ui(pi2.get(), pi2.get(), 2, MPFR_RNDN);
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    mpfr_mul_ui(angle.get(), pi2.get(), static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), order_, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_set_z(coef.get(), num_[j].get_mpz_t(), MPFR_RNDN);
    mpfr_fma(re.get(), coef.get(), c.get(), re.get(), MPFR_RNDN);
    mpfr_fma(im.get(), coef.get(), s.get(), im.get(), MPFR_RNDN);
  }
  mpfr_set_z(coef.get(), den_.get_mpz_t(), MPFR_RNDN);
  mpfr_div(re.get(), re.get(), coef.get(), MPFR_RNDN);
  mpfr_div(im.get(), im.get(), coef.get(), MPFR_RNDN);
  return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  const std::uint32_t l = lcm_order(order_, other.order_);
  if (l != order_) *this = promote(l);
  const CycNum* b = &other;
  CycNum promoted;
  if (other.order_ != l) {
    promoted = other.promote(l);
    b = &promoted;
  }
  if (den_ == b->den_) {
    for (std::size_t j = 0; j < num_.size(); ++j) num_[j] += b->num_[j];
  } else {
    for (std::size_t j = 0; j < num_.size(); ++j) {
      num_[j] *= b->den_;
      mpz_addmul(num_[j].get_mpz_t(), b->num_[j].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= b->den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum& CycNum::operator*=(const CycNum& other) {
  const std::uint32_t l = lcm_order(order_, other.order_);
  if (l != order_) *this = promote(l);
  const CycNum* b = &other;
  CycNum promoted;
  if (other.order_ != l) {
    promoted = other.promote(l);
    b = &promoted;
  }
  if (b->is_rational()) {
    for (auto& c : num_) c *= b->num_[0];
    den_ *= b->den_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    const Integer c0 = num_[0];
    num_ = b->num_;
    for (auto& c : num_) c *= c0;
    den_ *= b->den_;
    normalize();
    return *this;
  }
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b->num_.size(); ++j)
    if (b->num_[j] != 0) nz.push_back(j);
  std::vector<Integer> prod(2 * num_.size() - 1);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (std::size_t j : nz)
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), b->num_[j].get_mpz_t());
  }
  reduce_mod_cyclotomic(prod, l);
  num_ = std::move(prod);
  den_ *= b->den_;
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) { return *this *= other.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  const std::uint32_t l = lcm_order(a.order_, b.order_);
  return a.promote(l) == b.promote(l);
}

}  // namespace weiljac

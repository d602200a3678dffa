#include "weiljac/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <span>

#include "weiljac/dims.hpp"
#include "weiljac/errors.hpp"

namespace weiljac {
namespace {

const Rational& min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return *b;
  if (!b) return *a;
  return *a < *b ? *a : *b;
}

std::optional<Rational> min_truncation(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a && !b) return std::nullopt;
  return min_opt(a, b);
}

std::vector<std::int64_t> negated(std::vector<std::int64_t> r) {
  for (auto& x : r) x = -x;
  return r;
}

std::string key_string(const Rational& l, const std::vector<std::int64_t>& r) {
  std::string s = "q^" + to_string(l) + " zeta^(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

}  // namespace

std::optional<Rational> product_truncation(const std::optional<Rational>& ta, const std::optional<Rational>& va,
                                           const std::optional<Rational>& tb, const std::optional<Rational>& vb) {
  std::optional<Rational> c1, c2;
  if (ta && vb) c1 = *ta + *vb;
  if (tb && va) c2 = *tb + *va;
  return min_truncation(c1, c2);
}

// ---------------------------------------------------------------- QSeries

QSeries QSeries::monomial(const Rational& coeff, const Rational& exponent) {
  QSeries s;
  s.add_term(exponent, coeff);
  return s;
}

Integer QSeries::exponent_denominator() const {
  Integer d = 1;
  for (const auto& [e, c] : coeffs_) d = lcm(d, e.get_den());
  if (truncation_) d = lcm(d, truncation_->get_den());
  return d;
}

Rational QSeries::coefficient(const Rational& exponent) const {
  if (truncation_ && exponent > *truncation_) throw InvalidInput("coefficient beyond truncation");
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QSeries::add_term(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0 || (truncation_ && exponent > *truncation_)) return;
  auto [it, inserted] = coeffs_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::optional<Rational> QSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

QSeries QSeries::truncated(const Rational& t) const {
  QSeries out(min_truncation(truncation_, t));
  for (const auto& [e, c] : coeffs_) out.add_term(e, c);
  return out;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries acc = monomial(1, 0);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  truncation_ = min_truncation(truncation_, o.truncation_);
  if (truncation_) std::erase_if(coeffs_, [&](const auto& kv) { return kv.first > *truncation_; });
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += Rational(-1) * o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries out(product_truncation(a.truncation_, a.valuation(), b.truncation_, b.valuation()));
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out(a.truncation_);
  for (const auto& [e, v] : a.coeffs_) out.add_term(e, c * v);
  return out;
}

// ---------------------------------------------------- FourierJacobiSeries

FourierJacobiSeries::FourierJacobiSeries(std::size_t nvars, std::int64_t zeta_den, std::optional<Rational> truncation)
    : nvars_(nvars), zeta_den_(zeta_den), truncation_(std::move(truncation)) {
  if (zeta_den < 1) throw InvalidInput("zeta denominator must be positive");
}

FourierJacobiSeries FourierJacobiSeries::from_q(const QSeries& s, std::size_t nvars) {
  FourierJacobiSeries out(nvars, 1, s.truncation());
  for (const auto& [e, c] : s.coefficients()) out.add_term(e, std::vector<std::int64_t>(nvars, 0), c);
  return out;
}

Integer FourierJacobiSeries::exponent_denominator() const {
  Integer d = 1;
  for (const auto& [k, c] : coeffs_) d = lcm(d, k.first.get_den());
  return d;
}

Rational FourierJacobiSeries::coefficient(const Rational& l, const std::vector<std::int64_t>& r) const {
  if (truncation_ && l > *truncation_) throw InvalidInput("coefficient beyond truncation");
  auto it = coeffs_.find(Key{l, r});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void FourierJacobiSeries::add_term(const Rational& l, std::vector<std::int64_t> r, const Rational& coeff) {
  if (r.size() != nvars_) throw InvalidInput("zeta exponent has wrong length");
  if (coeff == 0 || (truncation_ && l > *truncation_)) return;
  auto [it, inserted] = coeffs_.emplace(Key{l, std::move(r)}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::optional<Rational> FourierJacobiSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first.first;
}

FourierJacobiSeries FourierJacobiSeries::substitute(const std::vector<std::vector<std::int64_t>>& map) const {
  FourierJacobiSeries out(map.size(), zeta_den_, truncation_);
  for (const auto& [k, c] : coeffs_) {
    std::vector<std::int64_t> r(map.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i].size() != nvars_) throw InvalidInput("substitution has wrong width");
      for (std::size_t j = 0; j < nvars_; ++j) r[i] += map[i][j] * k.second[j];
    }
    out.add_term(k.first, std::move(r), c);
  }
  return out;
}

FourierJacobiSeries FourierJacobiSeries::with_zeta_den(std::int64_t den) const {
  FourierJacobiSeries out(nvars_, den, truncation_);
  for (const auto& [k, c] : coeffs_) {
    std::vector<std::int64_t> r = k.second;
    for (auto& x : r) {
      if (den % zeta_den_ == 0)
        x *= den / zeta_den_;
      else if (zeta_den_ % den == 0 && x % (zeta_den_ / den) == 0)
        x /= zeta_den_ / den;
      else
        throw InvalidInput("zeta exponents not representable with the requested denominator");
    }
    out.add_term(k.first, std::move(r), c);
  }
  return out;
}

FourierJacobiSeries FourierJacobiSeries::normalized() const {
  std::int64_t g = zeta_den_;
  for (const auto& [k, c] : coeffs_)
    for (std::int64_t x : k.second) g = std::gcd(g, x);
  return g == 1 ? *this : with_zeta_den(zeta_den_ / g);
}

FourierJacobiSeries FourierJacobiSeries::truncated(const Rational& t) const {
  FourierJacobiSeries out(nvars_, zeta_den_, min_truncation(truncation_, t));
  for (const auto& [k, c] : coeffs_) out.add_term(k.first, k.second, c);
  return out;
}

FourierJacobiSeries FourierJacobiSeries::specialize_to_one(std::size_t var) const {
  if (var >= nvars_) throw InvalidInput("variable index out of range");
  FourierJacobiSeries out(nvars_ - 1, zeta_den_, truncation_);
  for (const auto& [k, c] : coeffs_) {
    std::vector<std::int64_t> r = k.second;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(var));
    out.add_term(k.first, std::move(r), c);
  }
  return out;
}

FourierJacobiSeries& FourierJacobiSeries::operator+=(const FourierJacobiSeries& o) {
  if (nvars_ != o.nvars_) throw InvalidInput("series in different numbers of variables");
  const std::int64_t den = std::lcm(zeta_den_, o.zeta_den_);
  if (den != zeta_den_) *this = with_zeta_den(den);
  const FourierJacobiSeries other = o.zeta_den_ == den ? o : o.with_zeta_den(den);
  truncation_ = min_truncation(truncation_, other.truncation_);
  if (truncation_) std::erase_if(coeffs_, [&](const auto& kv) { return kv.first.first > *truncation_; });
  for (const auto& [k, c] : other.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

FourierJacobiSeries& FourierJacobiSeries::operator-=(const FourierJacobiSeries& o) {
  return *this += Rational(-1) * o;
}

FourierJacobiSeries operator*(const FourierJacobiSeries& a, const FourierJacobiSeries& b) {
  if (a.nvars_ != b.nvars_) throw InvalidInput("series in different numbers of variables");
  const std::int64_t den = std::lcm(a.zeta_den_, b.zeta_den_);
  const FourierJacobiSeries x = a.zeta_den_ == den ? a : a.with_zeta_den(den);
  const FourierJacobiSeries y = b.zeta_den_ == den ? b : b.with_zeta_den(den);
  FourierJacobiSeries out(a.nvars_, den, product_truncation(x.truncation_, x.valuation(), y.truncation_, y.valuation()));
  std::vector<std::int64_t> r(a.nvars_);
  for (const auto& [ka, ca] : x.coeffs_)
    for (const auto& [kb, cb] : y.coeffs_) {
      const Rational l = ka.first + kb.first;
      if (out.truncation_ && l > *out.truncation_) continue;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = ka.second[i] + kb.second[i];
      out.add_term(l, r, ca * cb);
    }
  return out;
}

FourierJacobiSeries operator*(const Rational& c, const FourierJacobiSeries& a) {
  FourierJacobiSeries out(a.nvars_, a.zeta_den_, a.truncation_);
  for (const auto& [k, v] : a.coeffs_) out.add_term(k.first, k.second, c * v);
  return out;
}

// --------------------------------------------------------- lattice points

namespace {

bool in_coset(const HalfIntegralMatrix& f, const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& x) {
  const auto& inv = f.two_f_inverse();
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < r.size(); ++j) s += inv[i][j] * Rational(static_cast<long>(r[j] - x[j]));
    if (!is_integer(s)) return false;
  }
  return true;
}

bool accept(const HalfIntegralMatrix& f, const Rational& bound, const std::vector<std::int64_t>& r,
            const std::vector<std::int64_t>* coset) {
  if (f.quarter_inv_quadratic(std::span<const std::int64_t>(r)) > bound) return false;
  return coset == nullptr || in_coset(f, r, *coset);
}

}  // namespace

std::vector<std::vector<std::int64_t>> lattice_points(const HalfIntegralMatrix& f, const Rational& bound,
                                                      const std::vector<std::int64_t>* coset) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::int64_t>> out;
  if (bound < 0) return out;
  // q(r) = r^t G r with G = (2F)^{-1}/2, rewritten as sum_i Q_ii (r_i + sum_{j>i} Q_ij r_j)^2.
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(f.two_f_inverse()[i][j] / 2).get_d();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  const double b = bound.get_d();
  const double slack = 1e-9 * (1.0 + b);
  std::vector<std::int64_t> r(n, 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t i1, double budget) {
    const std::size_t i = i1 - 1;
    double center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<double>(r[j]);
    const double radius = std::sqrt(std::max(0.0, budget + slack) / q[i][i]);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - radius - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(center + radius + 1e-9));
    for (std::int64_t v = lo; v <= hi; ++v) {
      r[i] = v;
      const double t = static_cast<double>(v) - center;
      const double rest = budget - q[i][i] * t * t;
      if (rest < -slack) continue;
      if (i == 0) {
        if (accept(f, bound, r, coset)) out.push_back(r);
      } else {
        rec(i, rest);
      }
    }
    r[i] = 0;
  };
  rec(n, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> lattice_points_box(const HalfIntegralMatrix& f, const Rational& bound,
                                                          const std::vector<std::int64_t>* coset) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::int64_t>> out;
  if (bound < 0) return out;
  // r^t (2F)^{-1} r <= 2B forces r_i^2 <= 2B (2F)_ii.
  std::vector<std::int64_t> box(n);
  for (std::size_t i = 0; i < n; ++i)
    box[i] = static_cast<std::int64_t>(std::floor(std::sqrt(2.0 * bound.get_d() * static_cast<double>(f.two_f(i, i))))) + 1;
  std::vector<std::int64_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = -box[i];
  while (true) {
    if (accept(f, bound, r, coset)) out.push_back(r);
    std::size_t i = 0;
    while (i < n && r[i] == box[i]) {
      r[i] = -box[i];
      ++i;
    }
    if (i == n) break;
    ++r[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

FourierJacobiSeries theta_F_x(const HalfIntegralMatrix& f, const std::vector<std::int64_t>& x, const Rational& truncation) {
  if (x.size() != f.size()) throw InvalidInput("coset vector has wrong length");
  FourierJacobiSeries out(f.size(), 1, truncation);
  for (auto& r : lattice_points(f, truncation, &x)) {
    const Rational l = f.quarter_inv_quadratic(std::span<const std::int64_t>(r));
    out.add_term(l, std::move(r), 1);
  }
  return out;
}

// ------------------------------------------------------- theta, eta, Psi

FourierJacobiSeries jacobi_theta(const Rational& truncation, ThetaForm form) {
  if (truncation < make_rational(1, 8)) throw InvalidInput("theta truncation must be at least 1/8");
  if (form == ThetaForm::sum) {
    FourierJacobiSeries out(1, 2, truncation);
    for (std::int64_t n = -1; make_rational(n * n, 8) <= truncation; --n) out.add_term(make_rational(n * n, 8), {n}, kronecker(-4, n));
    for (std::int64_t n = 1; make_rational(n * n, 8) <= truncation; ++n) out.add_term(make_rational(n * n, 8), {n}, kronecker(-4, n));
    return out;
  }
  const Rational inner = truncation - make_rational(1, 8);
  FourierJacobiSeries prod(1, 2, inner);
  prod.add_term(0, {0}, 1);
  for (std::int64_t n = 1; Rational(n) <= inner; ++n) {
    for (std::int64_t r : {0, 2, -2}) {
      FourierJacobiSeries factor(1, 2, std::nullopt);
      factor.add_term(0, {0}, 1);
      factor.add_term(n, {r}, -1);
      prod = prod * factor;
    }
  }
  FourierJacobiSeries pre(1, 2, std::nullopt);
  pre.add_term(make_rational(1, 8), {1}, 1);
  pre.add_term(make_rational(1, 8), {-1}, -1);
  return pre * prod;
}

QSeries euler_product(const Rational& truncation) {
  QSeries prod(truncation);
  prod.add_term(0, 1);
  for (std::int64_t n = 1; Rational(n) <= truncation; ++n) {
    QSeries factor = QSeries::monomial(1, 0);
    factor.add_term(n, -1);
    prod = prod * factor;
  }
  return prod;
}

QSeries dedekind_eta(const Rational& truncation) {
  const Rational shift = make_rational(1, 24);
  if (truncation < shift) throw InvalidInput("eta truncation must be at least 1/24");
  return QSeries::monomial(1, shift) * euler_product(truncation - shift);
}

FourierJacobiSeries psi9(const Rational& truncation) {
  if (truncation < 1) throw InvalidInput("Psi_9 truncation must be at least 1");
  const FourierJacobiSeries theta = jacobi_theta(truncation - make_rational(7, 8));
  const FourierJacobiSeries t1 = theta.substitute({{1}, {0}});
  const FourierJacobiSeries t12 = theta.substitute({{1}, {1}});
  const FourierJacobiSeries t2 = theta.substitute({{0}, {1}});
  const QSeries eta15 = dedekind_eta(truncation - make_rational(23, 24)).pow(15);
  FourierJacobiSeries out = t1 * t12 * t2 * FourierJacobiSeries::from_q(eta15, 2);
  return out.normalized();
}

namespace {

std::vector<Rational> bernoulli_numbers(std::size_t m) {
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    Rational s = 0;
    Integer binom = 1;  // C(k+1, j)
    for (std::size_t j = 0; j < k; ++j) {
      s += Rational(binom) * b[j];
      binom = binom * static_cast<unsigned long>(k + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    b[k] = -s / static_cast<long>(k + 1);
  }
  return b;
}

Rational bernoulli_polynomial(std::size_t m, const Rational& x, const std::vector<Rational>& b) {
  Rational s = 0;
  Integer binom = 1;  // C(m, j)
  for (std::size_t j = 0; j <= m; ++j) {
    Rational p = 1;
    for (std::size_t t = 0; t < m - j; ++t) p *= x;
    s += Rational(binom) * b[j] * p;
    binom = binom * static_cast<unsigned long>(m - j) / static_cast<unsigned long>(j + 1);
  }
  return s;
}

Rational ipow(std::int64_t base, std::int64_t e) {
  Integer r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= static_cast<long>(base);
  return Rational(r);
}

}  // namespace

Rational a_k_coefficient(std::int64_t k, std::int64_t n) {
  if (k < 2) throw InvalidInput("a_k needs k >= 2");
  if (n < 0) return 0;
  if (n == 0) {
    // L(1-m, chi) = -B_{m,chi}/m with B_{m,chi} = 3^{m-1} sum_{a=1}^{3} chi(a) B_m(a/3), m = k-1.
    const auto m = static_cast<std::size_t>(k - 1);
    const auto b = bernoulli_numbers(m);
    Rational bchi = 0;
    for (std::int64_t a = 1; a <= 3; ++a) bchi += Rational(kronecker(a, 3)) * bernoulli_polynomial(m, make_rational(a, 3), b);
    bchi *= ipow(3, static_cast<std::int64_t>(m) - 1);
    const Rational l_value = -bchi / static_cast<long>(m);
    return l_value / 2;
  }
  Rational s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    s += ipow(d, k - 2) * Rational(kronecker(d, 3) - kronecker(n / d, 3));
  }
  return s;
}

FourierJacobiSeries psi_k(std::int64_t k, std::int64_t truncation, PsiWindow window) {
  if (k < 2 || k % 2 != 0) throw InvalidInput("Psi_k is defined here for even k >= 2");
  if (truncation < 0) throw InvalidInput("negative truncation");
  FourierJacobiSeries out(2, 1, Rational(truncation));
  const std::int64_t scale = window == PsiWindow::support ? 3 : 1;
  for (std::int64_t n = 0; n <= truncation; ++n) {
    const auto box = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(scale * n))) + 1;
    for (std::int64_t a = -box; a <= box; ++a)
      for (std::int64_t b = -box; b <= box; ++b) {
        const std::int64_t big_n = a * a - a * b + b * b;
        if (scale * n - big_n < 0) continue;
        const std::int64_t residue = big_n % 3;
        if (residue == 2) throw InvariantViolation("a^2 - ab + b^2 = 2 mod 3");
        const Rational nu = residue == 0 ? Rational(1) : make_rational(1, 2);
        out.add_term(n, {a, b}, nu * a_k_coefficient(k, 3 * n - big_n));
      }
  }
  return out;
}

// ------------------------------------------------ theta decomposition

namespace {

std::vector<std::int64_t> to_int64_vector(const std::vector<Integer>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

Rational coset_minimum(const HalfIntegralMatrix& f, const std::vector<std::int64_t>& rep) {
  for (Rational bound = 1;; bound *= 2) {
    auto pts = lattice_points(f, bound, &rep);
    if (pts.empty()) continue;
    Rational best = f.quarter_inv_quadratic(std::span<const std::int64_t>(pts.front()));
    for (const auto& r : pts) best = std::min(best, f.quarter_inv_quadratic(std::span<const std::int64_t>(r)));
    return best;
  }
}

}  // namespace

std::map<Element, QSeries> theta_decomposition(const FourierJacobiSeries& phi, const HalfIntegralMatrix& f) {
  if (phi.nvars() != f.size()) throw InvalidInput("series and index have different sizes");
  if (phi.zeta_den() != 1) throw InvalidInput("theta decomposition needs integral zeta exponents");
  if (!phi.truncation()) throw InvalidInput("theta decomposition needs a truncated series");
  const Rational trunc = *phi.truncation();
  const DiscriminantForm d(f);
  const FiniteQuadraticModule& m = d.module();

  std::map<Element, QSeries> h;
  std::vector<std::vector<std::int64_t>> reps;
  for (std::size_t i = 0; i < m.order(); ++i) {
    const Element x = m.element(i);
    reps.push_back(to_int64_vector(d.representative(x)));
    h.emplace(x, QSeries(trunc - coset_minimum(f, reps.back())));
  }

  for (const auto& [key, c] : phi.coefficients()) {
    const auto& [l, r] = key;
    const Element x = d.element_of(std::span<const std::int64_t>(r));
    const Rational e = l - f.quarter_inv_quadratic(std::span<const std::int64_t>(r));
    QSeries& hx = h.at(x);
    const Rational prev = hx.coefficients().count(e) ? hx.coefficients().at(e) : Rational(0);
    if (prev != 0 && prev != c)
      throw InvalidInput("not a Jacobi-form expansion for this index: " + key_string(l, r) + " disagrees with another representative");
    if (prev == 0) hx.add_term(e, c);
  }

  // Every representative inside the truncation must carry the same coefficient.
  for (std::size_t i = 0; i < m.order(); ++i) {
    const QSeries& hx = h.at(m.element(i));
    for (const auto& [e, c] : hx.coefficients()) {
      for (const auto& r : lattice_points(f, trunc - e, &reps[i])) {
        const Rational l = e + f.quarter_inv_quadratic(std::span<const std::int64_t>(r));
        if (phi.coefficient(l, r) != c)
          throw InvalidInput("not a Jacobi-form expansion for this index: coefficient at " + key_string(l, r) +
                             " is " + to_string(phi.coefficient(l, r)) + ", expected " + to_string(c));
      }
    }
  }
  return h;
}

JacobiReport check_jacobi_constraints(const FourierJacobiSeries& phi, std::int64_t k, const HalfIntegralMatrix& f) {
  JacobiReport rep;
  if (phi.nvars() != f.size() || phi.zeta_den() != 1) {
    rep.support = false;
    rep.witness = "series variables or zeta exponents do not match an integral index of this size";
    return rep;
  }
  for (const auto& [key, c] : phi.coefficients()) {
    const auto& [l, r] = key;
    if (l - f.quarter_inv_quadratic(std::span<const std::int64_t>(r)) < 0) {
      rep.support = false;
      rep.witness = "support violated at " + key_string(l, r);
      return rep;
    }
  }
  try {
    (void)theta_decomposition(phi, f);
  } catch (const InvalidInput& e) {
    rep.periodicity = false;
    rep.witness = e.what();
    return rep;
  }
  const Rational sign = k % 2 == 0 ? 1 : -1;
  for (const auto& [key, c] : phi.coefficients()) {
    const auto& [l, r] = key;
    const Rational mirrored = phi.coefficient(l, negated(r));
    if (mirrored != sign * c) {
      rep.parity = false;
      rep.witness = "c(l,-r) != (-1)^k c(l,r) at " + key_string(l, r);
      return rep;
    }
  }
  return rep;
}

}  // namespace weiljac

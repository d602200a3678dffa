#include "weiljac/dims.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "weiljac/errors.hpp"
#include "weiljac/weil.hpp"

namespace weiljac {
namespace {

Rational real_rational(const CycNum& z, const char* what) {
  const CycNum re = z.real_part();
  if (!re.is_rational()) throw InvariantViolation(std::string(what) + " is not rational");
  return re.to_rational();
}

bool squarefree(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

DimResult theorem1_dim(const HalfIntegralMatrix& f, std::int64_t k, std::size_t bound) {
  const auto n = static_cast<std::int64_t>(f.size());
  if (2 * k < n + 4) throw InvalidInput("weight below n/2 + 2");
  const WeilRep w(discriminant_module(f), bound);
  const FiniteQuadraticModule& m = w.module();
  const std::uint32_t l = w.field_order();
  const auto li = static_cast<std::int64_t>(l);

  DimResult res;
  res.k = k;
  const ZEigenspace x = z_eigenspace(w, n - 2 * k);
  res.dim_x = x.dim();

  // Traces of rho*(S) and rho*(ST) = conj(rho(S) rho(T)) on X as group ring sums.
  std::vector<Integer> tr_s(l, 0), tr_st(l, 0);
  if (x.epsilon != 0) {
    auto neg_exp = [&](std::int64_t e) { return static_cast<std::size_t>((li - e % li) % li); };
    for (std::size_t i = 0; i < w.dim(); ++i) {
      const std::size_t ni = m.neg_index(i);
      tr_s[neg_exp(w.s_exponent(i, i))] += 1;
      tr_s[neg_exp(w.s_exponent(i, ni))] += x.epsilon;
      tr_st[neg_exp(w.s_exponent(i, i) + w.t_exponent(i))] += 1;
      tr_st[neg_exp(w.s_exponent(i, ni) + w.t_exponent(ni))] += x.epsilon;
    }
  }
  const CycNum conj_c = w.s_scalar().conjugate();
  const CycNum trace_s = conj_c * CycNum::from_integers(l, tr_s, 2);
  const CycNum trace_st = conj_c * CycNum::from_integers(l, tr_st, 2);

  const auto dx = static_cast<long>(res.dim_x);
  res.main_term = make_rational(2 * k - n - 2, 24) * Rational(dx);
  res.s_term = real_rational(CycNum::root_of_unity(2 * k - n, 8) * trace_s, "S-term") / 4;
  const CycNum st = CycNum::sqrt3() * CycNum(make_rational(2, 9)) * CycNum::root_of_unity(2 * k - n + 1, 12) * trace_st;
  res.st_term = real_rational(st, "ST-term");

  res.lambda_term = 0;
  for (std::size_t i : x.representatives) {
    const std::int64_t q = m.q_numerator(i);
    Rational lambda = make_rational(q == 0 ? 0 : li - q, li);
    res.lambda_term -= lambda - make_rational(1, 2);
    res.lambdas.push_back(std::move(lambda));
  }

  const Rational total = res.main_term + res.s_term + res.st_term + res.lambda_term;
  if (!is_integer(total) || total < 0)
    throw InvariantViolation("dimension formula produced " + to_string(total) + " at k = " + std::to_string(k));
  res.value = total.get_num();
  return res;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (a/n), n odd positive.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t class_number(std::int64_t p) {
  if (p <= 3 || p % 4 != 3 || !is_prime(p)) throw InvalidInput("class number needs a prime p = 3 mod 4, p > 3");
  static std::shared_mutex mutex;
  static std::map<std::int64_t, std::int64_t> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  std::int64_t h = 0;
  for (std::int64_t a = 1; 3 * a * a <= p; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + p;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  std::unique_lock lock(mutex);
  cache[p] = h;
  return h;
}

BinaryPrimeTerms binary_prime_terms(std::int64_t p, std::int64_t k) {
  if (p % 4 != 3 || !is_prime(p)) throw InvalidInput("binary prime formula needs a prime p = 3 mod 4");
  if (k < 3) throw InvalidInput("binary prime formula needs k >= 3");
  const std::int64_t sign = k % 2 == 0 ? 1 : -1;
  BinaryPrimeTerms t;
  t.t1 = make_rational(k - 2, 12) * make_rational(p + sign, 2);
  t.t2 = make_rational(-kronecker(-4, k - 2) * kronecker(-2, p), 4);
  if (p == 3) {
    static const Rational table[6] = {make_rational(0), make_rational(0), make_rational(-1, 3),
                                      make_rational(1, 3), make_rational(1, 3), make_rational(-1, 3)};
    t.t3 = table[k % 6];
    t.t4 = make_rational(-1, 6);
  } else {
    t.t3 = make_rational(-kronecker(k - 2, 3), 3) * make_rational(kronecker(p, 3) + sign, 2);
    t.t4 = make_rational(-class_number(p), 2);
  }
  t.t5 = make_rational(1 + sign, 4);
  return t;
}

Integer binary_prime_dim(std::int64_t p, std::int64_t k) {
  const Rational total = binary_prime_terms(p, k).total();
  if (!is_integer(total) || total < 0)
    throw InvariantViolation("closed formula produced " + to_string(total));
  return total.get_num();
}

std::size_t singular_weight_dim(const HalfIntegralMatrix& f, std::size_t bound) {
  if (f.size() % 2 != 0) throw HypothesisError("singular weight n/2 needs even n");
  return invariants(discriminant_module(f), bound).dim();
}

std::int64_t default_critical_m(const HalfIntegralMatrix& f) {
  const std::int64_t lv = f.level();
  return lv / std::gcd(lv, std::int64_t{4});
}

std::size_t critical_weight_dim(const HalfIntegralMatrix& f, std::optional<std::int64_t> m, std::size_t bound) {
  if (f.size() % 2 == 0) throw HypothesisError("critical weight (n+1)/2 needs odd n");
  const std::int64_t mm = m.value_or(default_critical_m(f));
  if (mm < 1 || (4 * mm) % f.level() != 0) throw InvalidInput("m must satisfy level(F) | 4m");
  std::size_t total = 0;
  for (std::int64_t l = 1; l <= mm; ++l)
    if (mm % l == 0 && squarefree(mm / l)) total += iota_fixed_invariants(l, f, bound);
  return total;
}

Integer series_coefficient(const std::vector<Integer>& poly, std::int64_t k) {
  // 1/((1-x^4)(1-x^6)) = sum of x^{4a+6b}.
  Integer c = 0;
  for (std::int64_t j = 0; j <= k && j < static_cast<std::int64_t>(poly.size()); ++j) {
    const std::int64_t r = k - j;
    if (r % 2 != 0) continue;
    for (std::int64_t b = 0; 6 * b <= r; ++b)
      if ((r - 6 * b) % 4 == 0) c += poly[static_cast<std::size_t>(j)];
  }
  return c;
}

PoincareResult hilbert_poincare(const HalfIntegralMatrix& f, std::int64_t k_max) {
  const auto n = static_cast<std::int64_t>(f.size());
  if (2 * k_max < n + 28) throw InvalidInput("k_max must be at least n/2 + 14");
  PoincareResult res;
  res.k_max = k_max;
  res.dims.assign(static_cast<std::size_t>(k_max + 1), 0);
  const bool even = n % 2 == 0;
  const std::int64_t low = even ? n / 2 : (n + 1) / 2;
  res.unknown_weight = low + 1;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    Integer d = 0;
    if (k == low)
      d = static_cast<unsigned long>(even ? singular_weight_dim(f) : critical_weight_dim(f));
    else if (2 * k >= n + 4)
      d = theorem1_dim(f, k).value;
    res.dims[static_cast<std::size_t>(k)] = d;
  }

  res.recurrence_ok = true;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    if (2 * k <= n + 24 || k < 10) continue;
    const auto at = [&](std::int64_t j) { return res.dims[static_cast<std::size_t>(j)]; };
    if (at(k) != at(k - 4) + at(k - 6) - at(k - 10)) res.recurrence_ok = false;
  }

  res.ptilde.assign(static_cast<std::size_t>(k_max + 1), 0);
  for (std::int64_t j = 0; j <= k_max; ++j) {
    const auto at = [&](std::int64_t i) { return i < 0 ? Integer(0) : res.dims[static_cast<std::size_t>(i)]; };
    res.ptilde[static_cast<std::size_t>(j)] = at(j) - at(j - 4) - at(j - 6) + at(j - 10);
  }
  res.degree_ok = true;
  for (std::int64_t j = 13; j <= k_max; ++j)
    if (res.ptilde[static_cast<std::size_t>(j)] != 0) res.degree_ok = false;
  res.ptilde_at_one = 0;
  for (std::int64_t j = 0; j <= std::min<std::int64_t>(k_max, 12); ++j) res.ptilde_at_one += res.ptilde[static_cast<std::size_t>(j)];
  res.rank_identity = res.ptilde_at_one == f.det_two_f();

  // ptilde + c x^w (1 - x^4)(1 - x^6) must stay nonnegative of degree <= 12.
  const std::int64_t w = res.unknown_weight;
  const auto coeff = [&](std::int64_t j) { return j <= k_max ? res.ptilde[static_cast<std::size_t>(j)] : Integer(0); };
  Integer upper = std::min(coeff(w + 4), coeff(w + 6));
  if (w + 10 > 12 || upper < 0) upper = 0;
  res.unknown_upper_bound = upper;
  if (upper == 0) res.inferred_unknown = Integer(0);
  return res;
}

}  // namespace weiljac

#include "weiljac/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "weiljac/dims.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/qseries.hpp"
#include "weiljac/weil.hpp"

namespace weiljac::checks {
namespace {

using Lines = std::vector<CheckLine>;

CheckLine summarize(const std::string& name, const Lines& lines) {
  CheckLine out{name, true, ""};
  std::size_t ok = 0;
  for (const auto& l : lines) {
    if (l.passed) {
      ++ok;
    } else if (out.passed) {
      out.passed = false;
      out.detail = "first failure: " + l.name + " (" + l.detail + "); ";
    }
  }
  out.detail += std::to_string(ok) + "/" + std::to_string(lines.size()) + " assertions hold";
  return out;
}

Lines guarded(const std::string& name, const std::function<Lines()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {CheckLine{name, false, std::string("exception: ") + e.what()}};
  }
}

std::string ptilde_string(const std::vector<Integer>& p) {
  std::ostringstream os;
  for (std::size_t j = 0; j <= 12 && j < p.size(); ++j) os << (j ? "," : "[") << p[j];
  os << "]";
  return os.str();
}

// ------------------------------------------------------ binary primes

Lines tabulated_dims() {
  Lines out;
  for (std::int64_t p : tabulated_primes()) {
    const auto f = HalfIntegralMatrix::binary_prime(p);
    std::vector<Integer> poly;
    for (std::int64_t c : tabulated_ptilde(p)) poly.emplace_back(static_cast<long>(c));
    std::size_t equal = 0;
    std::string mismatch;
    for (std::int64_t k = 3; k <= 24; ++k) {
      const Integer got = theorem1_dim(f, k).value;
      const Integer want = series_coefficient(poly, k);
      if (got == want)
        ++equal;
      else if (mismatch.empty())
        mismatch = ", k=" + std::to_string(k) + ": " + to_string(got) + " vs table " + to_string(want);
    }
    out.push_back({"table1 p=" + std::to_string(p), equal == 22, std::to_string(equal) + "/22 weights equal" + mismatch});
  }
  return out;
}

Lines closed_formula() {
  Lines out;
  for (std::int64_t p : tabulated_primes()) {
    const auto f = HalfIntegralMatrix::binary_prime(p);
    std::size_t equal = 0;
    std::string mismatch;
    for (std::int64_t k = 3; k <= 24; ++k) {
      const Integer a = theorem1_dim(f, k).value;
      const Integer b = binary_prime_dim(p, k);
      if (a == b)
        ++equal;
      else if (mismatch.empty())
        mismatch = ", k=" + std::to_string(k) + ": " + to_string(a) + " vs closed " + to_string(b);
    }
    out.push_back({"closed formula p=" + std::to_string(p), equal == 22, std::to_string(equal) + "/22 weights equal" + mismatch});
  }
  return out;
}

Lines singular_weight() {
  Lines out;
  for (std::int64_t p : tabulated_primes()) {
    const std::size_t d = singular_weight_dim(HalfIntegralMatrix::binary_prime(p));
    out.push_back({"singular weight p=" + std::to_string(p), d == 0, "dim J_1 = " + std::to_string(d)});
  }
  const std::size_t e8 = singular_weight_dim(HalfIntegralMatrix::e8());
  out.push_back({"singular weight E8", e8 == 1, "dim J_4 = " + std::to_string(e8)});
  return out;
}

Lines rank_identity() {
  Lines out;
  for (std::int64_t p : tabulated_primes()) {
    const auto r = hilbert_poincare(HalfIntegralMatrix::binary_prime(p));
    out.push_back({"rank identity p=" + std::to_string(p), r.rank_identity && r.ptilde_at_one == p,
                   "ptilde(1) = " + to_string(r.ptilde_at_one) + ", ptilde = " + ptilde_string(r.ptilde)});
  }
  return out;
}

// ------------------------------------------------------- module suites

Lines milgram() {
  Lines out;
  std::size_t i = 0;
  for (const auto& f : milgram_corpus()) {
    const auto r = milgram_report(f);
    std::ostringstream os;
    os << "n=" << f.size() << " det=" << f.det_two_f() << " G^2 identity " << (r.exact_identity ? "exact" : "FAILS")
       << ", Re(sigma e(n/8)) = " << r.real_part;
    out.push_back({"milgram F#" + std::to_string(++i), r.passed(), os.str()});
  }
  return out;
}

std::string module_label(const FiniteQuadraticModule& m) {
  std::ostringstream os;
  os << "|M|=" << m.order() << " orders";
  for (auto d : m.orders()) os << " " << d;
  return os.str();
}

Lines relations() {
  Lines out;
  for (const auto& m : relations_corpus()) {
    const auto r = check_relations(WeilRep(m));
    std::ostringstream os;
    os << "S^2=sigma^2 P " << r.s_squared << ", (ST)^3=S^2 " << r.metaplectic << ", unitary " << r.unitary
       << ", T order " << r.t_order;
    out.push_back({"relations " + module_label(m), r.all(), os.str()});
  }
  return out;
}

Lines tensor() {
  Lines out;
  for (const auto& [m, n] : tensor_pairs()) {
    const auto sum = direct_sum(m, n);
    const bool kron = kronecker_check(m, n);
    const std::size_t direct = invariants(sum).dim();
    const std::size_t via_primary = invariants_dim_via_primary(sum);
    bool ok = kron && direct == via_primary;
    std::string detail = "kronecker " + std::string(kron ? "equal" : "DIFFERS") + ", dim Inv direct " +
                         std::to_string(direct) + " via primary parts " + std::to_string(via_primary);
    if (std::gcd(m.order(), n.order()) == 1) {
      const std::size_t product = invariants(m).dim() * invariants(n).dim();
      ok = ok && product == direct;
      detail += ", product of factors " + std::to_string(product);
    }
    out.push_back({"tensor " + module_label(m) + " + " + module_label(n), ok, detail});
  }
  return out;
}

Lines nrs() {
  Lines out;
  for (const auto& [name, m] : nrs_corpus()) {
    const bool witt = is_witt_zero(m);
    const auto gens = nrs_generators(m);
    const auto inv = invariants(m);
    const WeilRep w(m);
    bool invariant = true;
    for (const auto& g : gens) invariant = invariant && is_invariant(w, g);
    const std::size_t span = span_rank(gens);
    auto both = gens;
    both.insert(both.end(), inv.vectors.begin(), inv.vectors.end());
    const bool contains_inv = span_rank(both) == span;
    const bool ok = witt && invariant && contains_inv && span == inv.dim();
    out.push_back({"nrs " + name, ok,
                   std::to_string(gens.size()) + " self-dual U, span rank " + std::to_string(span) + ", dim Inv " +
                       std::to_string(inv.dim()) + ", I_U invariant " + (invariant ? "yes" : "no") +
                       ", Inv in span " + (contains_inv ? "yes" : "no")});
  }
  return out;
}

// -------------------------------------------------------------- series

Lines qseries() {
  Lines out;
  const Rational t = make_rational(81, 8);
  const bool theta = jacobi_theta(t, ThetaForm::sum) == jacobi_theta(t, ThetaForm::product);
  out.push_back({"theta sum = product to q^(81/8)", theta, theta ? "all coefficients equal" : "coefficients differ"});

  const auto f = HalfIntegralMatrix::parse("2 1; 1 2");
  const auto psi = psi9(Rational(8));
  out.push_back({"Psi_9 integral q-exponents", psi.exponent_denominator() == 1,
                 "exponent denominator " + to_string(psi.exponent_denominator())});
  const auto h = theta_decomposition(psi, f);
  const DiscriminantForm d(f);
  bool h0 = false, antisym = true, nonzero = false;
  std::size_t support = 0;
  for (const auto& [x, hx] : h) {
    if (x == d.module().element(0)) h0 = hx.is_zero();
    if (!hx.is_zero()) ++support, nonzero = true;
    const auto& hy = h.at(d.module().neg(x));
    antisym = antisym && (hx + hy).is_zero();
  }
  out.push_back({"Psi_9 h_0 = 0", h0, "h_0 " + std::string(h0 ? "vanishes" : "nonzero") + " to q^8"});
  out.push_back({"Psi_9 h_e = -h_-e", antisym && nonzero && support == 2,
                 std::to_string(support) + " nonzero components, antisymmetric " + (antisym ? "yes" : "no")});

  for (std::int64_t k : {4, 6}) {
    const auto r = check_jacobi_constraints(psi_k(k, 8), k, f);
    out.push_back({"Psi_" + std::to_string(k) + " Jacobi constraints to q^8", r.passed(), r.passed() ? "support, periodicity, parity hold" : r.witness});
  }
  const Rational a4 = a_k_coefficient(4, 0), a6 = a_k_coefficient(6, 0);
  out.push_back({"a_4(0) = -1/9", a4 == make_rational(-1, 9), "a_4(0) = " + to_string(a4)});
  out.push_back({"a_6(0) = 1/3", a6 == make_rational(1, 3), "a_6(0) = " + to_string(a6)});
  return out;
}

Lines transform() {
  const auto theta = jacobi_theta(Rational(20));
  const TransformSpec spec{{{make_rational(1, 2)}}, make_rational(1, 2), Multiplier::theta};
  const auto r = numeric_transform_check(theta, "S", spec, Complex(0.0, 1.0), {Complex(0.3, 0.1)}, 1e-8);
  std::ostringstream os;
  os << "|lhs - eps^3 rhs| = " << r.error << " (tol 1e-8)";
  return {{"theta S-transformation", r.passed, os.str()}};
}

Lines critical() {
  Lines out;
  const auto f = HalfIntegralMatrix::scalar(1);
  for (std::int64_t m : {1, 2, 4}) {
    const std::size_t d = critical_weight_dim(f, m);
    out.push_back({"critical weight F=(1) m=" + std::to_string(m), d == 0, "dim J_1 = " + std::to_string(d)});
  }
  return out;
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "}";
}

Lines lambda_multiset() {
  Lines out;
  for (std::int64_t p : {3, 7, 11, 19, 23}) {
    const auto r = theorem1_dim(HalfIntegralMatrix::binary_prime(p), 4);
    std::vector<Rational> got;
    for (const auto& l : r.lambdas)
      if (l != 0) got.push_back(l);
    std::vector<Rational> residues, nonresidues;
    for (std::int64_t a = 1; a < p; ++a) (kronecker(a, p) == 1 ? residues : nonresidues).push_back(make_rational(a, p));
    std::sort(got.begin(), got.end());
    const bool eq = got == residues;
    out.push_back({"lambda p=" + std::to_string(p), eq,
                   "nonzero lambda " + rational_list(got) + " vs residues/p " + rational_list(residues) +
                       "; equals non-residues/p: " + (got == nonresidues ? "yes" : "no")});
  }
  return out;
}

const std::map<std::string, std::function<Lines()>>& suites() {
  static const std::map<std::string, std::function<Lines()>> s = {
      {"milgram", [] { return guarded("milgram", milgram); }},
      {"relations",
       [] {
         auto a = guarded("relations", relations);
         auto b = guarded("tensor", tensor);
         a.insert(a.end(), b.begin(), b.end());
         return a;
       }},
      {"nrs", [] { return guarded("nrs", nrs); }},
      {"table1",
       [] {
         Lines a;
         for (auto* fn : {tabulated_dims, closed_formula, singular_weight, rank_identity}) {
           auto b = guarded("table1", fn);
           a.insert(a.end(), b.begin(), b.end());
         }
         return a;
       }},
      {"qseries",
       [] {
         auto a = guarded("qseries", qseries);
         auto b = guarded("transform", transform);
         a.insert(a.end(), b.begin(), b.end());
         return a;
       }},
  };
  return s;
}

}  // namespace

bool CheckReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.passed; });
}

const std::vector<std::int64_t>& tabulated_primes() {
  static const std::vector<std::int64_t> primes = {3, 7, 11, 19, 23, 31, 43, 47};
  return primes;
}

const std::vector<std::int64_t>& tabulated_ptilde(std::int64_t p) {
  static const std::map<std::int64_t, std::vector<std::int64_t>> table = {
      {3, {0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0}},
      {7, {0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 0}},
      {11, {0, 0, 0, 0, 1, 1, 2, 1, 2, 2, 1, 1, 0}},
      {19, {0, 0, 0, 0, 2, 2, 3, 3, 3, 3, 2, 1, 0}},
      {23, {0, 0, 0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 1}},
      {31, {0, 0, 0, 0, 2, 2, 4, 5, 5, 5, 4, 3, 1}},
      {43, {0, 0, 0, 1, 4, 5, 7, 7, 7, 6, 4, 2, 0}},
      {47, {0, 0, 0, 0, 2, 3, 6, 7, 8, 8, 6, 5, 2}},
  };
  auto it = table.find(p);
  if (it == table.end()) throw InvalidInput("no table row for p = " + std::to_string(p));
  return it->second;
}

std::vector<HalfIntegralMatrix> milgram_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(1, 4), diag(1, 3), off(-2, 2);
  std::vector<HalfIntegralMatrix> out;
  while (out.size() < count) {
    const auto n = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] = 2 * diag(rng);
      for (std::size_t j = i + 1; j < n; ++j) a[i][j] = a[j][i] = off(rng);
    }
    try {
      HalfIntegralMatrix f(a);
      if (f.det_two_f() <= 150) out.push_back(std::move(f));
    } catch (const InvalidInput&) {
      // not positive definite
    }
  }
  return out;
}

std::vector<FiniteQuadraticModule> relations_corpus() {
  std::vector<FiniteQuadraticModule> out;
  for (std::int64_t l = 1; l <= 12; ++l) out.push_back(discriminant_module(HalfIntegralMatrix::scalar(l)));
  for (std::int64_t p : tabulated_primes()) out.push_back(discriminant_module(HalfIntegralMatrix::binary_prime(p)));
  for (std::int64_t n : {2, 3, 5, 7}) out.push_back(FiniteQuadraticModule::hyperbolic(n));
  out.push_back(FiniteQuadraticModule::cyclic(5, make_rational(1, 5)));
  out.push_back(FiniteQuadraticModule::cyclic(8, make_rational(1, 16)));
  out.push_back(FiniteQuadraticModule::cyclic(9, make_rational(2, 9)));
  out.push_back(discriminant_module(HalfIntegralMatrix::parse("2 1 0; 1 2 0; 0 0 2")));
  out.push_back(discriminant_module(HalfIntegralMatrix::parse("2 -1 0 0; -1 2 -1 -1; 0 -1 2 0; 0 -1 0 2")));
  return out;
}

std::vector<std::pair<std::string, FiniteQuadraticModule>> nrs_corpus() {
  using M = FiniteQuadraticModule;
  return {
      {"H(2)", M::hyperbolic(2)},
      {"H(3)", M::hyperbolic(3)},
      {"H(2)+H(2)", direct_sum(M::hyperbolic(2), M::hyperbolic(2))},
      {"H(4)", M::hyperbolic(4)},
      {"H(5)", M::hyperbolic(5)},
      {"H(7)", M::hyperbolic(7)},
  };
}

std::vector<std::pair<FiniteQuadraticModule, FiniteQuadraticModule>> tensor_pairs() {
  using M = FiniteQuadraticModule;
  const auto disc = [](const HalfIntegralMatrix& f) { return discriminant_module(f); };
  return {
      {M::hyperbolic(2), M::hyperbolic(3)},
      {M::hyperbolic(2), M::cyclic(5, make_rational(1, 5))},
      {disc(HalfIntegralMatrix::scalar(1)), disc(HalfIntegralMatrix::binary_prime(3))},
      {disc(HalfIntegralMatrix::binary_prime(3)), disc(HalfIntegralMatrix::binary_prime(7))},
      {M::hyperbolic(3), M::cyclic(5, make_rational(2, 5))},
      {disc(HalfIntegralMatrix::scalar(2)), M::hyperbolic(3)},
      {M::cyclic(3, make_rational(1, 3)), M::cyclic(3, make_rational(2, 3))},
      {M::hyperbolic(2), M::hyperbolic(2)},
      {disc(HalfIntegralMatrix::binary_prime(11)), M::cyclic(4, make_rational(1, 8))},
      {disc(HalfIntegralMatrix::scalar(3)), M::cyclic(5, make_rational(2, 5))},
  };
}

CheckLine acceptance(int id) {
  static const std::map<int, std::pair<const char*, std::function<Lines()>>> criteria = {
      {1, {"A1 tabulated binary-prime dimensions", tabulated_dims}},
      {2, {"A2 dual-oracle dimensions", closed_formula}},
      {3, {"A3 Milgram corpus", milgram}},
      {4, {"A4 representation relations", relations}},
      {5, {"A5 N-R-S invariants", nrs}},
      {6, {"A6 tensor functoriality", tensor}},
      {7, {"A7 q-series", qseries}},
      {8, {"A8 singular weight", singular_weight}},
      {9, {"A9 critical weight", critical}},
      {10, {"A10 rank identity", rank_identity}},
      {11, {"A11 numeric transformation", transform}},
      {12, {"A12 lambda multiset", lambda_multiset}},
  };
  auto it = criteria.find(id);
  if (it == criteria.end()) throw InvalidInput("no acceptance criterion " + std::to_string(id));
  const auto& [name, body] = it->second;
  return summarize(name, guarded(name, body));
}

std::vector<CheckLine> acceptance_all() {
  std::vector<CheckLine> out;
  for (int id = 1; id <= 12; ++id) out.push_back(acceptance(id));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"milgram", "relations", "nrs", "table1", "qseries", "all"};
  return names;
}

CheckReport run_suite(std::string_view name) {
  CheckReport rep{std::string(name), {}};
  if (name == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto lines = suites().at(s)();
      rep.lines.insert(rep.lines.end(), lines.begin(), lines.end());
    }
    for (auto* fn : {critical, lambda_multiset}) {
      auto lines = guarded("all", fn);
      rep.lines.insert(rep.lines.end(), lines.begin(), lines.end());
    }
    return rep;
  }
  auto it = suites().find(std::string(name));
  if (it == suites().end()) throw InvalidInput("unknown suite '" + std::string(name) + "'");
  rep.lines = it->second();
  return rep;
}

}  // namespace weiljac::checks

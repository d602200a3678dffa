#include "weiljac/fqm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "weiljac/errors.hpp"
#include "weiljac/lattice.hpp"

namespace weiljac {
namespace {

constexpr std::size_t kTabulationLimit = std::size_t{1} << 22;

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(pos_mod(static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m), m));
}

std::int64_t denominator_of(const Rational& x) { return to_int64(x.get_den()); }

std::int64_t numerator_over(const Rational& x, std::int64_t level) {
  Rational scaled = x * Rational(level);
  if (!is_integer(scaled)) throw InvariantViolation("value not in (1/level)Z");
  return to_int64(scaled.get_num());
}

}  // namespace

FiniteQuadraticModule::FiniteQuadraticModule() { validate_and_tabulate(); }

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<std::int64_t> orders,
                                             std::vector<std::vector<Rational>> q_gram)
    : orders_(std::move(orders)), q_gram_(std::move(q_gram)) {
  validate_and_tabulate();
}

FiniteQuadraticModule FiniteQuadraticModule::cyclic(std::int64_t d, const Rational& q) {
  return FiniteQuadraticModule({d}, {{q}});
}

FiniteQuadraticModule FiniteQuadraticModule::hyperbolic(std::int64_t n) {
  return FiniteQuadraticModule({n, n}, {{Rational(0), make_rational(1, n)}, {make_rational(1, n), Rational(0)}});
}

void FiniteQuadraticModule::validate_and_tabulate() {
  const std::size_t r = orders_.size();
  if (q_gram_.size() != r) throw InvalidInput("q_gram must be square of size rank");
  for (const auto& row : q_gram_)
    if (row.size() != r) throw InvalidInput("q_gram must be square of size rank");
  order_ = 1;
  for (std::int64_t d : orders_) {
    if (d < 2) throw InvalidInput("cyclic orders must be at least 2");
    if (order_ > kTabulationLimit / static_cast<std::size_t>(d))
      throw BoundExceeded("finite quadratic module", kTabulationLimit, order_ * static_cast<std::size_t>(d));
    order_ *= static_cast<std::size_t>(d);
  }
  for (auto& row : q_gram_)
    for (auto& v : row) v = mod1(v);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (q_gram_[i][j] != q_gram_[j][i]) throw InvalidInput("q_gram must be symmetric");
    const Rational di(orders_[i]);
    for (std::size_t j = 0; j < r; ++j) {
      const Rational b = i == j ? mod1(2 * q_gram_[i][i]) : q_gram_[i][j];
      if (!is_integer(di * b)) throw InvalidInput("d_i * B(g_i, g_j) must be integral");
    }
    if (!is_integer(di * di * q_gram_[i][i])) throw InvalidInput("d_i^2 * Q(g_i) must be integral");
  }

  level_ = 1;
  for (const auto& row : q_gram_)
    for (const auto& v : row) level_ = std::lcm(level_, denominator_of(v));

  strides_.assign(r, 1);
  for (std::size_t i = r; i-- > 1;) strides_[i - 1] = strides_[i] * static_cast<std::size_t>(orders_[i]);

  lq_.resize(r);
  lb_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    lq_[i] = numerator_over(q_gram_[i][i], level_);
    for (std::size_t j = 0; j < r; ++j)
      lb_[i * r + j] = i == j ? pos_mod(2 * lq_[i], level_) : numerator_over(q_gram_[i][j], level_);
  }

  qtable_.resize(order_);
  Element x(r, 0);
  for (std::size_t idx = 0; idx < order_; ++idx) {
    qtable_[idx] = q_numerator_of(x);
    for (std::size_t i = r; i-- > 0;) {
      if (++x[i] < orders_[i]) break;
      x[i] = 0;
    }
  }

  // Nondegenerate: B(x, g_j) = 0 for every j forces x = 0.
  x.assign(r, 0);
  for (std::size_t idx = 0; idx < order_; ++idx) {
    if (idx != 0) {
      bool radical = true;
      for (std::size_t j = 0; j < r && radical; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < r; ++i) s = pos_mod(s + mul_mod(lb_[i * r + j], x[i], level_), level_);
        radical = s == 0;
      }
      if (radical) throw InvalidInput("quadratic module is degenerate");
    }
    for (std::size_t i = r; i-- > 0;) {
      if (++x[i] < orders_[i]) break;
      x[i] = 0;
    }
  }
}

Element FiniteQuadraticModule::element(std::size_t index) const {
  if (index >= order_) throw InvalidInput("element index out of range");
  Element x(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    x[i] = static_cast<std::int64_t>(index / strides_[i]);
    index %= strides_[i];
  }
  return x;
}

std::size_t FiniteQuadraticModule::index_of(const Element& x) const {
  if (x.size() != orders_.size()) throw InvalidInput("element has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    idx += static_cast<std::size_t>(pos_mod(x[i], orders_[i])) * strides_[i];
  return idx;
}

Element FiniteQuadraticModule::reduce(Element x) const {
  if (x.size() != orders_.size()) throw InvalidInput("element has wrong length");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = pos_mod(x[i], orders_[i]);
  return x;
}

Element FiniteQuadraticModule::add(const Element& x, const Element& y) const {
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return reduce(std::move(z));
}

Element FiniteQuadraticModule::neg(const Element& x) const {
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = -x[i];
  return reduce(std::move(z));
}

Element FiniteQuadraticModule::scale(std::int64_t a, const Element& x) const {
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mul_mod(pos_mod(a, orders_[i]), pos_mod(x[i], orders_[i]), orders_[i]);
  return z;
}

std::size_t FiniteQuadraticModule::add_index(std::size_t i, std::size_t j) const {
  std::size_t idx = 0;
  for (std::size_t c = 0; c < orders_.size(); ++c) {
    const auto d = static_cast<std::size_t>(orders_[c]);
    const std::size_t s = (i / strides_[c]) % d + (j / strides_[c]) % d;
    idx += (s >= d ? s - d : s) * strides_[c];
  }
  return idx;
}

std::size_t FiniteQuadraticModule::neg_index(std::size_t i) const {
  std::size_t idx = 0;
  for (std::size_t c = 0; c < orders_.size(); ++c) {
    const auto d = static_cast<std::size_t>(orders_[c]);
    const std::size_t v = (i / strides_[c]) % d;
    idx += (v == 0 ? 0 : d - v) * strides_[c];
  }
  return idx;
}

std::size_t FiniteQuadraticModule::scale_index(std::int64_t a, std::size_t i) const {
  return index_of(scale(a, element(i)));
}

std::int64_t FiniteQuadraticModule::q_numerator_of(const Element& x) const {
  const std::size_t r = orders_.size();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t xi = pos_mod(x[i], orders_[i]);
    s = pos_mod(s + mul_mod(lq_[i], mul_mod(xi, xi, level_), level_), level_);
    for (std::size_t j = i + 1; j < r; ++j) {
      const std::int64_t xj = pos_mod(x[j], orders_[j]);
      s = pos_mod(s + mul_mod(lb_[i * r + j], mul_mod(xi, xj, level_), level_), level_);
    }
  }
  return s;
}

std::int64_t FiniteQuadraticModule::b_numerator_of(const Element& x, const Element& y) const {
  const std::size_t r = orders_.size();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      s = pos_mod(s + mul_mod(lb_[i * r + j], mul_mod(pos_mod(x[i], orders_[i]), pos_mod(y[j], orders_[j]), level_), level_),
                  level_);
  }
  return s;
}

Rational FiniteQuadraticModule::q_value(const Element& x) const {
  return make_rational(q_numerator_of(reduce(x)), level_);
}

Rational FiniteQuadraticModule::b_value(const Element& x, const Element& y) const {
  return make_rational(b_numerator_of(reduce(x), reduce(y)), level_);
}

std::int64_t FiniteQuadraticModule::q_numerator(std::size_t index) const { return qtable_.at(index); }

std::int64_t FiniteQuadraticModule::b_numerator(std::size_t i, std::size_t j) const {
  const std::int64_t s = qtable_.at(add_index(i, j)) - qtable_[i] - qtable_[j];
  return pos_mod(s, level_);
}

std::int64_t FiniteQuadraticModule::element_order(std::size_t index) const {
  const Element x = element(index);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) ord = std::lcm(ord, orders_[i] / std::gcd(x[i], orders_[i]));
  return ord;
}

bool operator==(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b) {
  return a.orders_ == b.orders_ && a.q_gram_ == b.q_gram_;
}

bool Subgroup::contains(std::size_t index) const {
  return std::binary_search(elements.begin(), elements.end(), index);
}

namespace {

// Extends the membership mask `in` (listing `members`) by the cyclic group of g.
void extend_closure(const FiniteQuadraticModule& m, std::vector<char>& in, std::vector<std::size_t>& members,
                    std::size_t g) {
  if (in[g]) return;
  const std::vector<std::size_t> base = members;
  std::size_t shift = g;
  while (!in[shift]) {
    for (std::size_t h : base) {
      const std::size_t s = m.add_index(h, shift);
      if (!in[s]) {
        in[s] = 1;
        members.push_back(s);
      }
    }
    shift = m.add_index(shift, g);
  }
}

Subgroup make_subgroup(std::vector<std::size_t> members, std::vector<Element> gens) {
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members), std::move(gens)};
}

void check_bound(const FiniteQuadraticModule& m, std::size_t bound, const char* what) {
  if (m.order() > bound) throw BoundExceeded(what, bound, m.order());
}

}  // namespace

Subgroup generated_subgroup(const FiniteQuadraticModule& m, std::span<const Element> generators) {
  std::vector<char> in(m.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  std::vector<Element> gens;
  for (const Element& g : generators) {
    const std::size_t gi = m.index_of(g);
    if (in[gi]) continue;
    extend_closure(m, in, members, gi);
    gens.push_back(m.reduce(g));
  }
  return make_subgroup(std::move(members), std::move(gens));
}

std::vector<Subgroup> subgroups(const FiniteQuadraticModule& m, SubgroupKind kind, std::size_t bound) {
  check_bound(m, bound, "subgroup enumeration");
  const bool isotropic_only = kind != SubgroupKind::all;
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> found;
  std::vector<Subgroup> frontier{Subgroup{{0}, {}}};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier) {
      std::vector<char> in(m.order(), 0);
      for (std::size_t e : h.elements) in[e] = 1;
      std::vector<char> tried(m.order(), 0);
      for (std::size_t g = 1; g < m.order(); ++g) {
        if (in[g] || tried[g]) continue;
        if (isotropic_only) {
          if (m.q_numerator(g) != 0) continue;
          bool orthogonal = true;
          for (const Element& x : h.generators)
            if (m.b_numerator(m.index_of(x), g) != 0) {
              orthogonal = false;
              break;
            }
          if (!orthogonal) continue;
        }
        std::vector<char> in2 = in;
        std::vector<std::size_t> members = h.elements;
        extend_closure(m, in2, members, g);
        // Every element that is a multiple of g yields a subgroup contained in this one;
        // generators of the same cyclic group give the same extension.
        for (std::int64_t a = 2, o = m.element_order(g); a < o; ++a)
          if (std::gcd(a, o) == 1) tried[m.scale_index(a, g)] = 1;
        std::sort(members.begin(), members.end());
        if (!seen.insert(members).second) continue;
        std::vector<Element> gens = h.generators;
        gens.push_back(m.element(g));
        next.push_back(Subgroup{std::move(members), std::move(gens)});
      }
    }
    for (Subgroup& h : frontier) found.push_back(std::move(h));
    frontier = std::move(next);
  }
  if (kind == SubgroupKind::isotropic_self_dual)
    std::erase_if(found, [&](const Subgroup& h) { return h.order() * h.order() != m.order(); });
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return found;
}

bool is_isotropic(const FiniteQuadraticModule& m, const Subgroup& n) {
  return std::all_of(n.elements.begin(), n.elements.end(), [&](std::size_t e) { return m.q_numerator(e) == 0; });
}

Subgroup dual_subgroup(const FiniteQuadraticModule& m, const Subgroup& n) {
  std::vector<std::size_t> gen_idx;
  for (const Element& g : n.generators) gen_idx.push_back(m.index_of(g));
  std::vector<char> in(m.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  std::vector<Element> gens;
  for (std::size_t y = 1; y < m.order(); ++y) {
    bool orth = true;
    for (std::size_t g : gen_idx)
      if (m.b_numerator(g, y) != 0) {
        orth = false;
        break;
      }
    if (!orth || in[y]) continue;
    extend_closure(m, in, members, y);
    gens.push_back(m.element(y));
  }
  return make_subgroup(std::move(members), std::move(gens));
}

namespace {

IntMatrix basis_with_relations(const FiniteQuadraticModule& m, const std::vector<Element>& gens) {
  const std::size_t r = m.rank();
  std::vector<std::vector<Integer>> rows;
  for (const Element& g : gens) {
    std::vector<Integer> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = static_cast<long>(g[i]);
    rows.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> v(r, 0);
    v[i] = static_cast<long>(m.orders()[i]);
    rows.push_back(std::move(v));
  }
  return lattice_basis(rows, r);
}

}  // namespace

FiniteQuadraticModule quotient_module(const FiniteQuadraticModule& m, const Subgroup& n) {
  if (!is_isotropic(m, n)) throw InvalidInput("quotient by a non-isotropic subgroup");
  const std::size_t r = m.rank();
  if (r == 0) return m;
  const Subgroup perp = dual_subgroup(m, n);
  const IntMatrix bh = basis_with_relations(m, perp.generators);
  const IntMatrix bn = basis_with_relations(m, n.generators);
  if (bh.rows() != r || bn.rows() != r) throw InvariantViolation("relation lattice is not of full rank");

  // Rows of bn in terms of rows of bh.
  const auto bh_inv = rational_inverse(bh);
  IntMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t < r; ++t) s += Rational(bn(i, t)) * bh_inv[t][j];
      if (!is_integer(s)) throw InvariantViolation("subgroup lattice not contained in its orthogonal lattice");
      c(i, j) = s.get_num();
    }
  const SmithForm snf = smith_normal_form(c);
  const IntMatrix w = snf.v_inv * bh;

  std::vector<std::int64_t> orders;
  std::vector<Element> gens;
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t d = to_int64(snf.diagonal[i]);
    if (d <= 1) continue;
    Element g(r);
    for (std::size_t j = 0; j < r; ++j) {
      Integer v = w(i, j) % Integer(static_cast<long>(m.orders()[j]));
      g[j] = to_int64(v);
    }
    orders.push_back(d);
    gens.push_back(m.reduce(std::move(g)));
  }
  std::vector<std::vector<Rational>> gram(orders.size(), std::vector<Rational>(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = 0; j < orders.size(); ++j)
      gram[i][j] = i == j ? m.q_value(gens[i]) : m.b_value(gens[i], gens[j]);
  return FiniteQuadraticModule(std::move(orders), std::move(gram));
}

FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b) {
  const std::size_t ra = a.rank(), rb = b.rank();
  std::vector<std::int64_t> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<std::vector<Rational>> gram(ra + rb, std::vector<Rational>(ra + rb, Rational(0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j) gram[i][j] = a.q_gram()[i][j];
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < rb; ++j) gram[ra + i][ra + j] = b.q_gram()[i][j];
  return FiniteQuadraticModule(std::move(orders), std::move(gram));
}

std::vector<std::int64_t> prime_factors(std::uint64_t n) {
  std::vector<std::int64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(static_cast<std::int64_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(static_cast<std::int64_t>(n));
  return ps;
}

std::int64_t prime_power_base(std::uint64_t n) {
  const auto ps = prime_factors(n);
  return ps.size() == 1 ? ps[0] : 0;
}

Element PrimaryPart::embed(const Element& x, const FiniteQuadraticModule& parent) const {
  Element y(parent.rank(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) y[source[i]] = x[i] * multipliers[i];
  return parent.reduce(std::move(y));
}

std::vector<PrimaryPart> primary_decomposition(const FiniteQuadraticModule& m) {
  std::vector<PrimaryPart> parts;
  for (std::int64_t p : prime_factors(m.order())) {
    PrimaryPart part{p, FiniteQuadraticModule(), {}, {}};
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < m.rank(); ++i) {
      std::int64_t d = m.orders()[i], pa = 1;
      while (d % p == 0) {
        d /= p;
        pa *= p;
      }
      if (pa == 1) continue;
      orders.push_back(pa);
      part.multipliers.push_back(d);
      part.source.push_back(i);
    }
    const std::size_t r = orders.size();
    std::vector<std::vector<Rational>> gram(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const Rational mi(part.multipliers[i]), mj(part.multipliers[j]);
        gram[i][j] = mod1(mi * mj * m.q_gram()[part.source[i]][part.source[j]]);
      }
    part.module = FiniteQuadraticModule(std::move(orders), std::move(gram));
    parts.push_back(std::move(part));
  }
  return parts;
}

std::complex<double> GaussSum::sigma() const {
  return sum.eval_complex() / std::sqrt(static_cast<double>(order));
}

bool GaussSum::is_unimodular_eighth_root() const {
  const CycNum n(static_cast<long>(order));
  if (sum * sum.conjugate() != n) return false;
  CycNum g2 = sum * sum;
  CycNum g8 = g2 * g2;
  g8 *= g8;
  CycNum n2 = n * n;
  return g8 == n2 * n2;
}

GaussSum sigma_invariant(const FiniteQuadraticModule& m) {
  const std::int64_t level = m.level();
  std::vector<Integer> coeffs(static_cast<std::size_t>(level), 0);
  for (std::size_t x = 0; x < m.order(); ++x) {
    const std::int64_t q = m.q_numerator(x);
    coeffs[static_cast<std::size_t>(q == 0 ? 0 : level - q)] += 1;
  }
  return GaussSum{CycNum::from_integers(static_cast<std::uint32_t>(level), std::move(coeffs)), m.order()};
}

bool is_witt_zero(const FiniteQuadraticModule& m, std::size_t bound) {
  check_bound(m, bound, "Witt-zero test");
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m.order()))));
  if (root * root != m.order()) return false;
  return anisotropic_kernel(m, bound).is_trivial();
}

FiniteQuadraticModule anisotropic_kernel(const FiniteQuadraticModule& m, std::size_t bound) {
  check_bound(m, bound, "anisotropic kernel");
  std::vector<char> in(m.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  std::vector<std::size_t> gens;
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t g = 1; g < m.order(); ++g) {
      if (in[g] || m.q_numerator(g) != 0) continue;
      if (std::any_of(gens.begin(), gens.end(), [&](std::size_t h) { return m.b_numerator(h, g) != 0; })) continue;
      extend_closure(m, in, members, g);
      gens.push_back(g);
      grown = true;
    }
  }
  std::vector<Element> gen_elems;
  for (std::size_t g : gens) gen_elems.push_back(m.element(g));
  return quotient_module(m, make_subgroup(std::move(members), std::move(gen_elems)));
}

bool is_anisotropic(const FiniteQuadraticModule& m) {
  for (std::size_t x = 1; x < m.order(); ++x)
    if (m.q_numerator(x) == 0) return false;
  return true;
}

namespace {

struct IsoSearch {
  const FiniteQuadraticModule& a;
  const FiniteQuadraticModule& b;
  std::vector<std::size_t> gen_a;  // indices of a's generators
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> image;

  bool bijective() const {
    std::vector<char> hit(b.order(), 0);
    for (std::size_t x = 0; x < a.order(); ++x) {
      const Element ex = a.element(x);
      std::size_t y = 0;
      for (std::size_t i = 0; i < ex.size(); ++i)
        for (std::int64_t t = 0; t < ex[i]; ++t) y = b.add_index(y, image[i]);
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == gen_a.size()) return bijective();
    for (std::size_t h : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = a.b_numerator(gen_a[i], gen_a[j]) == b.b_numerator(h, image[j]);
      if (!ok) continue;
      image.push_back(h);
      if (extend(i + 1)) return true;
      image.pop_back();
    }
    return false;
  }
};

std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> value_order_histogram(const FiniteQuadraticModule& m) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> hist;
  for (std::size_t x = 0; x < m.order(); ++x) ++hist[{m.q_numerator(x), m.element_order(x)}];
  return hist;
}

}  // namespace

bool is_isomorphic(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b, std::size_t bound) {
  check_bound(a, bound, "isomorphism test");
  check_bound(b, bound, "isomorphism test");
  if (a.order() != b.order() || a.level() != b.level()) return false;
  if (value_order_histogram(a) != value_order_histogram(b)) return false;
  IsoSearch search{a, b, {}, {}, {}};
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Element g(a.rank(), 0);
    g[i] = 1;
    const std::size_t gi = a.index_of(g);
    search.gen_a.push_back(gi);
    std::vector<std::size_t> cand;
    for (std::size_t h = 0; h < b.order(); ++h)
      if (b.element_order(h) == a.orders()[i] && b.q_numerator(h) == a.q_numerator(gi)) cand.push_back(h);
    search.candidates.push_back(std::move(cand));
  }
  return search.extend(0);
}

}  // namespace weiljac

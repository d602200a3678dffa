#include "weiljac/weil.hpp"

#include <algorithm>

#include "weiljac/errors.hpp"

namespace weiljac {
namespace {

void check_matrix_bound(const FiniteQuadraticModule& m, std::size_t bound) {
  if (m.order() > bound) throw BoundExceeded("Weil representation", bound, m.order());
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BoundExceeded("group ring coefficient", INT64_MAX, 0);
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BoundExceeded("group ring coefficient", INT64_MAX, 0);
  return r;
}

CycNum zeta(std::int64_t e, std::uint32_t order) { return CycNum::root_of_unity(e, order); }

}  // namespace

WeilRep::WeilRep(FiniteQuadraticModule module, std::size_t bound)
    : module_(std::move(module)),
      field_order_(static_cast<std::uint32_t>(module_.level())),
      gauss_(sigma_invariant(module_)),
      s_scalar_(gauss_.sum / CycNum(static_cast<long>(module_.order()))) {
  check_matrix_bound(module_, bound);
}

std::int64_t WeilRep::s_exponent(std::size_t y, std::size_t x) const {
  const std::int64_t b = module_.b_numerator(y, x);
  return b == 0 ? 0 : static_cast<std::int64_t>(field_order_) - b;
}

MatrixCyc WeilRep::rho_t() const {
  MatrixCyc t(dim(), dim());
  for (std::size_t x = 0; x < dim(); ++x) t(x, x) = zeta(t_exponent(x), field_order_);
  return t;
}

MatrixCyc WeilRep::rho_s() const {
  MatrixCyc s(dim(), dim());
  for (std::size_t y = 0; y < dim(); ++y)
    for (std::size_t x = 0; x < dim(); ++x) s(y, x) = s_scalar_ * zeta(s_exponent(y, x), field_order_);
  return s;
}

WeilMatrix::WeilMatrix(std::size_t n, std::uint32_t field_order)
    : n_(n), order_(field_order), scalar_(1L), data_(n * n * field_order, 0) {}

WeilMatrix WeilMatrix::identity(std::size_t n, std::uint32_t field_order) {
  WeilMatrix m(n, field_order);
  for (std::size_t i = 0; i < n; ++i) m.data_[(i * n + i) * field_order] = 1;
  return m;
}

WeilMatrix WeilMatrix::generator_s(const WeilRep& w) {
  WeilMatrix m(w.dim(), w.field_order());
  m.scalar_ = w.s_scalar();
  for (std::size_t y = 0; y < w.dim(); ++y)
    for (std::size_t x = 0; x < w.dim(); ++x)
      m.data_[(y * m.n_ + x) * m.order_ + static_cast<std::size_t>(w.s_exponent(y, x))] = 1;
  return m;
}

WeilMatrix WeilMatrix::generator_t(const WeilRep& w, bool inverse) {
  WeilMatrix m(w.dim(), w.field_order());
  const auto l = static_cast<std::int64_t>(w.field_order());
  for (std::size_t x = 0; x < w.dim(); ++x) {
    std::int64_t e = w.t_exponent(x);
    if (inverse && e != 0) e = l - e;
    m.data_[(x * m.n_ + x) * m.order_ + static_cast<std::size_t>(e)] = 1;
  }
  return m;
}

CycNum WeilMatrix::group_entry(std::size_t i, std::size_t j) const {
  std::vector<Integer> c(order_);
  bool any = false;
  for (std::uint32_t e = 0; e < order_; ++e) {
    const std::int64_t v = coefficient(i, j, e);
    if (v != 0) {
      c[e] = static_cast<long>(v);
      any = true;
    }
  }
  if (!any) return CycNum();
  return CycNum::from_integers(order_, std::move(c));
}

MatrixCyc WeilMatrix::to_matrix() const {
  MatrixCyc out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      CycNum e = group_entry(i, j);
      if (!e.is_zero()) out(i, j) = scalar_ * e;
    }
  return out;
}

WeilMatrix WeilMatrix::conjugate_transpose() const {
  WeilMatrix out(n_, order_);
  out.scalar_ = scalar_.conjugate();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::uint32_t e = 0; e < order_; ++e)
        out.data_[(j * n_ + i) * order_ + (e == 0 ? 0 : order_ - e)] = coefficient(i, j, e);
  return out;
}

WeilMatrix WeilMatrix::operator*(const WeilMatrix& other) const {
  if (n_ != other.n_ || order_ != other.order_) throw InvalidInput("Weil matrices of different shape");
  using Support = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  auto supports = [](const WeilMatrix& m) {
    std::vector<Support> s(m.n_ * m.n_);
    for (std::size_t k = 0; k < s.size(); ++k)
      for (std::uint32_t e = 0; e < m.order_; ++e)
        if (const std::int64_t v = m.data_[k * m.order_ + e]; v != 0) s[k].emplace_back(e, v);
    return s;
  };
  const std::vector<Support> sa = supports(*this);
  const std::vector<Support> sb = supports(other);
  WeilMatrix out(n_, order_);
  out.scalar_ = scalar_ * other.scalar_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Support& a = sa[i * n_ + j];
      if (a.empty()) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        const Support& b = sb[j * n_ + k];
        std::int64_t* dst = &out.data_[(i * n_ + k) * order_];
        for (const auto& [ea, ca] : a)
          for (const auto& [eb, cb] : b) {
            std::uint32_t e = ea + eb;
            if (e >= order_) e -= order_;
            dst[e] = checked_add(dst[e], checked_mul(ca, cb));
          }
      }
    }
  return out;
}

std::vector<Letter> parse_word(std::string_view text) {
  std::vector<Letter> word;
  for (char c : text) {
    switch (c) {
      case 'S': word.push_back(Letter::S); break;
      case 'T': word.push_back(Letter::T); break;
      case 't': word.push_back(Letter::T_inv); break;
      case ' ': case ',': break;
      default: throw InvalidInput(std::string("unknown letter '") + c + "' in word");
    }
  }
  return word;
}

WeilMatrix rho_word_grouped(const WeilRep& w, std::span<const Letter> word) {
  WeilMatrix acc = WeilMatrix::identity(w.dim(), w.field_order());
  const WeilMatrix s = WeilMatrix::generator_s(w);
  const WeilMatrix t = WeilMatrix::generator_t(w);
  const WeilMatrix ti = WeilMatrix::generator_t(w, true);
  for (Letter l : word) acc = acc * (l == Letter::S ? s : l == Letter::T ? t : ti);
  return acc;
}

MatrixCyc rho_word(const WeilRep& w, std::span<const Letter> word) { return rho_word_grouped(w, word).to_matrix(); }

RelationReport check_relations(const WeilRep& w) {
  RelationReport rep;
  const std::size_t n = w.dim();
  const CycNum order(static_cast<long>(n));
  const WeilMatrix e = WeilMatrix::generator_s(w);
  const WeilMatrix t = WeilMatrix::generator_t(w);
  const WeilMatrix e2 = e * e;

  // E^2 = |M| P_neg  <=>  rho(S)^2 = (G^2/|M|) P_neg = sigma^2 P_neg.
  rep.s_squared = true;
  for (std::size_t y = 0; y < n && rep.s_squared; ++y)
    for (std::size_t x = 0; x < n && rep.s_squared; ++x) {
      const CycNum expected = x == w.module().neg_index(y) ? order : CycNum();
      rep.s_squared = e2.group_entry(y, x) == expected;
    }

  // (rho(S) rho(T))^3 = rho(S)^2  <=>  G (ET)^3 = |M| E^2.
  const WeilMatrix et = e * t;
  const WeilMatrix et3 = et * et * et;
  rep.metaplectic = true;
  for (std::size_t y = 0; y < n && rep.metaplectic; ++y)
    for (std::size_t x = 0; x < n && rep.metaplectic; ++x)
      rep.metaplectic = w.gauss().sum * et3.group_entry(y, x) == order * e2.group_entry(y, x);

  // rho(S) rho(S)^* = I  <=>  E E^* = |M| I, since |G|^2 = |M|.
  const WeilMatrix ee = e * e.conjugate_transpose();
  rep.unitary = w.s_scalar() * w.s_scalar().conjugate() == CycNum(1L) / order;
  for (std::size_t y = 0; y < n && rep.unitary; ++y)
    for (std::size_t x = 0; x < n && rep.unitary; ++x)
      rep.unitary = ee.group_entry(y, x) == (x == y ? order : CycNum());

  // rho(T)^d != I for 0 < d < level, rho(T)^level = I.
  const auto level = w.module().level();
  WeilMatrix power = WeilMatrix::identity(n, w.field_order());
  bool early = false;
  for (std::int64_t d = 1; d <= level; ++d) {
    power = power * t;
    bool ident = true;
    for (std::size_t x = 0; x < n && ident; ++x) ident = power.coefficient(x, x, 0) == 1;
    if (ident && d < level) early = true;
    if (d == level) rep.t_order = ident && !early;
  }
  return rep;
}

bool kronecker_check(const FiniteQuadraticModule& m, const FiniteQuadraticModule& n, std::size_t bound) {
  const WeilRep wm(m, bound), wn(n, bound), ws(direct_sum(m, n), bound);
  const std::size_t dn = wn.dim();
  const CycNum scalar = wm.s_scalar() * wn.s_scalar();
  if (ws.s_scalar() != scalar) return false;
  for (std::size_t y1 = 0; y1 < wm.dim(); ++y1)
    for (std::size_t y2 = 0; y2 < dn; ++y2) {
      const std::size_t y = y1 * dn + y2;
      if (zeta(ws.t_exponent(y), ws.field_order()) !=
          zeta(wm.t_exponent(y1), wm.field_order()) * zeta(wn.t_exponent(y2), wn.field_order()))
        return false;
      for (std::size_t x1 = 0; x1 < wm.dim(); ++x1)
        for (std::size_t x2 = 0; x2 < dn; ++x2) {
          const std::size_t x = x1 * dn + x2;
          const CycNum lhs = zeta(ws.s_exponent(y, x), ws.field_order());
          const CycNum rhs =
              zeta(wm.s_exponent(y1, x1), wm.field_order()) * zeta(wn.s_exponent(y2, x2), wn.field_order());
          if (lhs != rhs) return false;
        }
    }
  return true;
}

InvariantBasis invariants_fixed_by(const FiniteQuadraticModule& m, const std::vector<std::size_t>& perm,
                                   std::size_t bound) {
  const WeilRep w(m, bound);
  const std::size_t n = w.dim();
  if (perm.size() != n) throw InvalidInput("permutation has wrong length");

  // rho(T)-fixed vectors live on isotropic elements; unknowns are perm-orbits there.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of(n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (m.q_numerator(x) != 0 || orbit_of[x] != SIZE_MAX) continue;
    std::vector<std::size_t> orbit{x};
    orbit_of[x] = orbits.size();
    for (std::size_t y = perm[x]; y != x; y = perm[y]) {
      if (orbit_of[y] != SIZE_MAX) throw InvalidInput("not a permutation");
      orbit_of[y] = orbits.size();
      orbit.push_back(y);
    }
    orbits.push_back(std::move(orbit));
  }

  // Row y of (rho(S) - I) v = 0 divided by G/|M|:  sum_x zeta^{-B(y,x)} v_x - conj(G) v_y = 0.
  const std::uint32_t l = w.field_order();
  const CycNum conj_g = w.gauss().sum.conjugate();
  MatrixCyc a(n, orbits.size());
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      std::vector<Integer> c(l, 0);
      for (std::size_t x : orbits[o]) c[static_cast<std::size_t>(w.s_exponent(y, x))] += 1;
      CycNum entry = CycNum::from_integers(l, std::move(c));
      if (orbit_of[y] == o) entry -= conj_g;
      a(y, o) = std::move(entry);
    }

  InvariantBasis basis;
  for (const auto& v : kernel(std::move(a))) {
    std::vector<CycNum> full(n);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (std::size_t x : orbits[o]) full[x] = v[o];
    basis.vectors.push_back(std::move(full));
  }
  return basis;
}

InvariantBasis invariants(const FiniteQuadraticModule& m, std::size_t bound) {
  std::vector<std::size_t> id(m.order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  if (m.order() > bound) throw BoundExceeded("Weil representation", bound, m.order());
  return invariants_fixed_by(m, id, bound);
}

bool is_invariant(const WeilRep& w, const std::vector<CycNum>& v) {
  return w.rho_t().apply(v) == v && w.rho_s().apply(v) == v;
}

std::vector<std::vector<CycNum>> nrs_generators(const FiniteQuadraticModule& m, std::size_t bound) {
  if (prime_power_base(m.order()) == 0)
    throw HypothesisError("the isotropic self-dual generator theorem needs |M| to be a prime power");
  std::vector<std::vector<CycNum>> gens;
  for (const Subgroup& u : subgroups(m, SubgroupKind::isotropic_self_dual, bound)) {
    std::vector<CycNum> v(m.order());
    for (std::size_t x : u.elements) v[x] = CycNum(1L);
    gens.push_back(std::move(v));
  }
  return gens;
}

std::size_t invariants_dim_via_primary(const FiniteQuadraticModule& m, std::size_t bound) {
  std::size_t d = 1;
  for (const PrimaryPart& part : primary_decomposition(m)) {
    d *= invariants(part.module, bound).dim();
    if (d == 0) break;
  }
  return d;
}

ZEigenspace z_eigenspace(const WeilRep& w, std::int64_t m) {
  const CycNum target = CycNum::root_of_unity(m, 4);
  const CycNum g = w.gauss().sum;
  const CycNum z = (g * g).conjugate() / CycNum(static_cast<long>(w.dim()));
  ZEigenspace x;
  if (target == z)
    x.epsilon = 1;
  else if (target == -z)
    x.epsilon = -1;
  else
    return x;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const std::size_t ni = w.module().neg_index(i);
    if (i < ni || (i == ni && x.epsilon == 1)) x.representatives.push_back(i);
  }
  return x;
}

CycNum trace_on(const ZEigenspace& x, const WeilRep& w, const MatrixCyc& a) {
  if (x.epsilon == 0) return CycNum();
  CycNum acc;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    acc += a(i, i);
    const CycNum& off = a(i, w.module().neg_index(i));
    if (x.epsilon == 1)
      acc += off;
    else
      acc -= off;
  }
  return acc / CycNum(2L);
}

std::vector<std::size_t> iota_permutation(const DiscriminantForm& d) {
  const FiniteQuadraticModule& m = d.module();
  std::vector<std::size_t> perm(m.order());
  for (std::size_t x = 0; x < m.order(); ++x) {
    std::vector<Integer> r = d.representative(m.element(x));
    r[0] = -r[0];
    perm[x] = m.index_of(d.element_of(r));
  }
  return perm;
}

std::size_t iota_fixed_invariants(std::int64_t l, const HalfIntegralMatrix& f, std::size_t bound) {
  const DiscriminantForm d(f.with_scalar_block(l));
  if (d.module().order() > bound) throw BoundExceeded("Weil representation", bound, d.module().order());
  return invariants_fixed_by(d.module(), iota_permutation(d), bound).dim();
}

bool iota_commutes(std::int64_t l, const HalfIntegralMatrix& f, std::size_t bound) {
  const DiscriminantForm d(f.with_scalar_block(l));
  const WeilRep w(d.module(), bound);
  const auto perm = iota_permutation(d);
  for (std::size_t x = 0; x < w.dim(); ++x) {
    if (w.t_exponent(perm[x]) != w.t_exponent(x)) return false;
    for (std::size_t y = 0; y < w.dim(); ++y)
      if (w.s_exponent(perm[y], perm[x]) != w.s_exponent(y, x)) return false;
  }
  return true;
}

}  // namespace weiljac

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "weiljac/cyclotomic.hpp"
#include "weiljac/rational.hpp"

namespace weiljac {

inline constexpr std::size_t kDefaultEnumerationBound = 2000;

/// Residue tuple; component i is taken modulo orders()[i].
using Element = std::vector<std::int64_t>;

/// A finite abelian group  Z/d_1 + ... + Z/d_r  with a Q/Z-valued quadratic
/// form, presented by its Q-gram: q_gram[i][i] = Q(g_i), q_gram[i][j] =
/// B(g_i, g_j) for i != j, all reduced into [0, 1).
///
/// Construction checks the well-definedness congruences and nondegeneracy.
/// Elements are enumerated lexicographically (first component most
/// significant), so index 0 is the neutral element and the enumeration of an
/// orthogonal sum is the product order of the summands.
class FiniteQuadraticModule {
 public:
  /// The trivial module.
  FiniteQuadraticModule();
  FiniteQuadraticModule(std::vector<std::int64_t> orders, std::vector<std::vector<Rational>> q_gram);

  /// (Z/d, x -> q x^2).
  static FiniteQuadraticModule cyclic(std::int64_t d, const Rational& q);
  /// (Z/n)^2 with Q(x, y) = xy/n.
  static FiniteQuadraticModule hyperbolic(std::int64_t n);

  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  const std::vector<std::vector<Rational>>& q_gram() const noexcept { return q_gram_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::size_t order() const noexcept { return order_; }
  /// Smallest l > 0 with l Q(x) = 0 mod 1 for all x.
  std::int64_t level() const noexcept { return level_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  Element element(std::size_t index) const;
  std::size_t index_of(const Element& x) const;
  Element reduce(Element x) const;

  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element scale(std::int64_t a, const Element& x) const;

  std::size_t add_index(std::size_t i, std::size_t j) const;
  std::size_t neg_index(std::size_t i) const;
  std::size_t scale_index(std::int64_t a, std::size_t i) const;

  Rational q_value(const Element& x) const;
  Rational b_value(const Element& x, const Element& y) const;

  /// Q(x) = q_numerator(x) / level(), numerator in [0, level).
  std::int64_t q_numerator(std::size_t index) const;
  /// B(x, y) = b_numerator(x, y) / level(), numerator in [0, level).
  std::int64_t b_numerator(std::size_t i, std::size_t j) const;

  std::int64_t element_order(std::size_t index) const;

  /// Order of the form as written; two presentations of isomorphic modules
  /// compare unequal.
  friend bool operator==(const FiniteQuadraticModule&, const FiniteQuadraticModule&);

 private:
  std::int64_t q_numerator_of(const Element& x) const;
  std::int64_t b_numerator_of(const Element& x, const Element& y) const;
  void validate_and_tabulate();

  std::vector<std::int64_t> orders_;
  std::vector<std::vector<Rational>> q_gram_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
  std::int64_t level_ = 1;
  std::vector<std::int64_t> lq_;     // level * Q(g_i)
  std::vector<std::int64_t> lb_;     // level * B(g_i, g_j), row-major, diagonal = 2 level Q(g_i)
  std::vector<std::int64_t> qtable_; // q numerators by element index
};

/// Subgroup given by its sorted element indices and a small generating set.
struct Subgroup {
  std::vector<std::size_t> elements;
  std::vector<Element> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(std::size_t index) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

enum class SubgroupKind { all, isotropic, isotropic_self_dual };

Subgroup generated_subgroup(const FiniteQuadraticModule& m, std::span<const Element> generators);

/// Complete duplicate-free list of subgroups of the requested kind, ordered
/// by size then by element list. Throws BoundExceeded when |M| > bound.
std::vector<Subgroup> subgroups(const FiniteQuadraticModule& m, SubgroupKind kind,
                                std::size_t bound = kDefaultEnumerationBound);

bool is_isotropic(const FiniteQuadraticModule& m, const Subgroup& n);
Subgroup dual_subgroup(const FiniteQuadraticModule& m, const Subgroup& n);

/// N^perp / N with the induced form; N must be isotropic.
FiniteQuadraticModule quotient_module(const FiniteQuadraticModule& m, const Subgroup& n);

FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b);

struct PrimaryPart {
  std::int64_t prime;
  FiniteQuadraticModule module;
  /// multipliers[i] * g_i generates component i of the part.
  std::vector<std::int64_t> multipliers;
  /// Component of M each part generator comes from.
  std::vector<std::size_t> source;

  Element embed(const Element& x, const FiniteQuadraticModule& parent) const;
};

/// p-parts M(p) for the primes dividing |M|, increasing.
std::vector<PrimaryPart> primary_decomposition(const FiniteQuadraticModule& m);

/// sigma(M) carried as the Gauss sum G = sum_x e(-Q(x)) together with |M|;
/// sigma = G / sqrt(|M|).
struct GaussSum {
  CycNum sum;
  std::size_t order;

  std::complex<double> sigma() const;
  /// G * conj(G) == |M| and G^8 == |M|^4, exactly.
  bool is_unimodular_eighth_root() const;
};

GaussSum sigma_invariant(const FiniteQuadraticModule& m);

bool is_witt_zero(const FiniteQuadraticModule& m, std::size_t bound = kDefaultEnumerationBound);

/// N^perp / N for a maximal isotropic N; anisotropic by construction.
FiniteQuadraticModule anisotropic_kernel(const FiniteQuadraticModule& m,
                                         std::size_t bound = kDefaultEnumerationBound);
bool is_anisotropic(const FiniteQuadraticModule& m);

bool is_isomorphic(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b,
                   std::size_t bound = kDefaultEnumerationBound);

/// Returns p when n = p^k with k >= 1, else 0.
std::int64_t prime_power_base(std::uint64_t n);

std::vector<std::int64_t> prime_factors(std::uint64_t n);

}  // namespace weiljac

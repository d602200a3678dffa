#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "weiljac/cyclotomic.hpp"
#include "weiljac/fqm.hpp"
#include "weiljac/gram.hpp"
#include "weiljac/linalg.hpp"

namespace weiljac {

inline constexpr std::size_t kDefaultMatrixBound = 200;

/// Weil representation of a finite quadratic module on C[M], basis e_x in
/// the module's element enumeration:
///   rho(T) e_x = e(Q(x)) e_x,
///   rho(S) e_x = (G/|M|) sum_y e(-B(y, x)) e_y,   G = sum_x e(-Q(x)).
class WeilRep {
 public:
  explicit WeilRep(FiniteQuadraticModule module, std::size_t bound = kDefaultMatrixBound);

  const FiniteQuadraticModule& module() const noexcept { return module_; }
  std::size_t dim() const noexcept { return module_.order(); }
  /// Entries live in Q(zeta_L) with L = level of the module.
  std::uint32_t field_order() const noexcept { return field_order_; }
  const GaussSum& gauss() const noexcept { return gauss_; }
  /// G / |M|, the scalar in front of rho(S).
  const CycNum& s_scalar() const noexcept { return s_scalar_; }

  /// Exponent a with rho(T)[x][x] = zeta_L^a.
  std::int64_t t_exponent(std::size_t x) const { return module_.q_numerator(x); }
  /// Exponent a with rho(S)[y][x] = (G/|M|) zeta_L^a.
  std::int64_t s_exponent(std::size_t y, std::size_t x) const;

  MatrixCyc rho_t() const;
  MatrixCyc rho_s() const;

 private:
  FiniteQuadraticModule module_;
  std::uint32_t field_order_;
  GaussSum gauss_;
  CycNum s_scalar_;
};

/// scalar * E where E has entries in the group ring Z[x]/(x^L - 1), x -> zeta_L.
/// Words in S and T have this shape with E integral, which keeps products exact
/// without field reductions.
class WeilMatrix {
 public:
  WeilMatrix(std::size_t n, std::uint32_t field_order);
  static WeilMatrix identity(std::size_t n, std::uint32_t field_order);
  static WeilMatrix generator_s(const WeilRep& w);
  static WeilMatrix generator_t(const WeilRep& w, bool inverse = false);

  std::size_t size() const noexcept { return n_; }
  const CycNum& scalar() const noexcept { return scalar_; }
  std::int64_t coefficient(std::size_t i, std::size_t j, std::uint32_t e) const {
    return data_[(i * n_ + j) * order_ + e];
  }
  /// Entry of E (without the scalar) as a field element.
  CycNum group_entry(std::size_t i, std::size_t j) const;
  MatrixCyc to_matrix() const;

  WeilMatrix conjugate_transpose() const;
  WeilMatrix operator*(const WeilMatrix& other) const;

 private:
  std::size_t n_;
  std::uint32_t order_;
  CycNum scalar_;
  std::vector<std::int64_t> data_;
};

enum class Letter { S, T, T_inv };

/// Parses "S", "T", "t" (= T^{-1}) letters, blanks ignored.
std::vector<Letter> parse_word(std::string_view text);

WeilMatrix rho_word_grouped(const WeilRep& w, std::span<const Letter> word);
MatrixCyc rho_word(const WeilRep& w, std::span<const Letter> word);

struct RelationReport {
  bool s_squared = false;    // rho(S)^2 = sigma^2 P_neg
  bool metaplectic = false;  // (rho(S) rho(T))^3 = rho(S)^2
  bool unitary = false;      // rho(S) rho(S)^* = I
  bool t_order = false;      // rho(T) has order exactly level
  bool all() const noexcept { return s_squared && metaplectic && unitary && t_order; }
};

RelationReport check_relations(const WeilRep& w);

/// rho_S and rho_T of M + N against the Kronecker products of the factors.
bool kronecker_check(const FiniteQuadraticModule& m, const FiniteQuadraticModule& n,
                     std::size_t bound = kDefaultMatrixBound);

struct InvariantBasis {
  std::vector<std::vector<CycNum>> vectors;
  std::size_t dim() const noexcept { return vectors.size(); }
};

InvariantBasis invariants(const FiniteQuadraticModule& m, std::size_t bound = kDefaultMatrixBound);

/// Invariants that are also fixed by the coordinate permutation `perm`
/// (an involution on element indices commuting with the representation).
InvariantBasis invariants_fixed_by(const FiniteQuadraticModule& m, const std::vector<std::size_t>& perm,
                                   std::size_t bound = kDefaultMatrixBound);

bool is_invariant(const WeilRep& w, const std::vector<CycNum>& v);

/// I_U = sum_{x in U} e_x over the isotropic self-dual U. Requires |M| to be
/// a prime power.
std::vector<std::vector<CycNum>> nrs_generators(const FiniteQuadraticModule& m,
                                                std::size_t bound = kDefaultEnumerationBound);

std::size_t invariants_dim_via_primary(const FiniteQuadraticModule& m, std::size_t bound = kDefaultMatrixBound);

/// i^m-eigenspace of the center element Z = S^2 acting through the dual
/// representation rho*(A) = conj(rho(A)), where rho*(Z) = conj(sigma^2) P_neg.
/// Basis vectors are e_x + epsilon e_{-x}, one per orbit {x, -x}.
struct ZEigenspace {
  int epsilon = 0;  // +1, -1, or 0 when i^m is not an eigenvalue
  std::vector<std::size_t> representatives;
  std::size_t dim() const noexcept { return representatives.size(); }
};

ZEigenspace z_eigenspace(const WeilRep& w, std::int64_t m);

/// tr(A | X) = (1/2) sum_x (A[x][x] + eps A[x][-x]) for A commuting with Z.
CycNum trace_on(const ZEigenspace& x, const WeilRep& w, const MatrixCyc& a);

/// Permutation of D_{(l)+F} induced by (x, y) -> (-x, y) on Z^{1+n}.
std::vector<std::size_t> iota_permutation(const DiscriminantForm& d);

/// dim of Inv(W(D_{(l)+F})) intersected with the +1-eigenspace of iota.
std::size_t iota_fixed_invariants(std::int64_t l, const HalfIntegralMatrix& f,
                                  std::size_t bound = kDefaultMatrixBound);

/// iota commutes with rho(T) and rho(S) on D_{(l)+F}.
bool iota_commutes(std::int64_t l, const HalfIntegralMatrix& f, std::size_t bound = kDefaultMatrixBound);

}  // namespace weiljac

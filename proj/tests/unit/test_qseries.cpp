#include <gtest/gtest.h>

#include <algorithm>

#include "weiljac/dims.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/gram.hpp"
#include "weiljac/qseries.hpp"

using namespace weiljac;

namespace {

const HalfIntegralMatrix& a2() {
  static const auto f = HalfIntegralMatrix::parse("2 1; 1 2");
  return f;
}

// Euler's pentagonal number theorem.
std::int64_t pentagonal_coefficient(std::int64_t m) {
  std::int64_t c = 0;
  for (std::int64_t k = -40; k <= 40; ++k)
    if (k * (3 * k - 1) / 2 == m) c += (k % 2 == 0) ? 1 : -1;
  return c;
}

std::vector<std::vector<std::int64_t>> sorted(std::vector<std::vector<std::int64_t>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(JacobiTheta, Coefficients) {
  const auto t = jacobi_theta(Rational(4));
  EXPECT_EQ(t.zeta_den(), 2);
  EXPECT_EQ(t.coefficient(make_rational(1, 8), {1}), 1);
  EXPECT_EQ(t.coefficient(make_rational(1, 8), {-1}), -1);
  EXPECT_EQ(t.coefficient(make_rational(9, 8), {3}), -1);
  EXPECT_EQ(t.coefficient(make_rational(25, 8), {5}), 1);
  EXPECT_EQ(t.coefficient(make_rational(9, 8), {1}), 0);
}

TEST(JacobiTheta, SumEqualsProduct) {
  for (const auto& t : {make_rational(81, 8), Rational(6), make_rational(13, 3)})
    EXPECT_EQ(jacobi_theta(t, ThetaForm::sum), jacobi_theta(t, ThetaForm::product));
}

TEST(Eta, PentagonalCoefficients) {
  const auto eta = dedekind_eta(Rational(30));
  EXPECT_EQ(eta.coefficient(make_rational(1, 24)), 1);
  EXPECT_EQ(eta.coefficient(make_rational(25, 24)), -1);
  EXPECT_EQ(eta.coefficient(make_rational(49, 24)), -1);
  const auto e = euler_product(Rational(30));
  for (std::int64_t m = 0; m <= 30; ++m) EXPECT_EQ(e.coefficient(Rational(m)), pentagonal_coefficient(m)) << m;
}

TEST(Truncation, ProductRule) {
  EXPECT_EQ(product_truncation(Rational(5), Rational(0), Rational(3), Rational(1)), Rational(3));
  EXPECT_EQ(product_truncation(std::nullopt, Rational(2), Rational(3), Rational(0)), Rational(5));
  EXPECT_FALSE(product_truncation(std::nullopt, Rational(0), std::nullopt, Rational(0)).has_value());
}

TEST(Truncation, ProductAgreesWithLongerExpansion) {
  const auto a = euler_product(Rational(10));
  const auto b = QSeries::monomial(Rational(1), Rational(1)) * euler_product(Rational(6));
  const auto p = a * b;
  ASSERT_TRUE(p.truncation().has_value());
  EXPECT_EQ(*p.truncation(), Rational(7));
  const auto full = euler_product(Rational(30)) * (QSeries::monomial(Rational(1), Rational(1)) * euler_product(Rational(30)));
  EXPECT_EQ(p, full.truncated(Rational(7)));
}

TEST(Psi9, ShapeAndSymmetry) {
  const auto psi = psi9(Rational(8));
  EXPECT_EQ(psi.zeta_den(), 1);
  EXPECT_EQ(psi.nvars(), 2u);
  ASSERT_TRUE(psi.valuation().has_value());
  EXPECT_EQ(*psi.valuation(), Rational(1));
  // (z1, z2) -> (-z1, -z2) flips the sign in odd weight.
  for (const auto& [key, c] : psi.coefficients()) {
    std::vector<std::int64_t> neg = key.second;
    for (auto& r : neg) r = -r;
    EXPECT_EQ(psi.coefficient(key.first, neg), -c);
  }
}

TEST(Psi9, VanishesAtZ1Zero) { EXPECT_TRUE(psi9(Rational(6)).specialize_to_one(0).is_zero()); }

TEST(Psi9, JacobiConstraintsAndThetaDecomposition) {
  const auto psi = psi9(Rational(8));
  EXPECT_TRUE(check_jacobi_constraints(psi, 9, a2()).passed());
  const auto h = theta_decomposition(psi, a2());
  const DiscriminantForm d(a2());
  EXPECT_TRUE(h.at(d.module().element(0)).is_zero());
  for (const auto& [x, hx] : h) EXPECT_EQ(hx + h.at(d.module().neg(x)), QSeries(hx.truncation()));
}

TEST(PsiK, Coefficients) {
  EXPECT_EQ(a_k_coefficient(4, 0), make_rational(-1, 9));
  EXPECT_EQ(a_k_coefficient(6, 0), make_rational(1, 3));
  EXPECT_EQ(a_k_coefficient(4, 1), 0);
  EXPECT_EQ(a_k_coefficient(4, 2), -6);
  EXPECT_THROW(a_k_coefficient(1, 1), InvalidInput);
}

TEST(PsiK, SupportWindowIsJacobi) {
  for (std::int64_t k : {4, 6, 8}) {
    const auto psi = psi_k(k, 8);
    EXPECT_TRUE(check_jacobi_constraints(psi, k, a2()).passed()) << k;
    const auto h = theta_decomposition(psi, a2());
    for (const auto& [x, hx] : h) EXPECT_EQ(hx, h.at(DiscriminantForm(a2()).module().neg(x)));
  }
}

TEST(PsiK, LiteralWindowFailsWithWitness) {
  const auto r = check_jacobi_constraints(psi_k(4, 8, PsiWindow::literal), 4, a2());
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.witness.empty());
}

TEST(PsiK, WrongWeightParityFails) {
  const auto r = check_jacobi_constraints(psi_k(4, 6), 5, a2());
  EXPECT_FALSE(r.parity);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Lattice, EnumerationMatchesBoxScan) {
  for (const char* text : {"2", "2 1; 1 2", "2 0; 0 4", "4 1 0; 1 2 1; 0 1 6", "2 -1 0 0; -1 2 -1 -1; 0 -1 2 0; 0 -1 0 2"}) {
    const auto f = HalfIntegralMatrix::parse(text);
    for (const auto& b : {Rational(0), make_rational(1, 3), Rational(2), make_rational(9, 2)})
      EXPECT_EQ(sorted(lattice_points(f, b)), sorted(lattice_points_box(f, b))) << text << " " << to_string(b);
    const std::vector<std::int64_t> x(f.size(), 1);
    EXPECT_EQ(sorted(lattice_points(f, Rational(3), &x)), sorted(lattice_points_box(f, Rational(3), &x))) << text;
  }
}

TEST(ThetaFx, DecomposesToDelta) {
  const DiscriminantForm d(a2());
  for (std::size_t i = 0; i < d.module().order(); ++i) {
    const Element x = d.module().element(i);
    std::vector<std::int64_t> r;
    for (const auto& v : d.representative(x)) r.push_back(v.get_si());
    const auto h = theta_decomposition(theta_F_x(a2(), r, Rational(6)), a2());
    for (const auto& [y, hy] : h) {
      if (y == x) {
        EXPECT_EQ(hy.coefficients().size(), 1u);
        EXPECT_EQ(hy.coefficient(Rational(0)), 1);
      } else {
        EXPECT_TRUE(hy.is_zero());
      }
    }
  }
}

TEST(Transform, ThetaSWithMultiplier) {
  const auto theta = jacobi_theta(Rational(20));
  const TransformSpec spec{{{make_rational(1, 2)}}, make_rational(1, 2), Multiplier::theta};
  for (const char* word : {"S", "ST", "TST"}) {
    const auto r = numeric_transform_check(theta, word, spec, Complex(0.1, 1.1), {Complex(0.3, 0.1)}, 1e-8);
    EXPECT_TRUE(r.passed) << word << " " << r.error;
  }
  TransformSpec bare = spec;
  bare.multiplier = Multiplier::none;
  EXPECT_FALSE(numeric_transform_check(theta, "S", bare, Complex(0.1, 1.1), {Complex(0.3, 0.1)}, 1e-8).passed);
  EXPECT_THROW(numeric_transform_check(jacobi_theta(Rational(1)), "S", spec, Complex(0.1, 1.1), {Complex(0.3, 0.1)}, 1e-8),
               InsufficientTruncation);
}

TEST(Transform, ThetaSumUnderT) {
  // theta_{F,0} + theta_{F,e} + theta_{F,-e} has q-exponents in (1/3)Z, so T fails and T^3 holds.
  const DiscriminantForm d(a2());
  FourierJacobiSeries sum(2, 1, Rational(12));
  for (std::size_t i = 0; i < d.module().order(); ++i) {
    std::vector<std::int64_t> r;
    for (const auto& v : d.representative(d.module().element(i))) r.push_back(v.get_si());
    sum += theta_F_x(a2(), r, Rational(12));
  }
  const TransformSpec spec{{{Rational(1), make_rational(1, 2)}, {make_rational(1, 2), Rational(1)}}, Rational(1), Multiplier::none};
  const std::vector<Complex> z = {Complex(0.2, 0.05), Complex(-0.1, 0.1)};
  EXPECT_FALSE(numeric_transform_check(sum, "T", spec, Complex(0.05, 1.0), z, 1e-8).passed);
  EXPECT_TRUE(numeric_transform_check(sum, "TTT", spec, Complex(0.05, 1.0), z, 1e-8).passed);
}

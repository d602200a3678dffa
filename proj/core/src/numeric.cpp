#include <cmath>
#include <numbers>

#include "weiljac/errors.hpp"
#include "weiljac/qseries.hpp"

namespace weiljac {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex e_of(Complex x) { return std::exp(Complex(0.0, kTwoPi) * x); }

// Magnitude of the top unit band of stored terms, scaled by |q|^truncation.
double tail_estimate(const FourierJacobiSeries& phi, Complex tau, const std::vector<Complex>& z) {
  if (!phi.truncation()) return 0.0;
  const double t = phi.truncation()->get_d();
  double band = 0.0;
  double largest = 0.0;
  for (const auto& [key, c] : phi.coefficients()) {
    double zeta = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i)
      zeta += static_cast<double>(key.second[i]) * z[i].imag() / static_cast<double>(phi.zeta_den());
    const double size = std::abs(c.get_d()) * std::exp(-kTwoPi * zeta);
    largest = std::max(largest, size);
    if (key.first.get_d() > t - 1.0) band += size * std::exp(-kTwoPi * key.first.get_d() * tau.imag());
  }
  return band + largest * std::exp(-kTwoPi * t * tau.imag());
}

struct Mat2 {
  std::int64_t a, b, c, d;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Complex act(Complex tau) const {
    return (static_cast<double>(a) * tau + static_cast<double>(b)) / (static_cast<double>(c) * tau + static_cast<double>(d));
  }
};

}  // namespace

Complex QSeries::evaluate(Complex tau) const {
  Complex s = 0.0;
  for (const auto& [e, c] : coeffs_) s += c.get_d() * e_of(e.get_d() * tau);
  return s;
}

Complex FourierJacobiSeries::evaluate(Complex tau, const std::vector<Complex>& z) const {
  if (z.size() != nvars_) throw InvalidInput("wrong number of elliptic variables");
  Complex s = 0.0;
  for (const auto& [key, c] : coeffs_) {
    Complex arg = key.first.get_d() * tau;
    for (std::size_t i = 0; i < nvars_; ++i)
      arg += static_cast<double>(key.second[i]) * z[i] / static_cast<double>(zeta_den_);
    s += c.get_d() * e_of(arg);
  }
  return s;
}

std::pair<SL2, Complex> metaplectic_word(const std::vector<char>& letters, Complex tau) {
  Mat2 m{1, 0, 0, 1};
  Complex w = 1.0;
  Complex cur = tau;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    Mat2 g{};
    Complex wl = 1.0;
    switch (*it) {
      case 'S':
        g = {0, -1, 1, 0};
        wl = std::sqrt(cur);
        break;
      case 'T':
        g = {1, 1, 0, 1};
        break;
      case 't':
        g = {1, -1, 0, 1};
        break;
      default:
        throw InvalidInput(std::string("unknown letter '") + *it + "' in word");
    }
    w *= wl;
    cur = g.act(cur);
    m = g * m;
  }
  return {SL2{m.a, m.b, m.c, m.d}, w};
}

TransformResult numeric_transform_check(const FourierJacobiSeries& phi, const std::string& word,
                                        const TransformSpec& spec, Complex tau, const std::vector<Complex>& z,
                                        double tol) {
  if (tau.imag() <= 0) throw InvalidInput("tau must lie in the upper half plane");
  if (z.size() != phi.nvars() || spec.index.size() != phi.nvars()) throw InvalidInput("dimension mismatch");
  const Rational two_k = 2 * spec.weight;
  if (!is_integer(two_k)) throw InvalidInput("weight must be half-integral");

  std::vector<char> letters;
  for (char ch : word)
    if (ch != ' ' && ch != ',') letters.push_back(ch);
  const auto [a, w] = metaplectic_word(letters, tau);
  const Mat2 m{a.a, a.b, a.c, a.d};
  const Complex j = static_cast<double>(a.c) * tau + static_cast<double>(a.d);
  const Complex tau2 = m.act(tau);
  std::vector<Complex> z2(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) z2[i] = z[i] / j;

  const double tail = std::max(tail_estimate(phi, tau, z), tail_estimate(phi, tau2, z2));
  if (tail >= tol / 10) throw InsufficientTruncation("numeric transformation check", tail);

  Complex fz = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t k = 0; k < z.size(); ++k) fz += spec.index[i][k].get_d() * z[i] * z[k];

  TransformResult res;
  res.matrix = a;
  res.lhs = phi.evaluate(tau2, z2) * std::pow(w, -static_cast<int>(two_k.get_num().get_si())) *
            e_of(-static_cast<double>(a.c) * fz / j);
  Complex mult = 1.0;
  if (spec.multiplier == Multiplier::theta) {
    const QSeries eta = dedekind_eta(Rational(40));
    const Complex eps = eta.evaluate(tau2) / (w * eta.evaluate(tau));
    mult = eps * eps * eps;
  }
  res.rhs = mult * phi.evaluate(tau, z);
  res.error = std::abs(res.lhs - res.rhs);
  res.passed = res.error < tol;
  return res;
}

}  // namespace weiljac

#include "weiljac/rational.hpp"

#include <limits>

#include "weiljac/errors.hpp"

namespace weiljac {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

Rational mod1(const Rational& x) {
  Rational r = x - Rational(floor_of(x));
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t\n\r");
  auto last = text.find_last_not_of(" \t\n\r");
  if (first == std::string_view::npos) throw InvalidInput("empty rational");
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw InvalidInput("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t()))
    throw InvalidInput("integer " + x.get_str() + " does not fit in 64 bits");
  return x.get_si();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace weiljac

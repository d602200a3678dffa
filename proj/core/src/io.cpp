#include "weiljac/io.hpp"

#include <cmath>

#include "weiljac/errors.hpp"

namespace weiljac::io {
namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational as an integer or \"num/den\" string");
}

double clean(double x) { return std::abs(x) < 1e-15 ? 0.0 : x; }

Json approx(const CycNum& z) {
  const auto c = z.eval_complex();
  return Json::array({clean(c.real()), clean(c.imag())});
}

Json coeff_strings(const CycNum& z) {
  Json out = Json::array();
  for (const auto& c : z.coefficients()) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json to_json(const FiniteQuadraticModule& m) {
  Json gram = Json::array();
  for (const auto& row : m.q_gram()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    gram.push_back(std::move(r));
  }
  return Json{{"orders", m.orders()}, {"q_gram", std::move(gram)}};
}

FiniteQuadraticModule module_from_json(const Json& j) {
  try {
    auto orders = j.at("orders").get<std::vector<std::int64_t>>();
    std::vector<std::vector<Rational>> gram;
    for (const auto& row : j.at("q_gram")) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(rational_from_json(v));
      gram.push_back(std::move(r));
    }
    return FiniteQuadraticModule(std::move(orders), std::move(gram));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed module JSON: ") + e.what());
  }
}

Json to_json(const HalfIntegralMatrix& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < f.size(); ++k) r.push_back(f.two_f(i, k));
    rows.push_back(std::move(r));
  }
  return rows;
}

HalfIntegralMatrix matrix_from_json(const Json& j) {
  try {
    return HalfIntegralMatrix(j.get<std::vector<std::vector<std::int64_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed matrix JSON: ") + e.what());
  }
}

Json to_json(const CycNum& z) { return Json{{"order", z.order()}, {"coeffs", coeff_strings(z)}, {"approx", approx(z)}}; }

CycNum cyc_from_json(const Json& j) {
  try {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return CycNum::from_coefficients(j.at("order").get<std::uint32_t>(), coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed cyclotomic JSON: ") + e.what());
  }
}

Json to_json(const MatrixCyc& a) {
  std::uint32_t order = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) order = lcm_order(order, a(i, k).order());
  Json rows = Json::array(), floats = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json r = Json::array(), fr = Json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const CycNum z = a(i, k).promote(order);
      r.push_back(coeff_strings(z));
      fr.push_back(approx(z));
    }
    rows.push_back(std::move(r));
    floats.push_back(std::move(fr));
  }
  return Json{{"order", order}, {"rows", std::move(rows)}, {"approx", std::move(floats)}};
}

Json to_json(const HalfIntegralMatrix& f, const DimResult& d) {
  Json lambdas = Json::array();
  for (const auto& l : d.lambdas) lambdas.push_back(to_string(l));
  return Json{{"matrix", to_json(f)},
              {"k", d.k},
              {"dim", d.value.get_si()},
              {"dim_x", d.dim_x},
              {"terms", {to_string(d.main_term), to_string(d.s_term), to_string(d.st_term), to_string(d.lambda_term)}},
              {"lambdas", std::move(lambdas)}};
}

Json to_json(const HalfIntegralMatrix& f, const PoincareResult& p) {
  Json ptilde = Json::array(), dims = Json::array();
  for (std::size_t j = 0; j <= 12 && j < p.ptilde.size(); ++j) ptilde.push_back(p.ptilde[j].get_si());
  for (const auto& d : p.dims) dims.push_back(d.get_si());
  return Json{{"matrix", to_json(f)},
              {"ptilde", std::move(ptilde)},
              {"check_pF1", p.rank_identity},
              {"ptilde_at_one", p.ptilde_at_one.get_si()},
              {"degree_ok", p.degree_ok},
              {"recurrence_ok", p.recurrence_ok},
              {"k_max", p.k_max},
              {"dims", std::move(dims)},
              {"unknown_weight", p.unknown_weight},
              {"unknown_dim", p.inferred_unknown ? Json(p.inferred_unknown->get_si()) : Json(nullptr)},
              {"unknown_upper_bound", p.unknown_upper_bound.get_si()}};
}

Json to_json(const FourierJacobiSeries& s) {
  Json rows = Json::array();
  for (const auto& [key, c] : s.coefficients())
    rows.push_back(Json{{"l", to_string(key.first)}, {"r", key.second}, {"c", to_string(c)}});
  return Json{{"zeta_den", s.zeta_den()},
              {"nvars", s.nvars()},
              {"truncation", s.truncation() ? Json(to_string(*s.truncation())) : Json(nullptr)},
              {"rows", std::move(rows)}};
}

FourierJacobiSeries series_from_json(const Json& j) {
  try {
    std::optional<Rational> trunc;
    if (!j.at("truncation").is_null()) trunc = rational_from_json(j.at("truncation"));
    FourierJacobiSeries s(j.at("nvars").get<std::size_t>(), j.at("zeta_den").get<std::int64_t>(), trunc);
    for (const auto& row : j.at("rows"))
      s.add_term(rational_from_json(row.at("l")), row.at("r").get<std::vector<std::int64_t>>(), rational_from_json(row.at("c")));
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const QSeries& s) {
  Json rows = Json::array();
  for (const auto& [e, c] : s.coefficients()) rows.push_back(Json{{"l", to_string(e)}, {"c", to_string(c)}});
  return Json{{"truncation", s.truncation() ? Json(to_string(*s.truncation())) : Json(nullptr)}, {"rows", std::move(rows)}};
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace weiljac::io

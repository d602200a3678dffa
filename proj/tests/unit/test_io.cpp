#include <gtest/gtest.h>

#include "weiljac/errors.hpp"
#include "weiljac/io.hpp"

using namespace weiljac;
using io::Json;

TEST(Io, ModuleRoundTrip) {
  for (const auto& m : {FiniteQuadraticModule::hyperbolic(3), FiniteQuadraticModule::cyclic(8, make_rational(1, 16)),
                        discriminant_module(HalfIntegralMatrix::parse("2 1 0; 1 2 0; 0 0 2"))}) {
    const Json j = io::to_json(m);
    EXPECT_EQ(io::module_from_json(j), m);
    EXPECT_EQ(io::canonical(io::to_json(io::module_from_json(Json::parse(j.dump())))), io::canonical(j));
  }
}

TEST(Io, MatrixRoundTrip) {
  const auto f = HalfIntegralMatrix::parse("4 2 0; 2 6 1; 0 1 4");
  EXPECT_EQ(io::to_json(f), Json::parse("[[4,2,0],[2,6,1],[0,1,4]]"));
  EXPECT_EQ(io::matrix_from_json(io::to_json(f)), f);
  EXPECT_THROW(io::matrix_from_json(Json::parse("[[1,0],[0,2]]")), InvalidInput);
}

TEST(Io, CycNumRoundTrip) {
  const CycNum z = CycNum(make_rational(3, 7)) + CycNum(-2L) * CycNum::root_of_unity(1, 5);
  const Json j = io::to_json(z);
  EXPECT_EQ(io::cyc_from_json(j), z);
  EXPECT_EQ(j.at("approx").size(), 2u);
  const Json i = io::to_json(CycNum::root_of_unity(1, 4));
  EXPECT_EQ(i.at("approx")[0].get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(i.at("approx")[1].get<double>(), 1.0);
}

TEST(Io, SeriesRoundTrip) {
  for (const auto& s : {jacobi_theta(Rational(5)), psi9(Rational(3)), psi_k(4, 3)}) {
    const Json j = io::to_json(s);
    EXPECT_EQ(io::series_from_json(j), s);
  }
  FourierJacobiSeries exact(1, 1, std::nullopt);
  exact.add_term(Rational(2), {1}, make_rational(-1, 2));
  EXPECT_TRUE(io::to_json(exact).at("truncation").is_null());
  EXPECT_EQ(io::series_from_json(io::to_json(exact)), exact);
}

TEST(Io, CanonicalFormSortsKeys) {
  const Json a = Json::parse(R"({"b": 1, "a": [1, {"d": 2, "c": 3}]})");
  const Json b = Json::parse(R"({"a":[1,{"c":3,"d":2}],"b":1})");
  EXPECT_EQ(io::canonical(a), io::canonical(b));
  EXPECT_EQ(io::canonical(a), R"({"a":[1,{"c":3,"d":2}],"b":1})");
}

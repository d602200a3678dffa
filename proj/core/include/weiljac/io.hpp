#pragma once

#include <string>

#include <json.hpp>

#include "weiljac/cyclotomic.hpp"
#include "weiljac/dims.hpp"
#include "weiljac/fqm.hpp"
#include "weiljac/gram.hpp"
#include "weiljac/linalg.hpp"
#include "weiljac/qseries.hpp"

namespace weiljac::io {

using Json = nlohmann::json;

/// {"orders": [...], "q_gram": [["1/3", ...], ...]}
Json to_json(const FiniteQuadraticModule& m);
FiniteQuadraticModule module_from_json(const Json& j);

/// 2F as an integer array of rows.
Json to_json(const HalfIntegralMatrix& f);
HalfIntegralMatrix matrix_from_json(const Json& j);

/// {"order": N, "coeffs": [...], "approx": [re, im]} in the power basis of Q(zeta_N).
Json to_json(const CycNum& z);
CycNum cyc_from_json(const Json& j);

/// {"order": N, "rows": [[coeffs, ...], ...], "approx": [[[re, im], ...], ...]}
/// with all entries promoted to a common order.
Json to_json(const MatrixCyc& a);

Json to_json(const HalfIntegralMatrix& f, const DimResult& d);
Json to_json(const HalfIntegralMatrix& f, const PoincareResult& p);

/// {"zeta_den": d, "truncation": "t" | null, "rows": [{"l", "r", "c"}, ...]}
Json to_json(const FourierJacobiSeries& s);
FourierJacobiSeries series_from_json(const Json& j);
Json to_json(const QSeries& s);

/// Sorted keys, no whitespace; the form hashed for cache keys.
std::string canonical(const Json& j);

}  // namespace weiljac::io

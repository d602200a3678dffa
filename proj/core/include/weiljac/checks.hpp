#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weiljac/fqm.hpp"
#include "weiljac/gram.hpp"

namespace weiljac::checks {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool passed() const;
};

/// Primes with a printed Hilbert-Poincare polynomial for binary F.
const std::vector<std::int64_t>& tabulated_primes();
/// Coefficients s_0..s_12 of ptilde_F for det(2F) = p.
const std::vector<std::int64_t>& tabulated_ptilde(std::int64_t p);

/// Seeded random positive definite 2F with n <= 4 and det(2F) <= 150.
std::vector<HalfIntegralMatrix> milgram_corpus(std::size_t count = 25, std::uint64_t seed = 0x5eed2024);
/// Nondegenerate modules with |M| <= 50.
std::vector<FiniteQuadraticModule> relations_corpus();
/// Witt-zero prime-power modules of orders 4, 9, 16, 25, 49.
std::vector<std::pair<std::string, FiniteQuadraticModule>> nrs_corpus();
std::vector<std::pair<FiniteQuadraticModule, FiniteQuadraticModule>> tensor_pairs();

/// Acceptance criterion by number, 1..12.
CheckLine acceptance(int id);
std::vector<CheckLine> acceptance_all();

/// milgram | relations | nrs | table1 | qseries | all. Throws InvalidInput for other names.
CheckReport run_suite(std::string_view name);
const std::vector<std::string>& suite_names();

}  // namespace weiljac::checks

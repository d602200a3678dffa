#include "weiljac_cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "weiljac/checks.hpp"
#include "weiljac/dims.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/io.hpp"
#include "weiljac/qseries.hpp"
#include "weiljac/weil.hpp"
#include "weiljac_cli/cache.hpp"

#ifndef WEILJAC_VERSION
#define WEILJAC_VERSION "dev"
#endif

namespace weiljac::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct ModuleArgs {
  std::string orders, qgram, matrix;
};

void add_module_options(CLI::App* cmd, ModuleArgs& a) {
  cmd->add_option("--orders", a.orders, "generator orders, e.g. \"2 4\"");
  cmd->add_option("--qgram", a.qgram, "Q-Gram rows separated by ';', e.g. \"1/4 0; 0 1/8\"");
  cmd->add_option("--matrix", a.matrix, "2F for the discriminant module, e.g. \"2 1; 1 2\"");
}

// Parsed input plus its canonical description for cache keys.
struct ModuleInput {
  FiniteQuadraticModule module;
  std::optional<HalfIntegralMatrix> matrix;
  Json description;
};

ModuleInput read_module(const ModuleArgs& a) {
  const bool explicit_module = !a.orders.empty() || !a.qgram.empty();
  if (explicit_module == !a.matrix.empty())
    throw UsageError("give either --orders with --qgram, or --matrix");
  if (!a.matrix.empty()) {
    HalfIntegralMatrix f = HalfIntegralMatrix::parse(a.matrix);
    FiniteQuadraticModule m = discriminant_module(f);
    Json d{{"matrix", io::to_json(f)}};
    return {std::move(m), std::move(f), std::move(d)};
  }
  if (a.orders.empty() || a.qgram.empty()) throw UsageError("--orders and --qgram go together");
  std::vector<std::int64_t> orders;
  for (const auto& t : split(a.orders, " ,")) {
    try {
      orders.push_back(std::stoll(t));
    } catch (const std::exception&) {
      throw UsageError("bad order '" + t + "'");
    }
  }
  std::vector<std::vector<Rational>> gram;
  for (const auto& row : split(a.qgram, ";")) {
    std::vector<Rational> r;
    for (const auto& t : split(row, " ,")) r.push_back(parse_rational(t));
    gram.push_back(std::move(r));
  }
  FiniteQuadraticModule m(std::move(orders), std::move(gram));
  Json d{{"module", io::to_json(m)}};
  return {std::move(m), std::nullopt, std::move(d)};
}

HalfIntegralMatrix read_matrix(const std::string& text) {
  if (text.empty()) throw UsageError("--matrix is required");
  return HalfIntegralMatrix::parse(text);
}

Rational read_rational(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const InvalidInput&) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
}

// ------------------------------------------------------------ commands

double clean(double x) { return std::abs(x) < 1e-15 ? 0.0 : x; }

Json fqm_info(const ModuleInput& in) {
  const auto& m = in.module;
  const GaussSum g = sigma_invariant(m);
  const auto s = g.sigma();
  Json parts = Json::array();
  for (const auto& p : primary_decomposition(m)) parts.push_back(Json{{"prime", p.prime}, {"module", io::to_json(p.module)}});
  Json out{{"module", io::to_json(m)},
           {"order", m.order()},
           {"level", m.level()},
           {"gauss_sum", io::to_json(g.sum)},
           {"sigma", Json::array({clean(s.real()), clean(s.imag())})},
           {"sigma_eighth_root", g.is_unimodular_eighth_root()},
           {"witt_zero", is_witt_zero(m)},
           {"anisotropic", is_anisotropic(m)},
           {"primary_parts", std::move(parts)}};
  if (in.matrix) {
    out["matrix"] = io::to_json(*in.matrix);
    out["matrix_level"] = in.matrix->level();
    out["milgram"] = milgram_check(*in.matrix);
  }
  return out;
}

Json weil_matrices(const ModuleInput& in, const std::string& word, std::size_t bound) {
  const WeilRep w(in.module, bound);
  Json out{{"module", io::to_json(in.module)}};
  if (word.empty()) {
    out["S"] = io::to_json(w.rho_s());
    out["T"] = io::to_json(w.rho_t());
  } else {
    const auto letters = parse_word(word);
    out["word"] = word;
    out["matrix"] = io::to_json(rho_word(w, letters));
  }
  return out;
}

Json weil_invariants(const ModuleInput& in, std::size_t bound) {
  const auto inv = invariants(in.module, bound);
  Json basis = Json::array();
  for (const auto& v : inv.vectors) {
    Json row = Json::array();
    for (const auto& z : v) row.push_back(io::to_json(z));
    basis.push_back(std::move(row));
  }
  return Json{{"module", io::to_json(in.module)}, {"dim", inv.dim()}, {"basis", std::move(basis)}};
}

struct QexpArgs {
  std::string series = "theta";
  std::string trunc = "10";
  std::string window = "support";
  std::string matrix;
  std::string cls;
  std::int64_t k = 4;
};

Json qexp(const QexpArgs& a) {
  const Rational t = read_rational(a.trunc, "truncation");
  if (a.series == "theta") return io::to_json(jacobi_theta(t));
  if (a.series == "theta-product") return io::to_json(jacobi_theta(t, ThetaForm::product));
  if (a.series == "eta") return io::to_json(FourierJacobiSeries::from_q(dedekind_eta(t), 0));
  if (a.series == "psi9") return io::to_json(psi9(t));
  if (a.series == "psi") {
    if (!is_integer(t)) throw UsageError("Psi_k needs an integral truncation");
    const PsiWindow w = a.window == "literal" ? PsiWindow::literal : PsiWindow::support;
    return io::to_json(psi_k(a.k, to_int64(t.get_num()), w));
  }
  if (a.series == "theta-F") {
    const HalfIntegralMatrix f = read_matrix(a.matrix);
    std::vector<std::int64_t> x;
    for (const auto& s : split(a.cls, " ,")) x.push_back(std::stoll(s));
    if (x.empty()) x.assign(f.size(), 0);
    return io::to_json(theta_F_x(f, x, t));
  }
  throw UsageError("unknown series '" + a.series + "'");
}

Json check_report(const checks::CheckReport& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back(Json{{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
  return Json{{"suite", r.suite}, {"passed", r.passed()}, {"lines", std::move(lines)}};
}

// ------------------------------------------------------------ rendering

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_table(const std::string& command, const Json& j, std::ostream& out) {
  if (command == "check") {
    for (const auto& l : j.at("lines"))
      out << (l.at("passed").get<bool>() ? "PASS  " : "FAIL  ") << l.at("name").get<std::string>() << "  "
          << l.at("detail").get<std::string>() << '\n';
    out << (j.at("passed").get<bool>() ? "suite passed" : "suite FAILED") << '\n';
    return;
  }
  if (command == "qexp") {
    out << std::left << std::setw(12) << "l" << std::setw(20) << "r" << "c\n";
    for (const auto& row : j.at("rows"))
      out << std::setw(12) << row.at("l").get<std::string>() << std::setw(20) << row.at("r").dump()
          << row.at("c").get<std::string>() << '\n';
    return;
  }
  for (const auto& [key, v] : j.items()) {
    if (v.is_object() && v.contains("approx") && v.contains("rows")) {
      out << key << " (order " << v.at("order") << "):\n";
      for (const auto& row : v.at("approx")) {
        out << " ";
        for (const auto& z : row) {
          std::ostringstream c;
          c << std::fixed << std::setprecision(4) << z[0].get<double>() << (z[1].get<double>() < 0 ? "-" : "+")
            << std::abs(z[1].get<double>()) << "i";
          out << ' ' << std::setw(18) << c.str();
        }
        out << '\n';
      }
    } else if (v.is_primitive()) {
      out << key << ": " << scalar_text(v) << '\n';
    } else {
      out << key << ": " << v.dump() << '\n';
    }
  }
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const BoundExceeded*>(&e)) return "BoundExceeded";
  if (dynamic_cast<const HypothesisError*>(&e)) return "HypothesisError";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
  if (dynamic_cast<const InsufficientTruncation*>(&e)) return "InsufficientTruncation";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  return "Error";
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Computes through the cache. The returned text is the canonical JSON of the
// result whether it came from the cache or from `compute`.
std::string cached_result(const Config& cfg, const std::string& command, const Json& input,
                          const std::function<Json()>& compute, std::ostream& err, bool& verify_failed) {
  const ResultCache cache(cfg.cache_dir);
  const std::string key = ResultCache::key(command, io::canonical(input), WEILJAC_VERSION);
  std::optional<std::string> hit;
  if (cfg.use_cache) {
    if (auto raw = cache.load(key)) {
      try {
        hit = io::canonical(Json::parse(*raw).at("value"));
      } catch (const std::exception&) {
        hit.reset();  // unreadable entry, recompute
      }
    }
  }
  if (hit && !cfg.verify_cache) return *hit;
  const std::string fresh = io::canonical(Json::parse(io::canonical(compute())));
  if (hit && *hit != fresh) {
    err << "cache entry " << key << " differs from recomputation\n";
    verify_failed = true;
  }
  if (cfg.use_cache && (!hit || verify_failed))
    cache.store(key, io::canonical(Json{{"created_at", timestamp()}, {"command", command}, {"value", Json::parse(fresh)}}));
  return fresh;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Finite quadratic modules, Weil representations and Jacobi-form dimensions", "weiljac"};
  app.set_version_flag("--version", WEILJAC_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  FlagValues flags;
  std::string format, cache_dir, config_file;
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--no-cache", flags.no_cache, "compute without reading or writing the cache");
  app.add_flag("--verify-cache", flags.verify_cache, "recompute and compare against any cached entry");
  app.add_option("--cache-dir", cache_dir, "cache directory (env WEILJAC_CACHE_DIR)");
  app.add_option("--config", config_file, "config file of key = value lines (env WEILJAC_CONFIG)");

  ModuleArgs info_args, mat_args, inv_args;
  auto* info = app.add_subcommand("fqm-info", "invariants of a finite quadratic module");
  add_module_options(info, info_args);

  auto* mats = app.add_subcommand("weil-matrices", "rho(S), rho(T) or the matrix of a word");
  add_module_options(mats, mat_args);
  std::string word;
  std::size_t bound = kDefaultMatrixBound;
  mats->add_option("--word", word, "word in S, T, t = T^-1");
  mats->add_option("--bound", bound, "largest module order to tabulate");

  auto* inv = app.add_subcommand("weil-invariants", "basis of the invariants of the Weil representation");
  add_module_options(inv, inv_args);
  std::size_t inv_bound = kDefaultMatrixBound;
  inv->add_option("--bound", inv_bound, "largest module order");

  std::string dim_matrix;
  std::int64_t k = 0;
  auto* dim = app.add_subcommand("dim", "dim J_{k,F} for k >= n/2 + 2");
  dim->add_option("--matrix", dim_matrix, "2F, rows separated by ';'")->required();
  dim->add_option("--k", k, "weight")->required();

  std::string hp_matrix;
  std::int64_t k_max = 24;
  auto* hp = app.add_subcommand("poincare", "Hilbert-Poincare numerator ptilde_F");
  hp->add_option("--matrix", hp_matrix, "2F, rows separated by ';'")->required();
  hp->add_option("--kmax", k_max, "largest weight computed");

  QexpArgs q;
  auto* qx = app.add_subcommand("qexp", "truncated q-expansions");
  qx->add_option("--series", q.series, "theta | theta-product | eta | psi9 | psi | theta-F")
      ->check(CLI::IsMember({"theta", "theta-product", "eta", "psi9", "psi", "theta-F"}));
  qx->add_option("--trunc", q.trunc, "largest q-exponent kept");
  qx->add_option("--k", q.k, "weight for psi");
  qx->add_option("--window", q.window, "psi summation window")->check(CLI::IsMember({"support", "literal"}));
  qx->add_option("--matrix", q.matrix, "2F for theta-F");
  qx->add_option("--class", q.cls, "representative x for theta-F");

  std::string suite;
  auto* chk = app.add_subcommand("check", "run an acceptance battery");
  chk->add_option("suite", suite, "milgram | relations | nrs | table1 | qseries | all")
      ->required()
      ->check(CLI::IsMember(checks::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!format.empty()) flags.format = format;
  if (!cache_dir.empty()) flags.cache_dir = cache_dir;
  if (!config_file.empty()) flags.config_file = config_file;

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const Config cfg = resolve_config(flags, env);
    bool verify_failed = false;
    std::string text;
    bool ok = true;

    if (command == "check") {
      const auto report = checks::run_suite(suite);
      ok = report.passed();
      text = io::canonical(check_report(report));
    } else if (command == "fqm-info" || command == "weil-matrices" || command == "weil-invariants") {
      const ModuleArgs& a = command == "fqm-info" ? info_args : command == "weil-matrices" ? mat_args : inv_args;
      const ModuleInput in = read_module(a);
      Json input = in.description;
      std::function<Json()> compute;
      if (command == "fqm-info") {
        compute = [&] { return fqm_info(in); };
      } else if (command == "weil-matrices") {
        input["word"] = word;
        compute = [&] { return weil_matrices(in, word, bound); };
      } else {
        compute = [&] { return weil_invariants(in, inv_bound); };
      }
      text = cached_result(cfg, command, input, compute, err, verify_failed);
    } else if (command == "dim") {
      const HalfIntegralMatrix f = read_matrix(dim_matrix);
      text = cached_result(cfg, command, Json{{"matrix", io::to_json(f)}, {"k", k}},
                           [&] { return io::to_json(f, theorem1_dim(f, k)); }, err, verify_failed);
    } else if (command == "poincare") {
      const HalfIntegralMatrix f = read_matrix(hp_matrix);
      text = cached_result(cfg, command, Json{{"matrix", io::to_json(f)}, {"k_max", k_max}},
                           [&] { return io::to_json(f, hilbert_poincare(f, k_max)); }, err, verify_failed);
    } else if (command == "qexp") {
      Json input{{"series", q.series}, {"trunc", to_string(read_rational(q.trunc, "truncation"))}};
      if (q.series == "psi") input["k"] = q.k, input["window"] = q.window;
      if (q.series == "theta-F") input["matrix"] = io::to_json(read_matrix(q.matrix)), input["class"] = q.cls;
      text = cached_result(cfg, command, input, [&] { return qexp(q); }, err, verify_failed);
    }

    const Json result = Json::parse(text);
    if (cfg.format == "table")
      render_table(command, result, out);
    else
      out << result.dump(2) << '\n';
    if (verify_failed || !ok) return kExitDomain;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << Json{{"error", {{"type", error_type(e)}, {"message", e.what()}}}}.dump() << '\n';
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  std::vector<const char*> argv;
  argv.push_back("weiljac");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err, env);
}

}  // namespace weiljac::cli

#include "weiljac_cli/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "weiljac/errors.hpp"

namespace weiljac::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw InvalidInput("invalid boolean for " + key + ": '" + v + "'");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput(path + ":" + std::to_string(no) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply(Config& c, const std::string& key, const std::string& value) {
  if (key == "format")
    c.format = value;
  else if (key == "cache_dir")
    c.cache_dir = value;
  else if (key == "no_cache")
    c.use_cache = !parse_bool(key, value);
  else if (key == "verify_cache")
    c.verify_cache = parse_bool(key, value);
  else
    throw InvalidInput("unknown config key '" + key + "'");
}

}  // namespace

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

std::string default_cache_dir(const EnvLookup& env) {
  if (auto x = env("XDG_CACHE_HOME"); x && !x->empty()) return *x + "/weiljac";
  if (auto h = env("HOME"); h && !h->empty()) return *h + "/.cache/weiljac";
  return (std::filesystem::temp_directory_path() / "weiljac-cache").string();
}

Config resolve_config(const FlagValues& flags, const EnvLookup& env) {
  Config c;
  c.cache_dir = default_cache_dir(env);

  std::optional<std::string> file = flags.config_file;
  if (!file) file = env("WEILJAC_CONFIG");
  if (file)
    for (const auto& [k, v] : read_config_file(*file)) apply(c, k, v);

  for (const char* key : {"format", "cache_dir", "no_cache", "verify_cache"}) {
    std::string name = "WEILJAC_";
    for (const char* p = key; *p; ++p) name += static_cast<char>(std::toupper(static_cast<unsigned char>(*p)));
    if (auto v = env(name)) apply(c, key, *v);
  }

  if (flags.format) c.format = *flags.format;
  if (flags.cache_dir) c.cache_dir = *flags.cache_dir;
  if (flags.no_cache) c.use_cache = false;
  if (flags.verify_cache) c.verify_cache = true;

  if (c.format != "json" && c.format != "table") throw InvalidInput("format must be json or table, got '" + c.format + "'");
  return c;
}

}  // namespace weiljac::cli

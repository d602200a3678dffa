#pragma once

#include <functional>
#include <optional>
#include <string>

namespace weiljac::cli {

struct Config {
  std::string format = "json";
  std::string cache_dir;
  bool use_cache = true;
  bool verify_cache = false;
};

/// Values given on the command line; unset means "not given".
struct FlagValues {
  std::optional<std::string> format;
  std::optional<std::string> cache_dir;
  std::optional<std::string> config_file;
  bool no_cache = false;
  bool verify_cache = false;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_env();

/// $XDG_CACHE_HOME/weiljac, else $HOME/.cache/weiljac, else a temp directory.
std::string default_cache_dir(const EnvLookup& env);

/// flags > WEILJAC_* environment > config file (key = value lines) > defaults.
/// Throws InvalidInput for unreadable files, unknown keys, or bad values.
Config resolve_config(const FlagValues& flags, const EnvLookup& env);

}  // namespace weiljac::cli

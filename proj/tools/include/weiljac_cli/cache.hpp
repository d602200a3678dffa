#pragma once

#include <optional>
#include <string>

namespace weiljac::cli {

std::string sha256_hex(const std::string& data);

/// Content-addressed store of output JSON, one file per key.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  /// Hash of (command, canonical input, artifact version).
  static std::string key(const std::string& command, const std::string& canonical_input, const std::string& version);

  std::optional<std::string> load(const std::string& key) const;
  /// Write to a temporary file, then rename over the final path.
  void store(const std::string& key, const std::string& value) const;
  std::string path_for(const std::string& key) const;

 private:
  std::string dir_;
};

}  // namespace weiljac::cli

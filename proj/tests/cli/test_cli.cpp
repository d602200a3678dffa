#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "weiljac/errors.hpp"
#include "weiljac_cli/app.hpp"
#include "weiljac_cli/cache.hpp"
#include "weiljac_cli/config.hpp"

using namespace weiljac::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

EnvLookup fake_env(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const std::string& name) -> std::optional<std::string> {
    auto it = vars.find(name);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  };
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("weiljac-cli-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun run_with(std::vector<std::string> args, std::map<std::string, std::string> env = {}) {
    env.emplace("WEILJAC_CACHE_DIR", cache_dir());
    std::ostringstream out, err;
    const int code = run(args, out, err, fake_env(env));
    return {code, out.str(), err.str()};
  }

  std::string cache_dir() const { return (dir_ / "cache").string(); }

  std::size_t cache_files() const {
    if (!fs::exists(cache_dir())) return 0;
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(cache_dir())) {
      EXPECT_EQ(e.path().extension(), ".json") << e.path();
      ++n;
    }
    return n;
  }

  fs::path dir_;
};

const std::vector<std::vector<std::string>>& golden_commands() {
  static const std::vector<std::vector<std::string>> cmds = {
      {"dim", "--matrix", "2 1; 1 2", "--k", "10"},
      {"poincare", "--matrix", "2 1; 1 2"},
      {"fqm-info", "--matrix", "2 1; 1 2"},
      {"fqm-info", "--orders", "3 3", "--qgram", "0 1/3; 1/3 0"},
      {"weil-matrices", "--orders", "2", "--qgram", "1/4"},
      {"weil-matrices", "--matrix", "2 1; 1 2", "--word", "STS"},
      {"weil-invariants", "--orders", "3 3", "--qgram", "0 1/3; 1/3 0"},
      {"qexp", "--series", "theta", "--trunc", "5"},
      {"qexp", "--series", "psi9", "--trunc", "3"},
      {"qexp", "--series", "psi", "--k", "4", "--trunc", "3"},
  };
  return cmds;
}

}  // namespace

TEST_F(CliTest, DimExample) {
  const auto r = run_with({"dim", "--matrix", "2 1; 1 2", "--k", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("dim"), 1);
  EXPECT_EQ(j.at("dim_x"), 2);
  EXPECT_EQ(j.at("k"), 4);
}

TEST_F(CliTest, PoincareExample) {
  const auto r = run_with({"poincare", "--matrix", "2 1; 1 2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("ptilde").size(), 13u);
  EXPECT_EQ(j.at("unknown_weight"), 2);
}

TEST_F(CliTest, FqmInfoExample) {
  const auto r = run_with({"fqm-info", "--orders", "3", "--qgram", "1/3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("witt_zero"), false);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_with({"dim", "--matrix", "2 1; 1 2"}).code, kExitUsage);
  EXPECT_EQ(run_with({}).code, kExitUsage);
  EXPECT_EQ(run_with({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_with({"check", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(run_with({"dim", "--matrix", "2 1; 1 2", "--k", "4", "--format", "xml"}).code, kExitUsage);

  const auto bad = run_with({"dim", "--matrix", "2 3; 3 2", "--k", "4"});
  EXPECT_EQ(bad.code, kExitDomain);
  const json e = json::parse(bad.err);
  EXPECT_TRUE(e.at("error").contains("type"));
  EXPECT_TRUE(e.at("error").contains("message"));
  EXPECT_TRUE(bad.out.empty());

  EXPECT_EQ(run_with({"dim", "--matrix", "2 1; 1 2", "--k", "2"}).code, kExitDomain);
  EXPECT_EQ(run_with({"check", "nrs"}).code, kExitOk);
}

TEST_F(CliTest, GlobalOptionsAfterSubcommand) {
  const auto r = run_with({"dim", "--matrix", "2 1; 1 2", "--k", "4", "--no-cache", "--format", "table"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("dim"), std::string::npos);
}

TEST_F(CliTest, CacheIsTransparent) {
  for (const auto& cmd : golden_commands()) {
    auto with = [&](std::vector<std::string> extra) {
      auto args = cmd;
      args.insert(args.end(), extra.begin(), extra.end());
      return run_with(args);
    };
    const auto uncached = with({"--no-cache"});
    ASSERT_EQ(uncached.code, kExitOk) << uncached.err;
    const std::size_t before = cache_files();
    const auto miss = with({});
    EXPECT_EQ(cache_files(), before + 1);
    const auto hit = with({});
    const auto verified = with({"--verify-cache"});
    EXPECT_EQ(miss.out, uncached.out) << cmd[0];
    EXPECT_EQ(hit.out, uncached.out) << cmd[0];
    EXPECT_EQ(verified.out, uncached.out) << cmd[0];
    EXPECT_EQ(verified.code, kExitOk) << verified.err;
  }
  EXPECT_EQ(cache_files(), golden_commands().size());
}

TEST_F(CliTest, VerifyCacheDetectsTampering) {
  const std::vector<std::string> cmd = {"dim", "--matrix", "2 1; 1 2", "--k", "10"};
  ASSERT_EQ(run_with(cmd).code, kExitOk);
  ASSERT_EQ(cache_files(), 1u);
  const auto path = fs::directory_iterator(cache_dir())->path();
  json entry = json::parse(std::ifstream(path));
  EXPECT_EQ(entry.at("command"), "dim");
  EXPECT_TRUE(entry.contains("created_at"));
  entry["value"]["dim"] = 99;
  std::ofstream(path) << entry.dump();

  const auto tampered = run_with(cmd);
  EXPECT_EQ(json::parse(tampered.out).at("dim"), 99);
  auto args = cmd;
  args.push_back("--verify-cache");
  const auto verified = run_with(args);
  EXPECT_EQ(verified.code, kExitDomain);
  EXPECT_EQ(json::parse(verified.out).at("dim"), 2);
  EXPECT_EQ(json::parse(run_with(cmd).out).at("dim"), 2);
}

TEST_F(CliTest, CorruptEntryIsRecomputed) {
  const std::vector<std::string> cmd = {"dim", "--matrix", "2 1; 1 2", "--k", "4"};
  ASSERT_EQ(run_with(cmd).code, kExitOk);
  const auto path = fs::directory_iterator(cache_dir())->path();
  std::ofstream(path) << "{not json";
  const auto r = run_with(cmd);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out).at("dim"), 1);
}

TEST_F(CliTest, CacheDirFlagAndNoCache) {
  const std::string other = (dir_ / "other").string();
  ASSERT_EQ(run_with({"dim", "--matrix", "2 1; 1 2", "--k", "6", "--cache-dir", other}).code, kExitOk);
  EXPECT_TRUE(fs::exists(other));
  EXPECT_EQ(cache_files(), 0u);
  ASSERT_EQ(run_with({"dim", "--matrix", "2 1; 1 2", "--k", "6", "--no-cache"}).code, kExitOk);
  EXPECT_EQ(cache_files(), 0u);
}

TEST(ResultCacheTest, KeysAndAtomicStore) {
  const auto dir = fs::temp_directory_path() / "weiljac-cache-unit";
  fs::remove_all(dir);
  const ResultCache cache(dir.string());
  const auto k1 = ResultCache::key("dim", R"({"k":4})", "1");
  EXPECT_EQ(k1.size(), 64u);
  EXPECT_NE(k1, ResultCache::key("dim", R"({"k":4})", "2"));
  EXPECT_NE(k1, ResultCache::key("poincare", R"({"k":4})", "1"));
  EXPECT_FALSE(cache.load(k1).has_value());
  cache.store(k1, "value");
  EXPECT_EQ(cache.load(k1).value(), "value");
  for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().filename().string(), k1 + ".json");
  fs::remove_all(dir);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ConfigTest, DefaultCacheDir) {
  EXPECT_EQ(default_cache_dir(fake_env({{"XDG_CACHE_HOME", "/x"}, {"HOME", "/h"}})), "/x/weiljac");
  EXPECT_EQ(default_cache_dir(fake_env({{"HOME", "/h"}})), "/h/.cache/weiljac");
  EXPECT_FALSE(default_cache_dir(fake_env({})).empty());
}

TEST(ConfigTest, Precedence) {
  const auto file = fs::temp_directory_path() / "weiljac-config-test.conf";
  std::ofstream(file) << "# settings\nformat = table\ncache_dir = /from/file\nno_cache = true\n";

  FlagValues flags;
  flags.config_file = file.string();
  Config c = resolve_config(flags, fake_env({}));
  EXPECT_EQ(c.format, "table");
  EXPECT_EQ(c.cache_dir, "/from/file");
  EXPECT_FALSE(c.use_cache);

  c = resolve_config(flags, fake_env({{"WEILJAC_FORMAT", "json"}, {"WEILJAC_CACHE_DIR", "/from/env"}}));
  EXPECT_EQ(c.format, "json");
  EXPECT_EQ(c.cache_dir, "/from/env");

  flags.format = "table";
  flags.cache_dir = "/from/flag";
  c = resolve_config(flags, fake_env({{"WEILJAC_FORMAT", "json"}, {"WEILJAC_CACHE_DIR", "/from/env"}}));
  EXPECT_EQ(c.format, "table");
  EXPECT_EQ(c.cache_dir, "/from/flag");

  FlagValues via_env;
  c = resolve_config(via_env, fake_env({{"WEILJAC_CONFIG", file.string()}}));
  EXPECT_EQ(c.format, "table");

  std::ofstream(file) << "colour = blue\n";
  EXPECT_THROW(resolve_config(flags, fake_env({})), weiljac::InvalidInput);
  fs::remove(file);

  FlagValues missing;
  missing.config_file = "/nonexistent/weiljac.conf";
  EXPECT_THROW(resolve_config(missing, fake_env({})), weiljac::InvalidInput);

  const Config d = resolve_config(FlagValues{}, fake_env({{"HOME", "/h"}}));
  EXPECT_EQ(d.format, "json");
  EXPECT_TRUE(d.use_cache);
  EXPECT_FALSE(d.verify_cache);
  EXPECT_EQ(d.cache_dir, "/h/.cache/weiljac");
}

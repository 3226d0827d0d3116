#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "serre/cli.hpp"

using namespace serre;
using namespace serre::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("serre_" + tag + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CliTest, EnumerateLevelThree) {
  const auto r = run({"enumerate-integral-j", "--q", "3"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"(["-32768", "-1728", "0", "8000"])"));
}

TEST(CliTest, EnumerateAll) {
  const auto r = run({"enumerate-integral-j", "--q", "all", "--workers", "2"});
  ASSERT_EQ(r.code, kSuccess);
  Json expected = Json::array();
  for (const auto& j : expected_integral_j()) expected.push_back(j.to_string());
  EXPECT_EQ(Json::parse(r.out), expected);
}

TEST(CliTest, InvalidInputExits) {
  EXPECT_EQ(run({"enumerate-integral-j", "--q", "11"}).code, kInvalidInput);
  EXPECT_EQ(run({"enumerate-integral-j"}).code, kInvalidInput);
  EXPECT_EQ(run({}).code, kInvalidInput);
  EXPECT_EQ(run({"no-such-command"}).code, kInvalidInput);
  EXPECT_EQ(run({"classify", "--curve", "0,0,0,0,0", "--p", "7"}).code, kInvalidInput);
  EXPECT_EQ(run({"classify", "--curve", "0,0,0,1", "--p", "7"}).code, kInvalidInput);
  EXPECT_EQ(run({"classify", "--curve", "0,-1,0,-208,1412", "--p", "4"}).code, kInvalidInput);
  EXPECT_EQ(run({"qcurve-bound", "--disc", "4"}).code, kInvalidInput);
  EXPECT_EQ(run({"kprops", "--p", "3"}).code, kInvalidInput);
  EXPECT_EQ(run({"residue-scan", "--p", "13", "--d", "1"}).code, kInvalidInput);
  EXPECT_EQ(run({"--output", "xml", "kprops", "--p", "11"}).code, kInvalidInput);
}

TEST(CliTest, ClassifyE1AtFortyOne) {
  const auto r = run({"classify", "--curve", "0,-1,0,-208,1412", "--p", "41", "--ell-max", "10000"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "proven_surjective");
  EXPECT_EQ(j["p"], 41);
  for (const char* key : {"borel", "split_normalizer", "nonsplit_normalizer", "exceptional"}) {
    EXPECT_TRUE(j["classes"][key].is_number_unsigned()) << key;
  }
}

TEST(CliTest, ClassifyCmGuardAndUndetermined) {
  EXPECT_EQ(run({"classify", "--curve", "0,0,0,0,1", "--p", "7"}).code, kCmGuard);
  EXPECT_EQ(run({"classify", "--curve", "0,0,0,-1,0", "--p", "41"}).code, kCmGuard);
  const auto r = run({"classify", "--curve", "0,-1,1,-10,-20", "--p", "5", "--ell-max", "2000"});
  EXPECT_EQ(r.code, kIncomplete);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "undetermined");
  EXPECT_TRUE(j["classes"]["borel"].is_null());
}

TEST(CliTest, QcurveBoundKpropsResidueScan) {
  auto r = run({"qcurve-bound", "--disc", "-1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["bound"], 8320);
  EXPECT_EQ(j["D"], -1);
  EXPECT_EQ(j["disc"], -4);

  r = run({"qcurve-bound", "--disc", "3"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(Json::parse(r.out)["bound"], 33562624);

  r = run({"kprops", "--p", "11"});
  ASSERT_EQ(r.code, kSuccess);
  j = Json::parse(r.out);
  EXPECT_TRUE(j["case2"].get<bool>());
  std::vector<std::uint64_t> ks;
  for (const auto& s : j["solutions"])
    if (s["case"] == "case2") ks.push_back(s["k"].get<std::uint64_t>());
  EXPECT_EQ(ks, (std::vector<std::uint64_t>{3, 8}));

  r = run({"residue-scan", "--p", "31", "--d", "1"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(Json::parse(r.out)["violations"], Json::parse("[5, 7]"));

  r = run({"residue-scan", "--p", "31", "--d", "-3", "--field", "5", "--ramified", "7"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  j = Json::parse(r.out);
  EXPECT_EQ(j["violations"], Json::array());
  EXPECT_EQ(j["m_bound"], 5);
}

TEST(CliTest, VerifyTheoremEdges) {
  auto r = run({"verify-theorem", "--p-max", "40", "--ell-max", "1000"});
  EXPECT_EQ(r.code, kIncomplete);
  EXPECT_NE(r.err.find("empty scan"), std::string::npos);
  EXPECT_EQ(Json::parse(r.out)["verdict"], "not_confirmed");

  r = run({"verify-theorem", "--ell-max", "10", "--p-max", "60"});
  EXPECT_EQ(r.code, kIncomplete);
  const auto j = Json::parse(r.out);
  EXPECT_FALSE(j["undetermined"].empty());
  EXPECT_NE(r.err.find("undetermined"), std::string::npos);

  r = run({"verify-theorem", "--ell-max", "3000", "--p-max", "100", "--workers", "4"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(Json::parse(r.out)["verdict"], "confirmed");
}

TEST(CliTest, Deterministic) {
  const std::vector<std::string> args{"classify", "--curve", "0,0,0,-54,216", "--p", "97", "--ell-max", "5000"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> verify{"verify-theorem", "--ell-max", "2000", "--p-max", "80"};
  EXPECT_EQ(run(verify).out, run(verify).out);
}

TEST(CliTest, TextOutput) {
  const auto r = run({"--output", "text", "qcurve-bound", "--disc", "5"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "D: 5\ndisc: 5\nf: 2\nh: 1\nh_plus: 1\nbound: 33562624\n");
}

TEST(ConfigTest, ParseAndPrecedence) {
  const Config c = parse_config_text("# comment\nell_max = 5000\np_max=97\n\noutput = text\nworkers = 3\n");
  EXPECT_EQ(c.ell_max, 5000U);
  EXPECT_EQ(c.p_max, 97U);
  EXPECT_EQ(c.output, OutputFormat::Text);
  EXPECT_EQ(c.workers, 3U);
  EXPECT_THROW(parse_config_text("colour = red"), InvalidInput);
  EXPECT_THROW(parse_config_text("ell_max = lots"), InvalidInput);
  EXPECT_THROW(parse_config_text("ell_max"), InvalidInput);

  TempDir dir("config");
  const auto file = dir.path() / "serre.conf";
  std::ofstream(file) << "output = text\n";
  // The file selects text; the flag wins.
  auto r = run({"--config", file.string(), "qcurve-bound", "--disc", "-1"});
  EXPECT_EQ(r.out.rfind("D: -1", 0), 0U);
  r = run({"--config", file.string(), "--output", "json", "qcurve-bound", "--disc", "-1"});
  EXPECT_EQ(Json::parse(r.out)["bound"], 8320);
  EXPECT_EQ(run({"--config", (dir.path() / "missing.conf").string(), "kprops", "--p", "7"}).code, kInvalidInput);
}

TEST(CacheTest, PathAndRoundTrip) {
  TempDir dir("cache_rt");
  const auto e = curve_e1();
  const auto path = cache_path(dir.path(), e);
  EXPECT_EQ(path.filename(), "curve_0_m1_0_m208_1412.traces");
  const auto table = elliptic::trace_table(e, 2000);
  cache_store(e, path, table);
  EXPECT_EQ(cache_load(e, path), table);
  const std::string text = read_file(path);
  EXPECT_EQ(text.substr(0, text.find('\n')), "# curve 0,-1,0,-208,1412");
}

TEST(CacheTest, MismatchIsRejected) {
  TempDir dir("cache_mm");
  const auto e1 = curve_e1();
  const auto twist = elliptic::quadratic_twist(e1, exact::Integer(-1));
  const auto path = cache_path(dir.path(), e1);
  cache_store(e1, path, elliptic::trace_table(e1, 500));
  EXPECT_THROW(cache_load(twist, path), CacheMismatch);

  std::ofstream(dir.path() / "bad_order") << "# curve 0,-1,0,-208,1412\n7,1\n5,2\n";
  EXPECT_THROW(cache_load(e1, dir.path() / "bad_order"), CacheMismatch);
  std::ofstream(dir.path() / "bad_record") << "# curve 0,-1,0,-208,1412\n5;2\n";
  EXPECT_THROW(cache_load(e1, dir.path() / "bad_record"), CacheMismatch);

  // A cache file under the right name but with an edited header fails the CLI.
  std::string text = read_file(path);
  text.replace(0, text.find('\n'), "# curve 0,0,0,-54,216");
  std::ofstream(path, std::ios::trunc) << text;
  const auto r = run({"--cache-dir", dir.path().string(), "classify", "--curve", "0,-1,0,-208,1412", "--p", "41",
                      "--ell-max", "500"});
  EXPECT_EQ(r.code, kInvalidInput);
}

TEST(CacheTest, ExtensionAppendsInOrder) {
  TempDir dir("cache_ext");
  const auto e = curve_e2();
  const auto path = cache_path(dir.path(), e);
  const auto small = cached_trace_table(e, path, 1000);
  EXPECT_EQ(small, elliptic::trace_table(e, 1000));
  const std::string before = read_file(path);

  const auto large = cached_trace_table(e, path, 4000, 3);
  EXPECT_EQ(large, elliptic::trace_table(e, 4000));
  const std::string after = read_file(path);
  EXPECT_EQ(after.substr(0, before.size()), before);
  EXPECT_EQ(cache_load(e, path), large);

  // A smaller request is served from the file without rewriting it.
  EXPECT_EQ(cached_trace_table(e, path, 300), elliptic::trace_table(e, 300));
  EXPECT_EQ(read_file(path), after);
}

TEST(CacheTest, WarmAndColdVerifyAgree) {
  TempDir dir("cache_warm");
  const std::vector<std::string> args{"--cache-dir", dir.path().string(), "verify-theorem", "--ell-max", "3000",
                                      "--p-max", "120"};
  const auto cold = run(args);
  const auto warm = run(args);
  const auto none = run({"verify-theorem", "--ell-max", "3000", "--p-max", "120"});
  EXPECT_EQ(cold.code, kSuccess);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, none.out);
  EXPECT_TRUE(std::filesystem::exists(cache_path(dir.path(), curve_e1())));
  EXPECT_TRUE(std::filesystem::exists(cache_path(dir.path(), curve_e2())));
}

TEST(CacheTest, EnvironmentSelectsCacheDir) {
  TempDir dir("cache_env");
  ::setenv(kCacheDirEnv, dir.path().c_str(), 1);
  const auto r = run({"classify", "--curve", "0,0,0,-54,216", "--p", "43", "--ell-max", "800"});
  ::unsetenv(kCacheDirEnv);
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_TRUE(std::filesystem::exists(cache_path(dir.path(), curve_e2())));
}

#include <filesystem>
#include <fstream>
#include <cstdlib>
#include <unistd.h>

#include "doctest.h"
#include "dtvol/cache.hpp"
#include "dtvol/format.hpp"
#include "dtvol/volume.hpp"
#include "support.hpp"

using namespace dtvol;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("dtvol_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(2.029883212819307) == "2.02988321281931");
  CHECK(format_number(-1e-20) == "-1e-20");
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("1,0") == cplx{1.0, 0.0});
  CHECK(parse_complex("-0.5,2e-3") == cplx{-0.5, 2e-3});
  CHECK(parse_complex("2.5") == cplx{2.5, 0.0});
  CHECK_THROWS_AS(parse_complex("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_complex("1,"), InvalidArgument);
  CHECK_THROWS_AS(parse_complex(""), InvalidArgument);
}

TEST_CASE("JSON output") {
  ojson j;
  j["k"] = 2;
  j["alpha"] = 0.1;
  j["z"] = complex_json({3.0, -0.0});
  CHECK(dump_json(j) == R"({"k":2,"alpha":0.1,"z":[3,0]})");
  const std::string pretty = dump_json(j, 2);
  CHECK(pretty.find("\"z\": [3, 0]") != std::string::npos);
  CHECK(pretty.find('\n') != std::string::npos);
}

TEST_CASE("volume result JSON keeps field order") {
  const VolumeResult r = cone_volume(KnotParam::make(2, -1), 1.0);
  const std::string s = dump_json(to_json(r));
  const auto pos = [&](const char* key) { return s.find(std::string("\"") + key + "\""); };
  CHECK(pos("k") < pos("n"));
  CHECK(pos("n") < pos("alpha"));
  CHECK(pos("alpha") < pos("alpha_K"));
  CHECK(pos("alpha_K") < pos("volume"));
  CHECK(pos("volume") < pos("quad_error"));
  CHECK(pos("quad_error") < pos("candidates"));
  CHECK(pos("candidates") < pos("diagnostics"));
  const auto back = nlohmann::json::parse(s);
  CHECK(back["volume"].get<double>() == doctest::Approx(r.volume).epsilon(1e-14));
}

TEST_CASE("CSV output") {
  const KnotParam knot = KnotParam::make(2, -1);
  const std::vector<double> a{0.5, 1.0, 2.5};
  const std::string csv = curve_csv(volume_curve(knot, a));
  CHECK(csv.rfind("alpha,volume,quad_error\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  const Branch br = geometric_branch(knot, 0.5);
  const std::string bcsv = branch_csv(br);
  CHECK(bcsv.rfind("omega,re_z,im_z,re_L,im_L,logabsL\n", 0) == 0);
  CHECK(std::count(bcsv.begin(), bcsv.end(), '\n') == static_cast<long>(br.points.size() + 1));
}

TEST_CASE("cache key") {
  const nlohmann::json p1 = {{"k", 2}, {"n", -1}};
  const nlohmann::json p2 = {{"n", -1}, {"k", 2}};
  CHECK(ResultCache::key("volume", p1, "1.0.0") == ResultCache::key("volume", p2, "1.0.0"));
  CHECK(ResultCache::key("volume", p1, "1.0.0") != ResultCache::key("volume", p1, "1.0.1"));
  CHECK(ResultCache::key("volume", p1, "1.0.0") != ResultCache::key("curve", p1, "1.0.0"));
  CHECK(ResultCache::key("volume", p1, "1.0.0").size() == 16);
}

TEST_CASE("cache round trip") {
  const fs::path dir = scratch_dir("cache");
  ResultCache cache(dir);
  RunRecord rec;
  rec.command = "volume";
  rec.params = {{"k", 4}, {"n", 1}, {"alpha", 0.5}};
  rec.version = kVersion;
  rec.stdout_text = "{\"volume\":1}\n";
  rec.files["out.csv"] = "alpha,volume,quad_error\n";
  rec.wall_time = 0.25;
  CHECK_FALSE(cache.load(rec.command, rec.params, rec.version).has_value());
  CHECK(cache.store(rec));
  const auto got = cache.load(rec.command, rec.params, rec.version);
  REQUIRE(got.has_value());
  CHECK(got->stdout_text == rec.stdout_text);
  CHECK(got->files == rec.files);
  CHECK(got->wall_time == 0.25);
  CHECK_FALSE(cache.load(rec.command, rec.params, "0.9").has_value());
  // no temporary files are left behind
  int entries = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    CHECK(e.path().extension() == ".json");
    ++entries;
  }
  CHECK(entries == 1);
  fs::remove_all(dir);
}

TEST_CASE("corrupt cache entries are ignored") {
  const fs::path dir = scratch_dir("corrupt");
  ResultCache cache(dir);
  const nlohmann::json params = {{"k", 3}};
  fs::create_directories(dir);
  std::ofstream(cache.path_for(ResultCache::key("riley", params, kVersion))) << "{not json";
  CHECK_FALSE(cache.load("riley", params, kVersion).has_value());
  fs::remove_all(dir);
}

TEST_CASE("default cache directory honours DTVOL_CACHE_DIR") {
  ::setenv("DTVOL_CACHE_DIR", "/tmp/dtvol-env-test", 1);
  CHECK(ResultCache::default_dir() == fs::path("/tmp/dtvol-env-test"));
  ::unsetenv("DTVOL_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(ResultCache::default_dir() == fs::path("/tmp/xdg/dtvol"));
}

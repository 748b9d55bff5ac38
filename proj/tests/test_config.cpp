#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "vibronic/runner.hpp"

using namespace vibronic;

TEST_CASE("ini grammar") {
  const std::string text =
      "# comment\n"
      "[params]\n"
      "epsilon_1 = 7.39  # trailing comment\n"
      "coupling_j = 0.1\n"
      "\n"
      "[basis]\n"
      "cutoff = 9\n";
  const Ini ini = Ini::parse(text);
  CHECK(ini.get("params", "epsilon_1") == "7.39");
  CHECK(ini.get("basis", "cutoff") == "9");

  CHECK_THROWS_AS(Ini::parse("key_outside = 1\n"), ConfigError);
  CHECK_THROWS_AS(Ini::parse("[params]\nnot a pair\n"), ConfigError);
  CHECK_THROWS_AS(Ini::parse("[params]\na = 1\na = 2\n"), ConfigError);
  CHECK_THROWS_AS(Ini::parse("[Bad Section\n"), ConfigError);
}

TEST_CASE("strict parsing rejects unknown keys and bad values") {
  CHECK_THROWS_AS(RunConfig::from_ini(Ini::parse("[params]\nepszzz = 1\n")), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_ini(Ini::parse("[params]\nomega = -2\n")), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_ini(Ini::parse("[params]\nepsilon_1 = abc\n")), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_ini(Ini::parse("[basis]\ncutoff = -3\n")), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_ini(Ini::parse("[initial]\nkind = weird\n")), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_ini(Ini::parse("[unknown_section]\nx = 1\n")), ConfigError);
}

TEST_CASE("config round trip is the identity") {
  const std::string text =
      "[params]\n"
      "epsilon_1 = 7.39\n"
      "coupling_j = 0.5\n"
      "[basis]\n"
      "cutoff = 11\n"
      "states = 1,1p\n"
      "[initial]\n"
      "kind = rotated\n"
      "direction = perpendicular\n"
      "gamma = 1.9222\n"
      "phi = 3.14159\n"
      "[run]\n"
      "workers = 2\n";
  const RunConfig a = RunConfig::from_ini(Ini::parse(text));
  const Ini ser = a.to_ini();
  const RunConfig b = RunConfig::from_ini(ser);
  CHECK(b.to_ini().serialize() == ser.serialize());
  CHECK(b.params.epsilon_1 == 7.39);
  CHECK(b.basis.cutoff == 11);
  CHECK(b.initial.rotated.gamma == 1.9222);
}

TEST_CASE("lambda shorthand fixes the displacement") {
  const RunConfig cfg = RunConfig::from_ini(Ini::parse("[params]\nlambda = 3.695\n"));
  CHECK(cfg.params.lambda() == doctest::Approx(3.695).epsilon(1e-14));
}

TEST_CASE("default parameters follow the stepwise-transfer calibration") {
  RunConfig cfg;
  CHECK(cfg.params.lambda() == doctest::Approx(3.695).epsilon(1e-12));
  CHECK(2.0 * cfg.params.lambda() == doctest::Approx(7.39).epsilon(1e-12));
  CHECK(cfg.basis.cutoff == 17);
}

TEST_CASE("validate suite is clean") {
  std::ostringstream os;
  CHECK(run_validate(true, os) == 0);
  CHECK(os.str().find("FAIL") == std::string::npos);
}

TEST_CASE("scenario outputs are reproducible byte for byte") {
  namespace fs = std::filesystem;
  const fs::path dir1 = fs::temp_directory_path() / "vibronic_test_scn1";
  const fs::path dir2 = fs::temp_directory_path() / "vibronic_test_scn2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  {
    OutputWriter w1(dir1);
    run_scenario("elementary", w1, 1);
    OutputWriter w2(dir2);
    run_scenario("elementary", w2, 2);
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(dir1)) {
    const auto name = entry.path().filename();
    if (name == "manifest.txt") {
      // identical except the timestamp line
      std::string a = slurp(entry.path()), b = slurp(dir2 / name);
      const auto strip = [](std::string s) {
        const size_t pos = s.find("timestamp = ");
        const size_t end = s.find('\n', pos);
        return s.erase(pos, end - pos);
      };
      CHECK(strip(a) == strip(b));
    } else {
      CHECK(slurp(entry.path()) == slurp(dir2 / name));
    }
    ++compared;
  }
  CHECK(compared >= 3);  // populations, state dump, trajectory, manifest
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("unknown scenario is a config error") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "vibronic_test_scn_bad";
  fs::remove_all(dir);
  OutputWriter w(dir);
  CHECK_THROWS_AS(run_scenario("nonexistent", w, 1), ConfigError);
  fs::remove_all(dir);
}

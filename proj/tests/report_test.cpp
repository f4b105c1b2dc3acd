#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ssnm/config.hpp"
#include "ssnm/golden.hpp"
#include "ssnm/numeric.hpp"
#include "ssnm/report.hpp"
#include "test_support.hpp"

using namespace ssnm;

namespace {

std::string golden_path(const std::string& preset, int eps) {
  return std::string(SSNM_DATA_DIR) + "/golden/" + preset + "_eps" + (eps > 0 ? "+1" : "-1") + ".golden";
}

GoldenFile golden_text(const std::string& text) {
  std::istringstream in(text);
  return parse_golden(in);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(SSNM_BIN) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(SSNM_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

const char* kFlatConfig = R"J({
  "epsilon": 1, "dimension": 3,
  "metric_diagonal": ["1", "1", "1"],
  "p_vector": ["0", "0", "0"],
  "declared_symbols": []
})J";

}  // namespace

TEST_CASE("preset and epsilon validation") {
  CHECK_THROWS_AS(preset_config("sol4", 1), ConfigError);
  CHECK_THROWS_AS(preset_config("sol3-a", 0), ConfigError);
  CHECK(parse_epsilon("+1") == 1);
  CHECK(parse_epsilon("-1") == -1);
  CHECK_THROWS_AS(parse_epsilon("2"), ConfigError);
}

TEST_CASE("json config parsing") {
  auto c = config_from_json_text(kFlatConfig);
  CHECK(c.preset == "custom");
  CHECK(c.dimension == 3);
  CHECK_FALSE(c.numeric.enabled);
  CHECK_THROWS_AS(config_from_json_text("{"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text("[]"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"J({"epsilon": 1})J"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"J({"epsilon": 1, "dimension": 3,
      "metric_diagonal": ["1","1"], "p_vector": ["0","0","0"], "declared_symbols": []})J"),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"J({"epsilon": 1, "dimension": 12,
      "metric_diagonal": [], "p_vector": [], "declared_symbols": []})J"),
                  ConfigError);
  auto n = config_from_json_text(R"J({"epsilon": -1, "dimension": 3,
      "metric_diagonal": ["exp(2*x3)","exp(-2*x3)","-1"], "p_vector": ["0","0","a"],
      "declared_symbols": ["a"], "numeric_check": {"samples": 4, "seed": 9}, "alphas": ["1/2"]})J");
  CHECK(n.numeric.enabled);
  CHECK(n.numeric.samples == 4);
  CHECK(n.numeric.seed == 9);
  CHECK(build_problem(n).alphas == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("bad expressions and degenerate metrics become config errors") {
  auto c = config_from_json_text(kFlatConfig);
  c.p_vector[2] = "q";
  CHECK_THROWS_AS(build_problem(c), ConfigError);
  c = config_from_json_text(kFlatConfig);
  c.metric_diagonal[1] = "0";
  CHECK_THROWS_AS(build_problem(c), ConfigError);
  c = config_from_json_text(kFlatConfig);
  c.declared_symbols = {"a"};
  c.metric_diagonal[0] = "1 + a";  // not a unit in the ring
  CHECK_THROWS_AS(build_problem(c), ConfigError);
}

TEST_CASE("golden parsing") {
  auto g = golden_text(
      "# preset: sol3-a\n# epsilon: -1\n\nR 1212 -1   # trailing\n"
      "R.R 132312 2 | suspect | computed: 0\nkappa - -2\n");
  CHECK(g.preset == "sol3-a");
  CHECK(g.epsilon == -1);
  REQUIRE(g.entries.size() == 3);
  CHECK(g.entries[0].tensor == "R");
  CHECK(g.entries[0].indices == "1212");
  CHECK(g.entries[0].expr == "-1");
  CHECK(g.entries[1].suspect);
  CHECK(g.entries[1].line == 5);
  CHECK_THROWS_AS(golden_text("R 1212\n"), GoldenFormatError);
  CHECK_THROWS_AS(load_golden("/nonexistent/file.golden"), GoldenFormatError);
}

TEST_CASE("golden verification rejects bad entries") {
  const auto& p = testing_support::preset("sol3-a", 1);
  CHECK_THROWS_AS(verify_golden(p, golden_text("X 1212 1\n")), GoldenFormatError);
  CHECK_THROWS_AS(verify_golden(p, golden_text("R 12 1\n")), GoldenFormatError);
  CHECK_THROWS_AS(verify_golden(p, golden_text("R 1212 1+\n")), GoldenFormatError);
  CHECK_THROWS_AS(verify_golden(p, golden_text("# preset: sol3-b\nR 1212 1\n")), GoldenFormatError);
  CHECK_THROWS_AS(verify_golden(p, golden_text("# epsilon: -1\nR 1212 1\n")), GoldenFormatError);
}

TEST_CASE("corrupted golden entry is reported") {
  const auto& p = testing_support::preset("sol3-a", 1);
  auto s = verify_golden(p, golden_text("R 1212 2\nR 1313 -exp(2*x3)\n"));
  CHECK(s.total == 2);
  CHECK(s.matched == 1);
  REQUIRE(s.diffs.size() == 1);
  CHECK(s.hard_diffs() == 1);
  CHECK(s.diffs[0].computed == "1");
  CHECK(s.diffs[0].expected == "2");
}

TEST_CASE("shipped golden tables verify") {
  for (const auto& name : testing_support::preset_names())
    for (int eps : {1, -1}) {
      CAPTURE(name);
      CAPTURE(eps);
      auto s = verify_golden(testing_support::preset(name, eps), load_golden(golden_path(name, eps)));
      CHECK(s.hard_diffs() == 0);
      CHECK(s.clean_match_ratio() >= 0.95);
    }
}

TEST_CASE("json report round trips byte for byte") {
  for (const auto& name : testing_support::preset_names()) {
    std::string a = report_json(testing_support::preset(name, -1), nullptr, nullptr).dump(2);
    CHECK(Json::parse(a).dump(2) == a);
  }
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : testing_support::preset_names()) {
    auto c = preset_config(name, 1);
    Pipeline x = compute(c);
    Pipeline y = compute(c);
    CHECK(report_text(x, nullptr, nullptr) == report_text(y, nullptr, nullptr));
    CHECK(report_json(x, nullptr, nullptr).dump() == report_json(y, nullptr, nullptr).dump());
  }
}

TEST_CASE("case a with a vanishing function matches the Levi-Civita preset") {
  for (int eps : {1, -1}) {
    auto c = preset_config("sol3-a", eps);
    c.preset = "custom";
    c.p_vector = {"0", "0", "0*a"};
    Pipeline p = compute(c);
    const auto& lc = testing_support::preset("sol3-lc", eps);
    for (const auto& name : tensor_names(lc)) {
      CAPTURE(name);
      const Tensor* t = find_tensor(p, name);
      REQUIRE(t);
      CHECK(*t == *find_tensor(lc, name));
    }
    REQUIRE(p.classification.relations.size() == lc.classification.relations.size());
    for (std::size_t i = 0; i < p.classification.relations.size(); ++i)
      CHECK(relation_text(p.classification.relations[i]) == relation_text(lc.classification.relations[i]));
  }
}

TEST_CASE("flat metric gives exact zeros in both pipelines") {
  Pipeline p = compute(config_from_json_text(kFlatConfig));
  for (const auto& name : tensor_names(p)) {
    if (name == "g") continue;
    CAPTURE(name);
    CHECK(find_tensor(p, name)->is_zero());
  }
  auto s = numeric_crosscheck(p, 5, 3);
  CHECK(s.passed);
  CHECK(s.max_relative_error == 0.0);
}

TEST_CASE("numeric cross-check passes on every preset") {
  for (const auto& name : testing_support::preset_names())
    for (int eps : {1, -1}) {
      auto s = numeric_crosscheck(testing_support::preset(name, eps), 10, 7);
      CAPTURE(name);
      CAPTURE(s.worst_component);
      CHECK(s.points_tested == 10);
      CHECK(s.max_relative_error <= 1e-5);
      CHECK(s.passed);
    }
}

TEST_CASE("sample points are reproducible and in range") {
  auto a = sample_points(10, 42);
  CHECK(a == sample_points(10, 42));
  CHECK(a != sample_points(10, 43));
  for (double x : a) CHECK((x >= -1.0 && x <= 1.0));
  PolyFunction f{{0, -1, 0, 1}};
  CHECK(f.derivative(2.0, 0) == doctest::Approx(6.0));
  CHECK(f.derivative(2.0, 1) == doctest::Approx(11.0));
  CHECK(f.derivative(2.0, 3) == doctest::Approx(6.0));
  CHECK(f.derivative(2.0, 4) == 0.0);
}

TEST_CASE("no invariant violations on presets") {
  for (const auto& name : testing_support::preset_names())
    for (int eps : {1, -1}) CHECK(invariant_violations(testing_support::preset(name, eps)).empty());
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("run --preset sol3-a --epsilon=-1") == 0);
  CHECK(run_cli("run --preset sol3-b --epsilon=+1 --output json") == 0);
  CHECK(run_cli("run --preset nope") == 1);
  CHECK(run_cli("run --preset sol3-a --epsilon=3") == 1);
  CHECK(run_cli("frobnicate") == 1);
  CHECK(run_cli("run --preset sol3-a") == 1);
  CHECK(run_cli("verify --preset sol3-a --epsilon=+1 --golden " + golden_path("sol3-a", 1)) == 0);
  std::string bad = temp_file("corrupt.golden", "# preset: sol3-a\nR 1212 2\n");
  CHECK(run_cli("verify --preset sol3-a --epsilon=+1 --golden " + bad) == 2);
  std::string malformed = temp_file("malformed.golden", "R 1212\n");
  CHECK(run_cli("verify --preset sol3-a --epsilon=+1 --golden " + malformed) == 1);
  CHECK(run_cli("check --preset sol3-lc --epsilon=-1 --samples 3 --seed 5") == 0);
  std::string cfg = temp_file("flat.json", kFlatConfig);
  CHECK(run_cli("run --custom " + cfg) == 0);
  std::string broken = temp_file("broken.json", "{\"epsilon\": 1}");
  CHECK(run_cli("run --custom " + broken) == 1);
}

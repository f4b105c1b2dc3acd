// Command-line front end: run, verify, check.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ssnm/report.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kGoldenDiff = 2, kInvariant = 3 };

struct Common {
  std::string preset;
  std::string epsilon;
  std::string custom;
  std::string output = "text";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--preset", c.preset, "sol3-a | sol3-b | sol3-lc");
  cmd->add_option("--epsilon", c.epsilon, "+1 or -1 (sign of g33)")->allow_extra_args(false);
  cmd->add_option("--custom", c.custom, "JSON config file");
  cmd->add_option("--output", c.output, "text | json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "write the report to FILE");
}

ssnm::RunConfig resolve(const Common& c) {
  if (!c.custom.empty()) {
    if (!c.preset.empty()) throw ssnm::ConfigError("--preset and --custom are exclusive");
    ssnm::RunConfig cfg = ssnm::load_config_file(c.custom);
    if (!c.epsilon.empty()) cfg.epsilon = ssnm::parse_epsilon(c.epsilon);
    cfg.output_format = c.output;
    return cfg;
  }
  if (c.preset.empty()) throw ssnm::ConfigError("one of --preset or --custom is required");
  if (c.epsilon.empty()) throw ssnm::ConfigError("--epsilon is required with --preset");
  ssnm::RunConfig cfg = ssnm::preset_config(c.preset, ssnm::parse_epsilon(c.epsilon));
  cfg.output_format = c.output;
  return cfg;
}

void emit(const Common& c, const ssnm::Pipeline& p, const ssnm::GoldenSummary* golden,
          const ssnm::NumericSummary* numeric) {
  std::string body = c.output == "json" ? ssnm::report_json(p, golden, numeric).dump(2) + "\n"
                                        : ssnm::report_text(p, golden, numeric);
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ssnm::ConfigError("cannot write '" + c.out + "'");
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature classification for a diagonal metric with a semi-symmetric non-metric connection"};
  app.require_subcommand(1);

  Common run_opts, verify_opts, check_opts;
  std::string golden_path;
  int samples = 10;
  unsigned long long seed = 1;

  auto* run = app.add_subcommand("run", "compute the full classification report");
  add_common(run, run_opts);
  auto* verify = app.add_subcommand("verify", "compare against a golden component table");
  add_common(verify, verify_opts);
  verify->add_option("--golden", golden_path, "golden file")->required();
  auto* check = app.add_subcommand("check", "finite-difference cross-check");
  add_common(check, check_opts);
  check->add_option("--samples", samples, "number of sample points")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (run->parsed()) {
      ssnm::Pipeline p = ssnm::compute(resolve(run_opts));
      const ssnm::NumericSummary* numeric = nullptr;
      ssnm::NumericSummary ns;
      if (p.config.numeric.enabled) {
        ns = ssnm::numeric_crosscheck(p, p.config.numeric.samples, p.config.numeric.seed);
        numeric = &ns;
      }
      emit(run_opts, p, nullptr, numeric);
      auto bad = ssnm::invariant_violations(p);
      for (const auto& b : bad) std::cerr << "invariant violated: " << b << "\n";
      if (!bad.empty() || (numeric && !numeric->passed)) return kInvariant;
      return kOk;
    }
    if (verify->parsed()) {
      ssnm::Pipeline p = ssnm::compute(resolve(verify_opts));
      ssnm::GoldenSummary g = ssnm::verify_golden(p, ssnm::load_golden(golden_path));
      emit(verify_opts, p, &g, nullptr);
      return g.hard_diffs() > 0 ? kGoldenDiff : kOk;
    }
    if (check->parsed()) {
      ssnm::Pipeline p = ssnm::compute(resolve(check_opts));
      ssnm::NumericSummary ns = ssnm::numeric_crosscheck(p, samples, seed);
      emit(check_opts, p, nullptr, &ns);
      return ns.passed ? kOk : kInvariant;
    }
  } catch (const ssnm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ssnm::GoldenFormatError& e) {
    std::cerr << "golden file error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ssnm::DegenerateMetric& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssnm/metric.hpp"
#include "ssnm/parse.hpp"

namespace ssnm {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NumericCheckConfig {
  bool enabled = false;
  int samples = 10;
  unsigned long long seed = 1;
};

struct RunConfig {
  std::string preset = "sol3-a";  // sol3-a | sol3-b | sol3-lc | custom
  int epsilon = 1;
  int dimension = 3;
  std::vector<std::string> metric_diagonal;
  std::vector<std::string> p_vector;
  std::vector<std::string> declared_symbols;
  std::string output_format = "text";
  NumericCheckConfig numeric;
  // Polynomial test functions for the numeric check, coefficients from t^0 up.
  std::map<std::string, std::vector<double>> test_functions;
  // Extra constant α rows for the quasi-Einstein table.
  std::vector<std::string> alphas;
};

// Defaults a(t) = 1 + t^2, b(t) = t^3 - t.
std::map<std::string, std::vector<double>> default_test_functions();

RunConfig preset_config(const std::string& preset, int epsilon);
int parse_epsilon(const std::string& text);

// JSON document; see README for the schema.
RunConfig load_config_file(const std::string& path);
RunConfig config_from_json_text(const std::string& text);
void validate(const RunConfig& c);

struct Problem {
  SymbolSet symbols;
  MetricData metric;
  std::vector<Expr> P;
  std::vector<Rational> alphas;
};

Problem build_problem(const RunConfig& c);

}  // namespace ssnm

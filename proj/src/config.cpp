#include "ssnm/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ssnm {

std::map<std::string, std::vector<double>> default_test_functions() {
  return {{"a", {1.0, 0.0, 1.0}}, {"b", {0.0, -1.0, 0.0, 1.0}}};
}

int parse_epsilon(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw ConfigError("epsilon must be +1 or -1, got '" + text + "'");
}

RunConfig preset_config(const std::string& preset, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw ConfigError("epsilon must be +1 or -1");
  RunConfig c;
  c.preset = preset;
  c.epsilon = epsilon;
  c.dimension = 3;
  c.metric_diagonal = {"exp(2*x3)", "exp(-2*x3)", epsilon > 0 ? "1" : "-1"};
  c.test_functions = default_test_functions();
  c.alphas = {"2"};
  if (preset == "sol3-a") {
    c.p_vector = {"0", "0", "a"};
    c.declared_symbols = {"a"};
  } else if (preset == "sol3-b") {
    c.p_vector = {"b", "0", "0"};
    c.declared_symbols = {"b"};
  } else if (preset == "sol3-lc") {
    c.p_vector = {"0", "0", "0"};
  } else {
    throw ConfigError("unknown preset '" + preset + "'");
  }
  return c;
}

void validate(const RunConfig& c) {
  if (c.epsilon != 1 && c.epsilon != -1) throw ConfigError("epsilon must be +1 or -1");
  if (c.dimension < 3 || c.dimension > 9) throw ConfigError("dimension must be in 3..9");
  if (static_cast<int>(c.metric_diagonal.size()) != c.dimension)
    throw ConfigError("metric_diagonal must have 'dimension' entries");
  if (static_cast<int>(c.p_vector.size()) != c.dimension)
    throw ConfigError("p_vector must have 'dimension' entries");
  if (c.output_format != "text" && c.output_format != "json")
    throw ConfigError("output must be text or json");
  if (c.numeric.samples < 1) throw ConfigError("samples must be positive");
}

namespace {

template <typename T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("config is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

RunConfig config_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  c.preset = "custom";
  c.epsilon = required<int>(j, "epsilon");
  c.dimension = required<int>(j, "dimension");
  c.metric_diagonal = required<std::vector<std::string>>(j, "metric_diagonal");
  c.p_vector = required<std::vector<std::string>>(j, "p_vector");
  c.declared_symbols = required<std::vector<std::string>>(j, "declared_symbols");
  if (j.contains("output")) c.output_format = required<std::string>(j, "output");
  c.test_functions = default_test_functions();
  if (j.contains("test_functions"))
    for (const auto& [k, v] : required<std::map<std::string, std::vector<double>>>(j, "test_functions"))
      c.test_functions[k] = v;
  if (j.contains("alphas")) c.alphas = required<std::vector<std::string>>(j, "alphas");
  if (j.contains("numeric_check")) {
    const auto& n = j.at("numeric_check");
    if (!n.is_object()) throw ConfigError("numeric_check must be an object");
    c.numeric.enabled = true;
    c.numeric.samples = required<int>(n, "samples");
    c.numeric.seed = required<unsigned long long>(n, "seed");
  }
  validate(c);
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json_text(ss.str());
}

Problem build_problem(const RunConfig& c) {
  validate(c);
  Problem p;
  for (const auto& s : c.declared_symbols) {
    if (s.empty() || s == "exp" || s == "x3") throw ConfigError("bad symbol name '" + s + "'");
    p.symbols.insert(s);
  }
  auto parse = [&](const std::string& field, const std::string& text) {
    try {
      return parse_expr(text, p.symbols);
    } catch (const ParseError& e) {
      throw ConfigError(field + ": " + e.what());
    }
  };
  std::vector<Expr> diag;
  for (std::size_t i = 0; i < c.metric_diagonal.size(); ++i)
    diag.push_back(parse("metric_diagonal[" + std::to_string(i) + "]", c.metric_diagonal[i]));
  for (std::size_t i = 0; i < c.p_vector.size(); ++i)
    p.P.push_back(parse("p_vector[" + std::to_string(i) + "]", c.p_vector[i]));
  try {
    p.metric = make_metric(std::move(diag));
    ring_inverse(p.metric);
  } catch (const DegenerateMetric& e) {
    throw ConfigError(e.what());
  }
  for (const auto& a : c.alphas) {
    try {
      p.alphas.push_back(Rational::parse(a));
    } catch (const std::exception& e) {
      throw ConfigError("alphas: " + std::string(e.what()));
    }
  }
  return p;
}

}  // namespace ssnm

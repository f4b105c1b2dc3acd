#include "ssnm/golden.hpp"

#include <fstream>
#include <sstream>

#include "ssnm/parse.hpp"
#include "ssnm/report.hpp"

namespace ssnm {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto bar = s.find('|', start);
    out.push_back(strip(s.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
    if (bar == std::string::npos) return out;
    start = bar + 1;
  }
}

[[noreturn]] void bad(int line, const std::string& msg) {
  throw GoldenFormatError("golden line " + std::to_string(line) + ": " + msg);
}

}  // namespace

GoldenFile parse_golden(std::istream& in) {
  GoldenFile g;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) {
      std::string comment = strip(raw.substr(hash + 1));
      if (comment.rfind("preset:", 0) == 0) g.preset = strip(comment.substr(7));
      if (comment.rfind("epsilon:", 0) == 0) {
        std::string e = strip(comment.substr(8));
        if (e == "+1" || e == "1") {
          g.epsilon = 1;
        } else if (e == "-1") {
          g.epsilon = -1;
        } else {
          bad(line, "bad epsilon '" + e + "'");
        }
      }
      raw = raw.substr(0, hash);
    }
    std::string body = strip(raw);
    if (body.empty()) continue;
    auto fields = split_fields(body);
    GoldenEntry e;
    e.line = line;
    std::istringstream ss(fields[0]);
    if (!(ss >> e.tensor >> e.indices)) bad(line, "expected 'NAME INDICES EXPR'");
    std::getline(ss, e.expr);
    e.expr = strip(e.expr);
    if (e.expr.empty()) bad(line, "missing expression");
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i] == "suspect") {
        e.suspect = true;
      } else if (!fields[i].empty()) {
        e.note = e.note.empty() ? fields[i] : e.note + " | " + fields[i];
      }
    }
    g.entries.push_back(std::move(e));
  }
  return g;
}

GoldenFile load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GoldenFormatError("cannot open golden file '" + path + "'");
  return parse_golden(in);
}

GoldenSummary verify_golden(const Pipeline& p, const GoldenFile& golden) {
  if (golden.preset && *golden.preset != p.config.preset)
    throw GoldenFormatError("golden file is for preset " + *golden.preset + ", run is " +
                            p.config.preset);
  if (golden.epsilon && *golden.epsilon != p.config.epsilon)
    throw GoldenFormatError("golden file is for the other epsilon branch");
  GoldenSummary s;
  for (const auto& e : golden.entries) {
    Expr computed;
    if (e.tensor == "kappa") {
      if (e.indices != "-") bad(e.line, "kappa takes '-' as its index");
      computed = p.curvatures.kappa;
    } else {
      const Tensor* t = find_tensor(p, e.tensor);
      if (!t) bad(e.line, "unknown tensor '" + e.tensor + "'");
      std::vector<int> idx;
      try {
        idx = parse_index_label(e.indices, t->dim());
        computed = t->get(idx);
      } catch (const std::out_of_range&) {
        bad(e.line, "bad indices '" + e.indices + "' for " + e.tensor);
      }
    }
    Expr expected;
    try {
      expected = parse_expr(e.expr, p.problem.symbols);
    } catch (const ParseError& err) {
      bad(e.line, err.what());
    }
    ++s.total;
    if (e.suspect) ++s.suspect_total;
    if (expected == computed) {
      ++s.matched;
      if (e.suspect) ++s.suspect_matched;
    } else {
      s.diffs.push_back({e, expected.str(), computed.str()});
    }
  }
  return s;
}

}  // namespace ssnm

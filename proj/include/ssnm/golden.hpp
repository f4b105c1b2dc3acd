#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssnm {

struct Pipeline;

class GoldenFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line format:  NAME INDICES EXPR [| suspect | computed: EXPR]
// NAME is Gamma, g, R, Ric, kappa, C, K, W, P, dR, dRic, dC, dK, dW, dP,
// E.F (e.g. R.K) or Q(Z,F) (e.g. Q(Ric,W)). Derivative indices come first.
// INDICES are 1-based digits ("-" for kappa). '#' starts a comment; the
// comments "# preset: X" and "# epsilon: +1|-1" pin the run branch.
struct GoldenEntry {
  int line = 0;
  std::string tensor;
  std::string indices;
  std::string expr;
  bool suspect = false;
  std::string note;
};

struct GoldenFile {
  std::optional<std::string> preset;
  std::optional<int> epsilon;
  std::vector<GoldenEntry> entries;
};

GoldenFile parse_golden(std::istream& in);
GoldenFile load_golden(const std::string& path);

struct GoldenDiff {
  GoldenEntry entry;
  std::string expected;  // canonical form of the golden expression
  std::string computed;
};

struct GoldenSummary {
  int total = 0;
  int matched = 0;
  int suspect_total = 0;
  int suspect_matched = 0;
  std::vector<GoldenDiff> diffs;  // suspect entries included, flagged via entry.suspect

  int hard_diffs() const {
    int n = 0;
    for (const auto& d : diffs)
      if (!d.entry.suspect) ++n;
    return n;
  }
  // Fraction of all entries that match without a suspect annotation.
  double clean_match_ratio() const {
    return total == 0 ? 1.0 : static_cast<double>(matched - suspect_matched) / total;
  }
};

// Throws GoldenFormatError for unknown tensors, bad indices or unparsable
// expressions, and when the pinned preset/epsilon disagree with the run.
GoldenSummary verify_golden(const Pipeline& p, const GoldenFile& golden);

}  // namespace ssnm

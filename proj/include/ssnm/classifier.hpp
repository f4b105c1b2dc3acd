#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssnm/curvature.hpp"
#include "ssnm/linalg.hpp"

namespace ssnm {

struct ProportionalityResult {
  enum class Kind { zero, proportional, independent };
  Kind kind = Kind::independent;
  FracExpr coefficient;  // meaningful when proportional
  bool is_constant = false;
};

const char* kind_name(ProportionalityResult::Kind k);

// E.F = L * Q(Z,F) with one global L; reference component is the first nonzero
// component of QZF.
ProportionalityResult detect_relation(const Tensor& EdotF, const Tensor& QZF);

// All E.F and Q(Z,F) for E, F in {R,C,K,W,P}, Z in {g, Ric}. Keys "R.K", "Q(Ric,W)".
struct ProductSet {
  std::map<std::string, Tensor> dots;
  std::map<std::string, Tensor> tachibanas;
};
ProductSet compute_products(const CurvatureSet& cs, const MetricData& m);

struct RelationEntry {
  std::string E, F, Z;
  ProportionalityResult result;
};
// E.F against Q(g,F) and Q(Ric,F), in the fixed order E, F, then Z = g, Ric.
std::vector<RelationEntry> classify_all_pairs(const ProductSet& products);

// Ric^0 = g, Ric^k = Ric^{k-1} g^{-1} Ric (that is, g J^k with J = g^{-1} Ric).
std::vector<std::vector<std::vector<FracExpr>>> ricci_powers(const Tensor& Ric,
                                                            const MetricData& m, int up_to);

struct EinsteinLevelReport {
  std::optional<int> level;  // 1..4
  // Ric^l + c_1 Ric^{l-1} + ... + c_l g = 0; c_i as listed here.
  std::vector<FracExpr> coefficients;
  // Conventional labels: level 1 -> λ0, level 2 -> λ1 λ2, level 3 -> λ3 λ4 λ5,
  // level 4 -> λ6..λ9.
  std::vector<std::string> labels;
  bool lower_level_inconsistent = false;
};
EinsteinLevelReport einstein_level(const Tensor& Ric, const MetricData& m);

struct QuasiEinsteinCandidate {
  Rational alpha;
  int rank = 0;
  bool eigenvalue = false;  // root of J's minimal polynomial
};
struct QuasiEinsteinReport {
  std::vector<QuasiEinsteinCandidate> candidates;
  std::vector<std::string> nonconstant_roots;  // reported, not rank-tested
  int minimal_rank = 0;
  Rational minimal_alpha;
  bool ricci_simple = false;
  FracExpr simple_alpha;
  std::vector<FracExpr> eta;  // normalized so the first nonzero entry is 1
};
QuasiEinsteinReport quasi_einstein(const Tensor& Ric, const MetricData& m,
                                   const std::vector<Rational>& extra_alphas = {});

struct RoterReport {
  bool reduced = false;
  bool generalized = false;
  // Ric^Ric, g^Ric, g^g
  std::vector<FracExpr> reduced_mu;
  // μ11 μ12 μ13 μ22 μ23 μ33
  std::vector<FracExpr> mu;
  bool residual_zero = false;
};
RoterReport roter_decomposition(const Tensor& R, const Tensor& g, const Tensor& Ric,
                                const Tensor& Ric2);

struct RicciDerivativeFlags {
  bool codazzi = false;
  bool cyclic_parallel = false;
};
RicciDerivativeFlags codazzi_and_cyclic(const Tensor& dRic);

// S_{y1,y2,y3} T(Z y1, u, y2, y3) = 0 with g(Z y1, y) = Z(y1, y).
bool compatibility(const Tensor& T, const Tensor& Z, const MetricData& m);

struct RecurrenceEntry {
  bool recurrent = false;
  bool trivial = false;  // E = 0
  std::vector<FracExpr> sigma;
  bool verified = false;
};
// S (∇_{y1} E)(y2,y3,u,y) = S σ(y1) E(y2,y3,u,y), cyclic in (y1,y2,y3).
RecurrenceEntry recurrent_2forms(const Tensor& E, const Tensor& dE);

struct ClassificationReport {
  std::vector<RelationEntry> relations;
  EinsteinLevelReport einstein;
  QuasiEinsteinReport quasi;
  RoterReport roter;
  RicciDerivativeFlags ricci_flags;
  std::map<std::string, bool> compatibility;  // keyed by T in R C K W P
  std::map<std::string, RecurrenceEntry> recurrence;
};

ClassificationReport classify(const CurvatureSet& cs, const ProductSet& products,
                              const MetricData& m, const std::vector<Rational>& extra_alphas);

}  // namespace ssnm

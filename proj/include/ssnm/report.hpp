#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ssnm/classifier.hpp"
#include "ssnm/config.hpp"
#include "ssnm/golden.hpp"
#include "ssnm/numeric.hpp"

namespace ssnm {

struct Pipeline {
  RunConfig config;
  Problem problem;
  CurvatureSet curvatures;
  ProductSet products;
  ClassificationReport classification;
};

Pipeline compute(const RunConfig& config);

// Looks up a tensor by its golden/report name; nullptr when unknown.
const Tensor* find_tensor(const Pipeline& p, const std::string& name);
// Every reportable tensor name in report order.
std::vector<std::string> tensor_names(const Pipeline& p);

bool first_pair_antisymmetric(const Tensor& t);
bool last_pair_antisymmetric(const Tensor& t);

// Internal consistency checks; empty when all hold.
std::vector<std::string> invariant_violations(const Pipeline& p);

using Json = nlohmann::ordered_json;

Json report_json(const Pipeline& p, const GoldenSummary* golden, const NumericSummary* numeric);
std::string report_text(const Pipeline& p, const GoldenSummary* golden,
                        const NumericSummary* numeric);
std::string relation_text(const RelationEntry& r);

}  // namespace ssnm

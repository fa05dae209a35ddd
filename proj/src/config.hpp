#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bergman.hpp"
#include "fitting.hpp"
#include "models.hpp"
#include "weights.hpp"

namespace bol {

struct ModelSpec {
  ModelVariant variant = ModelVariant::smooth_p1;
  long m = 2;
  long bundle_char = 0;
  long a = 2, b = 2;
  std::pair<long, long> char1{1, 0}, char2{0, 1};

  OrbifoldModel build() const;
  nlohmann::json to_json() const;
  static ModelSpec from_json(const nlohmann::json& j);
};

struct WeightSpec {
  enum class Type { rank2_dp, cyclic_gen, table };
  Type type = Type::rank2_dp;
  long d = 1, p = 1;
  long m = 2, L = 1;
  WeightTable explicit_table;

  WeightTable build() const;
  nlohmann::json to_json() const;
  static WeightSpec from_json(const nlohmann::json& j);
};

struct ToleranceSpec {
  double b0_rel = 0.01;
  double b1_rel = 0.05;
  double offdiag_rel = 1e-3;
};

struct OutputSpec {
  std::string report_json;
  std::string csv;
};

// Validated on load; unknown keys are rejected and every default is explicit
// in the echoed form.
struct ExperimentConfig {
  ModelSpec model;
  WeightSpec weights;
  std::vector<long> k_list;
  std::vector<std::vector<double>> sample_points;  // [re,im] per factor, flattened
  int default_points = 6;
  InnerProductScheme scheme;
  long n_order = 1;
  B1Form form = B1Form::intermediate;
  int threads = 0;  // 0 = BOL_THREADS or hardware default
  OutputSpec output;
  ToleranceSpec tol;

  static ExperimentConfig from_json_text(const std::string& text);
  nlohmann::json echo() const;
  std::vector<SamplePoint> resolve_points(const OrbifoldModel& model) const;
};

std::string format17(double v);

}  // namespace bol

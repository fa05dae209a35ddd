#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace bol {

struct PointResult {
  std::vector<double> coords;
  bool near_orbifold = false;
  Mat fitted_b0, fitted_b1;
  double predicted_b0_value = 0.0;
  double predicted_b1_intermediate = 0.0;
  double predicted_b1_final = 0.0;
  double rel_err_b0 = 0.0;
  double rel_err_b1_intermediate = 0.0;
  double rel_err_b1_final = 0.0;
  double offdiag_rel_b0 = 0.0;
  double diag_asym_b0 = 0.0;
  double condition = 0.0;
  double residual_rms = 0.0;
  bool pass = false;
};

struct PredictionReport {
  nlohmann::json config_echo;
  long ord = 1;
  long hyp_min_order = -2;  // -1 = infinite, -2 = not applicable (cyclic)
  double scal = 0.0;
  std::string scal_note;
  std::string bound_form;  // which b1 form the tolerances bind to
  bool final_form_agrees = false;
  std::vector<PointResult> points;

  struct Row {
    long k = 0;
    long pt_index = 0;
    Mat value;
    double residual = 0.0;
  };
  std::vector<Row> rows;

  bool passed = false;
  std::string stage;  // last stage reached
  std::string error;  // empty when clean

  nlohmann::json to_json() const;
  std::string to_text() const;
  std::string to_csv() const;  // RFC-4180 (CRLF), 17 significant digits
};

PredictionReport verify_expansion(const OrbifoldModel& model, const WeightTable& weights,
                                  const std::vector<long>& k_list,
                                  const std::vector<SamplePoint>& pts, long n_order, B1Form form,
                                  const InnerProductScheme& scheme, const ToleranceSpec& tol,
                                  int threads);

}  // namespace bol

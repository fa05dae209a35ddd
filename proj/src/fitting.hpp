#pragma once

#include <utility>
#include <vector>

#include "models.hpp"
#include "weights.hpp"

namespace bol {

struct ExpansionFit {
  long leading_power = 1;
  std::vector<Mat> coeffs;  // b_0 .. b_N
  double residual_rms = 0.0;
  double kmin = 0.0, kmax = 0.0;
  double condition_number = 0.0;
};

// Least squares for value(k) ~ sum_{q=0}^{N} b_q k^{leading-q}, solved per
// matrix entry in the conditioning-friendly basis (k/kmax)^{leading-q}.
// Exact when the input is exactly of that form.
ExpansionFit fit_expansion(const std::vector<std::pair<double, Mat>>& samples, long leading_power,
                           long n_order);

// sum c_ij (i+1).
double predicted_b0(const WeightTable& w);

enum class B1Form { intermediate, final_form };

// final:        sum c_ij (n j + (i+1)(2i+1)/2 Scal)
// intermediate: sum c_ij (n j + sum_mu (mu1 M11 + mu2 M22) + (i+1)/2 Scal)
double predicted_b1(const WeightTable& w, const OrbifoldModel& model, const SamplePoint& pt,
                    B1Form form);

// (sum c_i, sum c_i (n i + Scal/2)).
std::pair<double, double> predicted_cyclic(const WeightTable& c, const OrbifoldModel& model,
                                           const SamplePoint& pt);

}  // namespace bol

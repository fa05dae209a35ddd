#include "fitting.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <set>

namespace bol {

ExpansionFit fit_expansion(const std::vector<std::pair<double, Mat>>& samples, long leading_power,
                           long n_order) {
  if (n_order < 0) fail(Errc::invalid_argument, "fit_expansion: N >= 0 required");
  const long m = static_cast<long>(samples.size());
  const long ncoef = n_order + 1;
  std::set<double> distinct;
  for (const auto& [k, v] : samples) {
    if (k <= 0) fail(Errc::invalid_argument, "fit_expansion: k values must be positive");
    distinct.insert(k);
  }
  if (static_cast<long>(distinct.size()) < ncoef)
    fail(Errc::insufficient_samples, "fit_expansion: need at least N+1 distinct k values");

  double kmax = *distinct.rbegin(), kmin = *distinct.begin();
  Eigen::MatrixXd design(m, ncoef);
  for (long s = 0; s < m; ++s)
    for (long q = 0; q < ncoef; ++q)
      design(s, q) = std::pow(samples[static_cast<size_t>(s)].first / kmax,
                              static_cast<double>(leading_power - q));

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double cond = svd.singularValues()(0) / svd.singularValues()(svd.singularValues().size() - 1);
  if (!std::isfinite(cond) || cond > 1e12)
    fail(Errc::ill_conditioned, "fit_expansion: condition number exceeds 1e12");

  const long rows = samples.front().second.rows();
  const long cols = samples.front().second.cols();
  ExpansionFit fit;
  fit.leading_power = leading_power;
  fit.kmin = kmin;
  fit.kmax = kmax;
  fit.condition_number = cond;
  fit.coeffs.assign(static_cast<size_t>(ncoef), Mat::Zero(rows, cols));

  Eigen::VectorXd rhs_re(m), rhs_im(m);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      for (long s = 0; s < m; ++s) {
        cdx v = samples[static_cast<size_t>(s)].second(r, c);
        rhs_re(s) = v.real();
        rhs_im(s) = v.imag();
      }
      Eigen::VectorXd sol_re = svd.solve(rhs_re);
      Eigen::VectorXd sol_im = svd.solve(rhs_im);
      for (long q = 0; q < ncoef; ++q)
        fit.coeffs[static_cast<size_t>(q)](r, c) =
            cdx(sol_re(q), sol_im(q)) / std::pow(kmax, static_cast<double>(leading_power - q));
    }
  }

  double ss = 0.0;
  for (long s = 0; s < m; ++s) {
    Mat modeled = Mat::Zero(rows, cols);
    for (long q = 0; q < ncoef; ++q)
      modeled += fit.coeffs[static_cast<size_t>(q)] *
                 std::pow(samples[static_cast<size_t>(s)].first,
                          static_cast<double>(leading_power - q));
    ss += (samples[static_cast<size_t>(s)].second - modeled).squaredNorm();
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(m * rows * cols));
  return fit;
}

double predicted_b0(const WeightTable& w) {
  if (w.kind != WeightTable::Kind::rank2)
    fail(Errc::invalid_argument, "predicted_b0: rank2 table required");
  double acc = 0.0;
  for (const auto& [ij, c] : w.rank2_entries) acc += to_double(c) * static_cast<double>(ij.first + 1);
  return acc;
}

double predicted_b1(const WeightTable& w, const OrbifoldModel& model, const SamplePoint& pt,
                    B1Form form) {
  if (w.kind != WeightTable::Kind::rank2)
    fail(Errc::invalid_argument, "predicted_b1: rank2 table required");
  const double n = static_cast<double>(model.dimension());
  const double scal = model.scalar_curvature(pt);
  Mat m;
  if (form == B1Form::intermediate) m = model.curvature_matrix(pt);
  double acc = 0.0;
  for (const auto& [ij, c] : w.rank2_entries) {
    auto [i, j] = ij;
    double term;
    if (form == B1Form::final_form) {
      term = n * j + 0.5 * static_cast<double>((i + 1) * (2 * i + 1)) * scal;
    } else {
      term = n * j + twist_trace(m, i) + 0.5 * static_cast<double>(i + 1) * scal;
    }
    acc += to_double(c) * term;
  }
  return acc;
}

std::pair<double, double> predicted_cyclic(const WeightTable& c, const OrbifoldModel& model,
                                           const SamplePoint& pt) {
  if (c.kind != WeightTable::Kind::cyclic)
    fail(Errc::invalid_argument, "predicted_cyclic: cyclic table required");
  const double n = static_cast<double>(model.dimension());
  const double scal = model.scalar_curvature(pt);
  double b0 = 0.0, b1 = 0.0;
  for (const auto& [i, ci] : c.cyclic_entries) {
    b0 += to_double(ci);
    b1 += to_double(ci) * (n * static_cast<double>(i) + 0.5 * scal);
  }
  return {b0, b1};
}

}  // namespace bol

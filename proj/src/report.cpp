#include "report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "parallel.hpp"

namespace bol {

namespace {

using nlohmann::json;

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

PredictionReport verify_expansion(const OrbifoldModel& model, const WeightTable& weights,
                                  const std::vector<long>& k_list,
                                  const std::vector<SamplePoint>& pts, long n_order, B1Form form,
                                  const InnerProductScheme& scheme, const ToleranceSpec& tol,
                                  int threads) {
  PredictionReport rep;
  rep.ord = model.ord();
  rep.scal_note =
      "Scal convention: trace_omega of (i/2pi) ddbar(-log det g) with omega = (i/2pi) ddbar phi, "
      "calibrated so smooth P^1 has Scal = 2 and B_k = k + Scal/2 exactly";
  rep.bound_form = form == B1Form::intermediate ? "intermediate" : "final";
  const bool rank2 = weights.kind == WeightTable::Kind::rank2;
  const long leading = rank2 ? model.dimension() + 1 : model.dimension();

  try {
    rep.stage = "weights";
    if (rank2 && rep.ord > 1) {
      auto o = hypothesis_min_order(weights, rep.ord);
      rep.hyp_min_order = o ? *o : -1;
    }

    rep.stage = "pipelines";
    PipelineCache cache;
    std::vector<std::pair<long, long>> needed;  // (i, K)
    {
      std::set<std::pair<long, long>> dedup;
      for (long k : k_list) {
        if (rank2) {
          for (const auto& [ij, c] : weights.rank2_entries) dedup.insert({ij.first, k + ij.second});
        } else {
          for (const auto& [i, c] : weights.cyclic_entries) dedup.insert({0, k + i});
        }
      }
      needed.assign(dedup.begin(), dedup.end());
    }
    parallel_for(static_cast<long>(needed.size()), effective_threads(threads), [&](long q) {
      cache.get(model, needed[static_cast<size_t>(q)].first, needed[static_cast<size_t>(q)].second,
                scheme);
    });

    rep.stage = "evaluate";
    const long npts = static_cast<long>(pts.size());
    std::vector<Mat> values(static_cast<size_t>(k_list.size() * static_cast<size_t>(npts)));
    parallel_for(static_cast<long>(values.size()), effective_threads(threads), [&](long idx) {
      long ki = idx / npts, pi = idx % npts;
      // pipelines are already built; the cache only serves reads here
      if (rank2) {
        values[static_cast<size_t>(idx)] = orbifold_bergman(model, weights, k_list[static_cast<size_t>(ki)],
                                                            pts[static_cast<size_t>(pi)], scheme, cache);
      } else {
        Mat v(1, 1);
        v(0, 0) = scalar_weighted_bergman(model, weights, k_list[static_cast<size_t>(ki)],
                                          pts[static_cast<size_t>(pi)], scheme, cache);
        values[static_cast<size_t>(idx)] = v;
      }
    });
    for (size_t ki = 0; ki < k_list.size(); ++ki)
      for (long pi = 0; pi < npts; ++pi)
        rep.rows.push_back({k_list[ki], pi, values[ki * static_cast<size_t>(npts) + static_cast<size_t>(pi)], 0.0});

    rep.stage = "fit";
    bool all_pass = true;
    bool final_all = true;
    for (long pi = 0; pi < npts; ++pi) {
      std::vector<std::pair<double, Mat>> samples;
      for (size_t ki = 0; ki < k_list.size(); ++ki)
        samples.emplace_back(static_cast<double>(k_list[ki]),
                             values[ki * static_cast<size_t>(npts) + static_cast<size_t>(pi)]);
      // one extra nuisance coefficient guards b_N against the next-order tail
      ExpansionFit fit = fit_expansion(samples, leading, n_order + 1);

      PointResult pr;
      for (const auto& z : pts[static_cast<size_t>(pi)].coords) {
        pr.coords.push_back(z.real());
        pr.coords.push_back(z.imag());
      }
      pr.near_orbifold = pts[static_cast<size_t>(pi)].near_orbifold;
      pr.fitted_b0 = fit.coeffs[0];
      pr.fitted_b1 = fit.coeffs[1];
      pr.condition = fit.condition_number;
      pr.residual_rms = fit.residual_rms;

      const SamplePoint& pt = pts[static_cast<size_t>(pi)];
      if (rank2) {
        pr.predicted_b0_value = predicted_b0(weights);
        pr.predicted_b1_intermediate = predicted_b1(weights, model, pt, B1Form::intermediate);
        pr.predicted_b1_final = predicted_b1(weights, model, pt, B1Form::final_form);
        double d0 = std::max(std::abs(pr.fitted_b0(0, 0).real() - pr.predicted_b0_value),
                             std::abs(pr.fitted_b0(1, 1).real() - pr.predicted_b0_value));
        pr.rel_err_b0 = d0 / std::abs(pr.predicted_b0_value);
        pr.offdiag_rel_b0 =
            std::max(std::abs(pr.fitted_b0(0, 1)), std::abs(pr.fitted_b0(1, 0))) /
            std::abs(pr.predicted_b0_value);
        pr.diag_asym_b0 = std::abs(pr.fitted_b0(0, 0).real() - pr.fitted_b0(1, 1).real()) /
                          std::max(1e-300, std::abs(pr.fitted_b0(0, 0).real()));
        double fitted_b1 = 0.5 * (pr.fitted_b1(0, 0).real() + pr.fitted_b1(1, 1).real());
        pr.rel_err_b1_intermediate = std::abs(fitted_b1 - pr.predicted_b1_intermediate) /
                                     std::abs(pr.predicted_b1_intermediate);
        pr.rel_err_b1_final =
            std::abs(fitted_b1 - pr.predicted_b1_final) / std::abs(pr.predicted_b1_final);
      } else {
        auto [c0, c1] = predicted_cyclic(weights, model, pt);
        pr.predicted_b0_value = c0;
        pr.predicted_b1_intermediate = c1;
        pr.predicted_b1_final = c1;
        pr.rel_err_b0 = std::abs(pr.fitted_b0(0, 0).real() - c0) / std::abs(c0);
        double fitted_b1 = pr.fitted_b1(0, 0).real();
        pr.rel_err_b1_intermediate = std::abs(fitted_b1 - c1) / std::abs(c1);
        pr.rel_err_b1_final = pr.rel_err_b1_intermediate;
      }
      double bound_b1 = form == B1Form::intermediate ? pr.rel_err_b1_intermediate
                                                     : pr.rel_err_b1_final;
      pr.pass = pr.rel_err_b0 <= tol.b0_rel && bound_b1 <= tol.b1_rel &&
                (!rank2 || pr.offdiag_rel_b0 <= tol.offdiag_rel);
      all_pass = all_pass && pr.pass;
      final_all = final_all && pr.rel_err_b1_final <= tol.b1_rel;

      // per-row residuals against the fitted model
      for (size_t ki = 0; ki < k_list.size(); ++ki) {
        Mat modeled = Mat::Zero(pr.fitted_b0.rows(), pr.fitted_b0.cols());
        for (size_t q = 0; q < fit.coeffs.size(); ++q)
          modeled += fit.coeffs[q] * std::pow(static_cast<double>(k_list[ki]),
                                              static_cast<double>(leading - static_cast<long>(q)));
        rep.rows[ki * static_cast<size_t>(npts) + static_cast<size_t>(pi)].residual =
            (values[ki * static_cast<size_t>(npts) + static_cast<size_t>(pi)] - modeled).norm();
      }
      rep.scal = model.scalar_curvature(pt);
      rep.points.push_back(std::move(pr));
    }
    rep.final_form_agrees = final_all;
    rep.passed = all_pass;
    rep.stage = "done";
  } catch (const Error& e) {
    rep.error = e.what();
    rep.passed = false;
  }
  return rep;
}

json PredictionReport::to_json() const {
  json j;
  j["configEcho"] = config_echo;
  j["ord"] = ord;
  if (hyp_min_order != -2)
    j["hypothesisMinOrder"] = hyp_min_order == -1 ? json("infinite") : json(hyp_min_order);
  j["scal"] = scal;
  j["scalConvention"] = scal_note;
  j["boundForm"] = bound_form;
  j["finalFormAgrees"] = final_form_agrees;
  j["passed"] = passed;
  j["stage"] = stage;
  if (!error.empty()) j["error"] = error;
  json pts = json::array();
  for (const auto& p : points) {
    json pj;
    pj["point"] = p.coords;
    pj["nearOrbifold"] = p.near_orbifold;
    pj["fittedB0"] = mat_to_json(p.fitted_b0);
    pj["fittedB1"] = mat_to_json(p.fitted_b1);
    pj["predictedB0"] = p.predicted_b0_value;
    pj["predictedB1Intermediate"] = p.predicted_b1_intermediate;
    pj["predictedB1Final"] = p.predicted_b1_final;
    pj["relErrB0"] = p.rel_err_b0;
    pj["relErrB1Intermediate"] = p.rel_err_b1_intermediate;
    pj["relErrB1Final"] = p.rel_err_b1_final;
    pj["offDiagRelB0"] = p.offdiag_rel_b0;
    pj["diagAsymB0"] = p.diag_asym_b0;
    pj["condition"] = p.condition;
    pj["residualRMS"] = p.residual_rms;
    pj["pass"] = p.pass;
    pts.push_back(pj);
  }
  j["points"] = pts;
  return j;
}

std::string PredictionReport::to_text() const {
  std::ostringstream os;
  os.precision(12);
  os << "ord = " << ord;
  if (hyp_min_order == -1)
    os << ", hypothesis min order = infinite";
  else if (hyp_min_order >= 0)
    os << ", hypothesis min order = " << hyp_min_order;
  os << "\n";
  os << "Scal = " << scal << "  (" << scal_note << ")\n";
  os << "b1 tolerance bound: " << bound_form << " form; final form agrees: "
     << (final_form_agrees ? "yes" : "no") << "\n";
  for (size_t q = 0; q < points.size(); ++q) {
    const auto& p = points[q];
    os << "pt " << q << ": b0 fitted " << p.fitted_b0(0, 0).real() << " predicted "
       << p.predicted_b0_value << " (rel err " << p.rel_err_b0 << "), b1 fitted "
       << p.fitted_b1(0, 0).real() << " predicted[intermediate] " << p.predicted_b1_intermediate
       << " (rel err " << p.rel_err_b1_intermediate << ") predicted[final] " << p.predicted_b1_final
       << " (rel err " << p.rel_err_b1_final << ") offdiag " << p.offdiag_rel_b0 << " "
       << (p.pass ? "PASS" : "FAIL") << "\n";
  }
  if (!error.empty()) os << "error at stage " << stage << ": " << error << "\n";
  os << (passed ? "PASSED" : "FAILED") << "\n";
  return os.str();
}

std::string PredictionReport::to_csv() const {
  std::ostringstream os;
  long rows_n = rows.empty() ? 1 : rows.front().value.rows();
  long cols_n = rows.empty() ? 1 : rows.front().value.cols();
  os << "k,pt_index";
  for (long r = 0; r < rows_n; ++r)
    for (long c = 0; c < cols_n; ++c)
      os << ",re_" << (r + 1) << (c + 1) << ",im_" << (r + 1) << (c + 1);
  os << ",residual\r\n";
  for (const auto& row : rows) {
    os << row.k << "," << row.pt_index;
    for (long r = 0; r < rows_n; ++r)
      for (long c = 0; c < cols_n; ++c)
        os << "," << format17(row.value(r, c).real()) << "," << format17(row.value(r, c).imag());
    os << "," << format17(row.residual) << "\r\n";
  }
  return os.str();
}

}  // namespace bol

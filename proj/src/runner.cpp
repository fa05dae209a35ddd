#include "runner.hpp"

#include <fstream>
#include <sstream>

namespace bol {

namespace {

void write_file(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::config_error, "cannot open output file " + path);
  out << content;
}

}  // namespace

RunResult run_verify(const ExperimentConfig& cfg) {
  RunResult rr;
  try {
    OrbifoldModel model = cfg.model.build();
    WeightTable weights = cfg.weights.build();
    auto pts = cfg.resolve_points(model);
    rr.report = verify_expansion(model, weights, cfg.k_list, pts, cfg.n_order, cfg.form,
                                 cfg.scheme, cfg.tol, cfg.threads);
    rr.report.config_echo = cfg.echo();
    write_file(cfg.output.report_json, rr.report.to_json().dump(2) + "\n");
    write_file(cfg.output.csv, rr.report.to_csv());
    if (!rr.report.error.empty())
      rr.exit_code = 5;
    else
      rr.exit_code = rr.report.passed ? 0 : 1;
  } catch (const Error& e) {
    rr.report.error = e.what();
    rr.report.passed = false;
    rr.exit_code = e.code() == Errc::config_error ? 4 : 5;
  } catch (const std::exception& e) {
    rr.report.error = e.what();
    rr.report.passed = false;
    rr.exit_code = 5;
  }
  return rr;
}

std::string run_table(const ExperimentConfig& cfg, const std::string& quantity, long i,
                      const std::string& format) {
  OrbifoldModel model = cfg.model.build();
  WeightTable weights = cfg.weights.build();
  auto pts = cfg.resolve_points(model);
  PipelineCache cache;
  const bool borb = quantity == "borb";
  if (!borb && quantity != "bik_trace")
    fail(Errc::invalid_argument, "run_table: quantity must be 'borb' or 'bik_trace'");

  struct Row {
    long k, pt;
    std::vector<double> vals;
  };
  std::vector<Row> rows;
  for (long k : cfg.k_list) {
    for (size_t pi = 0; pi < pts.size(); ++pi) {
      Row row{k, static_cast<long>(pi), {}};
      if (borb) {
        if (weights.kind == WeightTable::Kind::rank2) {
          Mat v = orbifold_bergman(model, weights, k, pts[pi], cfg.scheme, cache);
          for (long r = 0; r < v.rows(); ++r)
            for (long c = 0; c < v.cols(); ++c) {
              row.vals.push_back(v(r, c).real());
              row.vals.push_back(v(r, c).imag());
            }
        } else {
          row.vals.push_back(scalar_weighted_bergman(model, weights, k, pts[pi], cfg.scheme, cache));
        }
      } else {
        auto pipe = cache.get(model, i, k, cfg.scheme);
        Mat b = bergman_endo(model, *pipe, pts[pi]);
        row.vals.push_back(b.trace().real());
      }
      rows.push_back(std::move(row));
    }
  }

  if (format == "json") {
    nlohmann::json j;
    j["quantity"] = quantity;
    if (!borb) j["i"] = i;
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json rj;
      rj["k"] = row.k;
      rj["pt_index"] = row.pt;
      rj["values"] = row.vals;
      arr.push_back(rj);
    }
    j["rows"] = arr;
    return j.dump(2) + "\n";
  }
  if (format != "csv") fail(Errc::invalid_argument, "run_table: format must be 'csv' or 'json'");
  std::ostringstream os;
  os << "k,pt_index";
  size_t nvals = rows.empty() ? 0 : rows.front().vals.size();
  for (size_t q = 0; q < nvals; ++q) os << ",v" << q;
  os << "\r\n";
  for (const auto& row : rows) {
    os << row.k << "," << row.pt;
    for (double v : row.vals) os << "," << format17(v);
    os << "\r\n";
  }
  return os.str();
}

CalibrationReport run_calibrate() {
  CalibrationReport rep;
  std::ostringstream os;
  nlohmann::json j;
  bool ok = true;
  try {
    OrbifoldModel smooth = OrbifoldModel::smooth_p1();
    InnerProductScheme scheme;
    PipelineCache cache;
    auto pts = smooth.default_sample_points(10);

    double max_dev = 0.0;
    std::vector<std::pair<double, Mat>> samples;
    for (long k = 10; k <= 30; ++k) {
      double v = 0.0;
      for (const auto& pt : pts) {
        auto pipe = cache.get(smooth, 0, k, scheme);
        double b = bergman_endo(smooth, *pipe, pt)(0, 0).real();
        max_dev = std::max(max_dev, std::abs(b - static_cast<double>(k + 1)));
        v = b;
      }
      Mat m(1, 1);
      m(0, 0) = v;
      samples.emplace_back(static_cast<double>(k), m);
    }
    ExpansionFit fit = fit_expansion(samples, 1, 2);
    double b0 = fit.coeffs[0](0, 0).real(), b1 = fit.coeffs[1](0, 0).real();
    ok = ok && max_dev < 1e-8 && std::abs(b0 - 1.0) < 1e-6 && std::abs(b1 - 1.0) < 1e-6;
    j["smoothP1"] = {{"maxAbsDevFromKPlus1", max_dev}, {"fittedB0", b0}, {"fittedB1", b1}};
    os << "smooth P^1: max |B_k - (k+1)| = " << max_dev << ", fitted b0 = " << b0
       << ", b1 = " << b1 << "\n";

    auto scal_entry = [&](const char* name, const OrbifoldModel& md, const SamplePoint& pt) {
      double sa = md.scalar_curvature(pt, CurvaturePath::analytic);
      double sf = md.scalar_curvature(pt, CurvaturePath::finite_difference);
      ok = ok && std::abs(sa - sf) < 1e-6;
      j["scal"][name] = {{"analytic", sa}, {"finiteDifference", sf}};
      os << name << ": Scal analytic = " << sa << ", finite-difference = " << sf << "\n";
    };
    scal_entry("smooth_p1", smooth, smooth.make_point({cdx(0.7, 0.3)}));
    OrbifoldModel cyc = OrbifoldModel::cyclic_p1(2, 1);
    scal_entry("cyclic_p1_m2", cyc, cyc.make_point({cdx(0.9, -0.2)}));
    OrbifoldModel prod = OrbifoldModel::product_p1p1(GroupSpec(2, 2, {1, 0}, {0, 1}));
    SamplePoint ppt = prod.make_point({cdx(0.8, 0.1), cdx(-0.5, 0.6)});
    scal_entry("product_p1p1", prod, ppt);

    Mat ca = prod.curvature_matrix(ppt, CurvaturePath::analytic);
    Mat cf = prod.curvature_matrix(ppt, CurvaturePath::finite_difference);
    ok = ok && (ca - cf).cwiseAbs().maxCoeff() < 1e-5;
    j["curvatureMatrix"]["product_p1p1"] = {
        {"analyticDiag", {ca(0, 0).real(), ca(1, 1).real()}},
        {"finiteDifferenceDiag", {cf(0, 0).real(), cf(1, 1).real()}}};
    os << "product curvature matrix diag: analytic (" << ca(0, 0).real() << ", " << ca(1, 1).real()
       << "), finite-difference (" << cf(0, 0).real() << ", " << cf(1, 1).real() << ")\n";
  } catch (const std::exception& e) {
    ok = false;
    j["error"] = e.what();
    os << "error: " << e.what() << "\n";
  }
  j["ok"] = ok;
  os << (ok ? "calibration OK" : "calibration FAILED") << "\n";
  rep.ok = ok;
  rep.data = j;
  rep.text = os.str();
  return rep;
}

}  // namespace bol

#pragma once

#include <string>

#include "report.hpp"

namespace bol {

struct RunResult {
  PredictionReport report;
  int exit_code = 0;  // 0 pass, 1 tolerance failure, 4 config error, 5 numeric failure
};

// Full verify pipeline from a config; writes report/CSV outputs when paths
// are configured. Never throws: failures land in the exit code and report.
RunResult run_verify(const ExperimentConfig& cfg);

// Raw Bergman tables over k without fitting. quantity: "borb" (weighted sum
// entries) or "bik_trace" (trace of B_{i,k} for the given i).
std::string run_table(const ExperimentConfig& cfg, const std::string& quantity, long i,
                      const std::string& format);

struct CalibrationReport {
  bool ok = false;
  nlohmann::json data;
  std::string text;
};

// Smooth-model calibration: B_k vs k+1, fitted (b0, b1), the Scal convention
// on every built-in model, and the finite-difference cross-checks.
CalibrationReport run_calibrate();

}  // namespace bol

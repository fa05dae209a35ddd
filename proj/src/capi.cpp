#include "bol/bol.h"

#include <cstdlib>
#include <cstring>

#include "runner.hpp"

namespace {

thread_local std::string g_last_error;

bol_status map_errc(bol::Errc c) {
  using bol::Errc;
  switch (c) {
    case Errc::not_schur_positive:
      return BOL_E_NOT_SCHUR_POSITIVE;
    case Errc::not_faithful:
      return BOL_E_NOT_FAITHFUL;
    case Errc::not_positive_definite:
      return BOL_E_NOT_POSITIVE_DEFINITE;
    case Errc::ill_conditioned:
    case Errc::insufficient_samples:
      return BOL_E_ILL_CONDITIONED;
    case Errc::config_error:
      return BOL_E_CONFIG;
    case Errc::numeric_failure:
    case Errc::curvature_degenerate:
    case Errc::quadrature_unconverged:
    case Errc::out_of_chart:
      return BOL_E_NUMERIC;
    default:
      return BOL_E_INVALID;
  }
}

template <typename Fn>
bol_status guarded(Fn&& fn) {
  try {
    fn();
    return BOL_OK;
  } catch (const bol::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BOL_E_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct bol_weights {
  bol::WeightTable table;
};

struct bol_report {
  bol::PredictionReport report;
  int exit_code = 0;
};

extern "C" {

const char* bol_version(void) { return "1.0.0"; }

const char* bol_last_error(void) { return g_last_error.c_str(); }

void bol_string_free(char* s) { std::free(s); }

bol_status bol_weights_rank2(long d, long p, bol_weights** out) {
  if (!out) return BOL_E_INVALID;
  *out = nullptr;
  return guarded([&] { *out = new bol_weights{bol::weight_table(d, p)}; });
}

bol_status bol_weights_cyclic_gen(long m, long L, bol_weights** out) {
  if (!out) return BOL_E_INVALID;
  *out = nullptr;
  return guarded([&] { *out = new bol_weights{bol::gen_cyclic_weights(m, L)}; });
}

bol_status bol_weights_from_json(const char* json_text, bol_weights** out) {
  if (!out || !json_text) return BOL_E_INVALID;
  *out = nullptr;
  return guarded([&] { *out = new bol_weights{bol::WeightTable::from_json(json_text)}; });
}

bol_status bol_weights_to_json(const bol_weights* w, char** out_json) {
  if (!w || !out_json) return BOL_E_INVALID;
  return guarded([&] { *out_json = dup_string(w->table.to_json()); });
}

bol_status bol_weights_schur_verify(const bol_weights* w) {
  if (!w) return BOL_E_INVALID;
  return guarded([&] {
    if (w->table.kind != bol::WeightTable::Kind::rank2 || !w->table.provenance)
      bol::fail(bol::Errc::invalid_argument,
                "schur_verify: rank-2 table with (d,p) provenance required");
    auto [d, p] = *w->table.provenance;
    bol::WeightTable redone = bol::schur_decompose(bol::expand_power(d, p));
    if (redone.rank2_entries != w->table.rank2_entries)
      bol::fail(bol::Errc::numeric_failure, "schur_verify: decomposition mismatch");
  });
}

bol_status bol_weights_min_order(const bol_weights* w, long ord, long* out_order) {
  if (!w || !out_order) return BOL_E_INVALID;
  return guarded([&] {
    auto o = bol::hypothesis_min_order(w->table, ord);
    *out_order = o ? *o : -1;
  });
}

bol_status bol_weights_check_cyclic(const bol_weights* w, long m, long L, int* out_ok) {
  if (!w || !out_ok) return BOL_E_INVALID;
  return guarded([&] { *out_ok = bol::check_cyclic_weights(w->table, m, L) ? 1 : 0; });
}

void bol_weights_free(bol_weights* w) { delete w; }

bol_status bol_verify_run(const char* config_json, bol_report** out) {
  if (!out || !config_json) return BOL_E_INVALID;
  *out = nullptr;
  bol::ExperimentConfig cfg;
  bol_status st = guarded([&] { cfg = bol::ExperimentConfig::from_json_text(config_json); });
  if (st != BOL_OK) return st;
  return guarded([&] {
    bol::RunResult rr = bol::run_verify(cfg);
    *out = new bol_report{std::move(rr.report), rr.exit_code};
  });
}

bol_status bol_report_json(const bol_report* r, char** out_json) {
  if (!r || !out_json) return BOL_E_INVALID;
  return guarded([&] { *out_json = dup_string(r->report.to_json().dump(2) + "\n"); });
}

bol_status bol_report_text(const bol_report* r, char** out_text) {
  if (!r || !out_text) return BOL_E_INVALID;
  return guarded([&] { *out_text = dup_string(r->report.to_text()); });
}

bol_status bol_report_csv(const bol_report* r, char** out_csv) {
  if (!r || !out_csv) return BOL_E_INVALID;
  return guarded([&] { *out_csv = dup_string(r->report.to_csv()); });
}

int bol_report_passed(const bol_report* r) { return r && r->report.passed ? 1 : 0; }

int bol_report_exit_code(const bol_report* r) { return r ? r->exit_code : 4; }

void bol_report_free(bol_report* r) { delete r; }

bol_status bol_table_run(const char* config_json, const char* quantity, long i,
                         const char* format, char** out_data) {
  if (!config_json || !quantity || !format || !out_data) return BOL_E_INVALID;
  return guarded([&] {
    bol::ExperimentConfig cfg = bol::ExperimentConfig::from_json_text(config_json);
    *out_data = dup_string(bol::run_table(cfg, quantity, i, format));
  });
}

bol_status bol_calibrate_run(char** out_json, char** out_text, int* out_ok) {
  if (!out_json || !out_text || !out_ok) return BOL_E_INVALID;
  return guarded([&] {
    bol::CalibrationReport rep = bol::run_calibrate();
    *out_json = dup_string(rep.data.dump(2) + "\n");
    *out_text = dup_string(rep.text);
    *out_ok = rep.ok ? 1 : 0;
  });
}

}  // extern "C"

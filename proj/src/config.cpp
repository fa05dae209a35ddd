#include "config.hpp"

#include <cstdio>

namespace bol {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!j.is_object()) fail(Errc::config_error, where + ": object expected");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) fail(Errc::config_error, where + ": unknown key '" + it.key() + "'");
  }
}

long get_long(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(Errc::config_error, where + ": missing key '" + key + "'");
  if (!j[key].is_number_integer()) fail(Errc::config_error, where + ": '" + key + "' must be an integer");
  return j[key].get<long>();
}

std::pair<long, long> get_pair(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2)
    fail(Errc::config_error, where + ": '" + key + "' must be a pair");
  return {j[key][0].get<long>(), j[key][1].get<long>()};
}

}  // namespace

OrbifoldModel ModelSpec::build() const {
  switch (variant) {
    case ModelVariant::smooth_p1:
      return OrbifoldModel::smooth_p1();
    case ModelVariant::cyclic_p1:
      return OrbifoldModel::cyclic_p1(m, bundle_char);
    case ModelVariant::product_p1p1:
      return OrbifoldModel::product_p1p1(GroupSpec(a, b, char1, char2));
  }
  return OrbifoldModel::smooth_p1();
}

nlohmann::json ModelSpec::to_json() const {
  json j;
  switch (variant) {
    case ModelVariant::smooth_p1:
      j["model"] = "smooth_p1";
      break;
    case ModelVariant::cyclic_p1:
      j["model"] = "cyclic_p1";
      j["m"] = m;
      j["bundleChar"] = bundle_char;
      break;
    case ModelVariant::product_p1p1:
      j["model"] = "product_p1p1";
      j["a"] = a;
      j["b"] = b;
      j["char1"] = {char1.first, char1.second};
      j["char2"] = {char2.first, char2.second};
      break;
  }
  return j;
}

ModelSpec ModelSpec::from_json(const json& j) {
  ModelSpec s;
  if (!j.contains("model")) fail(Errc::config_error, "model: missing 'model' key");
  std::string name = j["model"].get<std::string>();
  if (name == "smooth_p1") {
    check_keys(j, {"model"}, "model");
    s.variant = ModelVariant::smooth_p1;
  } else if (name == "cyclic_p1") {
    check_keys(j, {"model", "m", "bundleChar"}, "model");
    s.variant = ModelVariant::cyclic_p1;
    s.m = get_long(j, "m", "model");
    s.bundle_char = j.contains("bundleChar") ? get_long(j, "bundleChar", "model") : 0;
  } else if (name == "product_p1p1") {
    check_keys(j, {"model", "a", "b", "char1", "char2"}, "model");
    s.variant = ModelVariant::product_p1p1;
    s.a = get_long(j, "a", "model");
    s.b = get_long(j, "b", "model");
    if (j.contains("char1")) s.char1 = get_pair(j, "char1", "model");
    if (j.contains("char2")) s.char2 = get_pair(j, "char2", "model");
  } else {
    fail(Errc::config_error, "model: unknown model '" + name + "'");
  }
  return s;
}

WeightTable WeightSpec::build() const {
  switch (type) {
    case Type::rank2_dp:
      return weight_table(d, p);
    case Type::cyclic_gen:
      return gen_cyclic_weights(m, L);
    case Type::table:
      return explicit_table;
  }
  return weight_table(1, 1);
}

nlohmann::json WeightSpec::to_json() const {
  json j;
  switch (type) {
    case Type::rank2_dp:
      j["d"] = d;
      j["p"] = p;
      break;
    case Type::cyclic_gen:
      j["cyclic"] = {{"m", m}, {"L", L}};
      break;
    case Type::table:
      j["table"] = json::parse(explicit_table.to_json());
      break;
  }
  return j;
}

WeightSpec WeightSpec::from_json(const json& j) {
  WeightSpec s;
  if (j.contains("table")) {
    check_keys(j, {"table"}, "weights");
    s.type = Type::table;
    s.explicit_table = WeightTable::from_json(j["table"].dump());
  } else if (j.contains("cyclic")) {
    check_keys(j, {"cyclic"}, "weights");
    check_keys(j["cyclic"], {"m", "L"}, "weights.cyclic");
    s.type = Type::cyclic_gen;
    s.m = get_long(j["cyclic"], "m", "weights.cyclic");
    s.L = get_long(j["cyclic"], "L", "weights.cyclic");
  } else {
    check_keys(j, {"d", "p"}, "weights");
    s.type = Type::rank2_dp;
    s.d = get_long(j, "d", "weights");
    s.p = get_long(j, "p", "weights");
  }
  return s;
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::config_error, std::string("config: JSON parse error: ") + e.what());
  }
  check_keys(j,
             {"model", "weights", "kList", "samplePoints", "scheme", "N", "form", "threads",
              "output", "tolerances"},
             "config");
  ExperimentConfig c;
  if (!j.contains("model")) fail(Errc::config_error, "config: missing 'model'");
  c.model = ModelSpec::from_json(j["model"]);
  if (!j.contains("weights")) fail(Errc::config_error, "config: missing 'weights'");
  c.weights = WeightSpec::from_json(j["weights"]);

  if (!j.contains("kList")) fail(Errc::config_error, "config: missing 'kList'");
  const json& kj = j["kList"];
  if (kj.is_array()) {
    for (const auto& v : kj) c.k_list.push_back(v.get<long>());
  } else {
    check_keys(kj, {"from", "to", "step"}, "kList");
    long from = get_long(kj, "from", "kList");
    long to = get_long(kj, "to", "kList");
    long step = kj.contains("step") ? get_long(kj, "step", "kList") : 1;
    if (step < 1) fail(Errc::config_error, "kList: step must be >= 1");
    for (long k = from; k <= to; k += step) c.k_list.push_back(k);
  }
  if (c.k_list.empty()) fail(Errc::config_error, "kList: empty");
  for (size_t q = 1; q < c.k_list.size(); ++q)
    if (c.k_list[q] <= c.k_list[q - 1])
      fail(Errc::config_error, "kList: must be strictly increasing");
  if (c.k_list.front() < 1) fail(Errc::config_error, "kList: k must be >= 1");

  if (j.contains("samplePoints")) {
    const json& sp = j["samplePoints"];
    if (sp.is_object()) {
      check_keys(sp, {"default"}, "samplePoints");
      c.default_points = static_cast<int>(get_long(sp, "default", "samplePoints"));
    } else if (sp.is_array()) {
      for (const auto& p : sp) {
        std::vector<double> flat;
        if (!p.is_array()) fail(Errc::config_error, "samplePoints: point must be an array");
        if (!p.empty() && p[0].is_array()) {
          for (const auto& pl : p) {
            if (!pl.is_array() || pl.size() != 2)
              fail(Errc::config_error, "samplePoints: [re,im] pair expected");
            flat.push_back(pl[0].get<double>());
            flat.push_back(pl[1].get<double>());
          }
        } else {
          if (p.size() != 2) fail(Errc::config_error, "samplePoints: [re,im] pair expected");
          flat.push_back(p[0].get<double>());
          flat.push_back(p[1].get<double>());
        }
        c.sample_points.push_back(std::move(flat));
      }
    } else {
      fail(Errc::config_error, "samplePoints: array or {\"default\":count} expected");
    }
  }

  if (j.contains("scheme")) {
    const json& sc = j["scheme"];
    check_keys(sc, {"mode", "radialNodes", "angularNodes", "validate"}, "scheme");
    std::string mode = sc.contains("mode") ? sc["mode"].get<std::string>() : "analytic";
    if (mode == "analytic") {
      c.scheme.mode = InnerProductScheme::Mode::analytic;
    } else if (mode == "quadrature") {
      c.scheme.mode = InnerProductScheme::Mode::quadrature;
    } else {
      fail(Errc::config_error, "scheme: unknown mode '" + mode + "'");
    }
    if (sc.contains("radialNodes"))
      c.scheme.quad.radial_nodes = static_cast<int>(get_long(sc, "radialNodes", "scheme"));
    if (sc.contains("angularNodes"))
      c.scheme.quad.angular_nodes = static_cast<int>(get_long(sc, "angularNodes", "scheme"));
    if (sc.contains("validate")) c.scheme.validate = sc["validate"].get<bool>();
  }

  if (j.contains("N")) c.n_order = get_long(j, "N", "config");
  if (c.n_order < 0) fail(Errc::config_error, "config: N >= 0 required");
  if (j.contains("form")) {
    std::string f = j["form"].get<std::string>();
    if (f == "intermediate")
      c.form = B1Form::intermediate;
    else if (f == "final")
      c.form = B1Form::final_form;
    else
      fail(Errc::config_error, "config: form must be 'intermediate' or 'final'");
  }
  if (j.contains("threads")) c.threads = static_cast<int>(get_long(j, "threads", "config"));
  if (j.contains("output")) {
    check_keys(j["output"], {"reportJson", "csv"}, "output");
    if (j["output"].contains("reportJson"))
      c.output.report_json = j["output"]["reportJson"].get<std::string>();
    if (j["output"].contains("csv")) c.output.csv = j["output"]["csv"].get<std::string>();
  }
  if (j.contains("tolerances")) {
    check_keys(j["tolerances"], {"b0RelErr", "b1RelErr", "offDiagRel"}, "tolerances");
    if (j["tolerances"].contains("b0RelErr")) c.tol.b0_rel = j["tolerances"]["b0RelErr"].get<double>();
    if (j["tolerances"].contains("b1RelErr")) c.tol.b1_rel = j["tolerances"]["b1RelErr"].get<double>();
    if (j["tolerances"].contains("offDiagRel"))
      c.tol.offdiag_rel = j["tolerances"]["offDiagRel"].get<double>();
  }
  return c;
}

nlohmann::json ExperimentConfig::echo() const {
  json j;
  j["model"] = model.to_json();
  j["weights"] = weights.to_json();
  j["kList"] = k_list;
  if (!sample_points.empty()) {
    json pts = json::array();
    for (const auto& p : sample_points) {
      if (p.size() == 2) {
        pts.push_back({p[0], p[1]});
      } else {
        pts.push_back({{p[0], p[1]}, {p[2], p[3]}});
      }
    }
    j["samplePoints"] = pts;
  } else {
    j["samplePoints"] = {{"default", default_points}};
  }
  j["scheme"] = {
      {"mode", scheme.mode == InnerProductScheme::Mode::analytic ? "analytic" : "quadrature"},
      {"radialNodes", scheme.quad.radial_nodes},
      {"angularNodes", scheme.quad.angular_nodes},
      {"validate", scheme.validate}};
  j["N"] = n_order;
  j["form"] = form == B1Form::intermediate ? "intermediate" : "final";
  j["threads"] = threads;
  j["output"] = {{"reportJson", output.report_json}, {"csv", output.csv}};
  j["tolerances"] = {
      {"b0RelErr", tol.b0_rel}, {"b1RelErr", tol.b1_rel}, {"offDiagRel", tol.offdiag_rel}};
  return j;
}

std::vector<SamplePoint> ExperimentConfig::resolve_points(const OrbifoldModel& md) const {
  if (sample_points.empty()) return md.default_sample_points(default_points);
  std::vector<SamplePoint> pts;
  for (const auto& flat : sample_points) {
    if (static_cast<long>(flat.size()) != 2 * md.dimension())
      fail(Errc::config_error, "samplePoints: wrong arity for the model dimension");
    std::vector<cdx> coords;
    for (size_t q = 0; q + 1 < flat.size(); q += 2) coords.emplace_back(flat[q], flat[q + 1]);
    pts.push_back(md.make_point(std::move(coords)));
  }
  return pts;
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace bol

// Command-line front end over the bol C API: weight-table generation and
// checks, raw Bergman tables, expansion verification, calibration.
//
// Exit codes: 0 success; 1 verify tolerances failed; 2 not Schur positive;
// 3 order/moment condition failed; 4 config error; 5 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bol/bol.h"

namespace {

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { bol_string_free(s); }
};

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream os;
  os << in.rdbuf();
  ok = true;
  return os.str();
}

int fail_with(const char* what, int code) {
  std::cerr << what << ": " << bol_last_error() << "\n";
  return code;
}

std::vector<long> parse_int_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

int cmd_weights_gen(long d, long p, long ord, long require_order, bool as_json) {
  bol_weights* w = nullptr;
  if (bol_weights_rank2(d, p, &w) != BOL_OK) return fail_with("weights gen", 4);
  StringGuard table_json;
  bol_weights_to_json(w, &table_json.s);

  bol_status schur = bol_weights_schur_verify(w);
  long min_order = -1;
  if (ord > 0 && bol_weights_min_order(w, ord, &min_order) != BOL_OK) {
    bol_weights_free(w);
    return fail_with("weights gen: min order", 5);
  }
  bol_weights_free(w);

  if (as_json) {
    nlohmann::json j;
    j["table"] = nlohmann::json::parse(table_json.s);
    j["schurVerified"] = schur == BOL_OK;
    if (ord > 0) j["minOrder"] = min_order == -1 ? nlohmann::json("infinite") : nlohmann::json(min_order);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << table_json.s << "\n";
    std::cout << "schur-decomposition: " << (schur == BOL_OK ? "verified" : "FAILED") << "\n";
    if (ord > 0) {
      std::cout << "hypothesis min order (ord " << ord << "): ";
      if (min_order == -1)
        std::cout << "infinite\n";
      else
        std::cout << min_order << "\n";
    }
  }
  if (schur != BOL_OK) return 2;
  if (require_order > 0 && ord > 0 && min_order != -1 && min_order < require_order) {
    std::cerr << "hypothesis order " << min_order << " below required " << require_order << "\n";
    return 3;
  }
  return 0;
}

int cmd_weights_check_cyclic(long m, long L, const std::string& c_list) {
  nlohmann::json j;
  j["kind"] = "cyclic";
  auto entries = nlohmann::json::array();
  auto cs = parse_int_list(c_list);
  for (size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0) entries.push_back({static_cast<long>(i), std::to_string(cs[i])});
  j["entries"] = entries;
  bol_weights* w = nullptr;
  if (bol_weights_from_json(j.dump().c_str(), &w) != BOL_OK)
    return fail_with("weights check-cyclic", 4);
  int ok = 0;
  bol_status st = bol_weights_check_cyclic(w, m, L, &ok);
  bol_weights_free(w);
  if (st != BOL_OK) return fail_with("weights check-cyclic", 5);
  std::cout << "moment condition (m=" << m << ", L=" << L << "): " << (ok ? "holds" : "fails")
            << "\n";
  return ok ? 0 : 3;
}

int cmd_weights_order(long d, long p, long ord, long require_order) {
  bol_weights* w = nullptr;
  if (bol_weights_rank2(d, p, &w) != BOL_OK) return fail_with("weights order", 4);
  long min_order = -1;
  bol_status st = bol_weights_min_order(w, ord, &min_order);
  bol_weights_free(w);
  if (st != BOL_OK) return fail_with("weights order", 5);
  if (min_order == -1)
    std::cout << "infinite\n";
  else
    std::cout << min_order << "\n";
  if (require_order > 0 && min_order != -1 && min_order < require_order) return 3;
  return 0;
}

std::string apply_thread_override(const std::string& config_text, int threads, bool has_threads) {
  if (!has_threads) return config_text;
  auto j = nlohmann::json::parse(config_text);
  j["threads"] = threads;
  return j.dump();
}

int cmd_verify(const std::string& path, int threads, bool has_threads) {
  bool ok = false;
  std::string text = read_file(path, ok);
  if (!ok) {
    std::cerr << "verify: cannot read config " << path << "\n";
    return 4;
  }
  try {
    text = apply_thread_override(text, threads, has_threads);
  } catch (const std::exception& e) {
    std::cerr << "verify: config parse error: " << e.what() << "\n";
    return 4;
  }
  bol_report* rep = nullptr;
  bol_status st = bol_verify_run(text.c_str(), &rep);
  if (st == BOL_E_CONFIG) return fail_with("verify: config error", 4);
  if (st != BOL_OK) return fail_with("verify", 5);
  StringGuard rtext, rjson;
  bol_report_text(rep, &rtext.s);
  std::cerr << rtext.s;
  auto cfg = nlohmann::json::parse(text);
  bool has_json_output = cfg.contains("output") && cfg["output"].contains("reportJson") &&
                         !cfg["output"]["reportJson"].get<std::string>().empty();
  if (!has_json_output) {
    bol_report_json(rep, &rjson.s);
    std::cout << rjson.s;
  }
  int code = bol_report_exit_code(rep);
  bol_report_free(rep);
  return code;
}

int cmd_table(const std::string& path, const std::string& quantity, long i,
              const std::string& format, const std::string& out_path, int threads,
              bool has_threads) {
  bool ok = false;
  std::string text = read_file(path, ok);
  if (!ok) {
    std::cerr << "table: cannot read config " << path << "\n";
    return 4;
  }
  try {
    text = apply_thread_override(text, threads, has_threads);
  } catch (const std::exception& e) {
    std::cerr << "table: config parse error: " << e.what() << "\n";
    return 4;
  }
  StringGuard data;
  bol_status st = bol_table_run(text.c_str(), quantity.c_str(), i, format.c_str(), &data.s);
  if (st == BOL_E_CONFIG) return fail_with("table: config error", 4);
  if (st != BOL_OK) return fail_with("table", 5);
  if (out_path.empty()) {
    std::cout << data.s;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "table: cannot write " << out_path << "\n";
      return 4;
    }
    out << data.s;
  }
  return 0;
}

int cmd_calibrate(bool as_json) {
  StringGuard j, t;
  int ok = 0;
  if (bol_calibrate_run(&j.s, &t.s, &ok) != BOL_OK) return fail_with("calibrate", 5);
  std::cout << (as_json ? j.s : t.s);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted orbifold Bergman expansions"};
  app.require_subcommand(1);

  // weights gen | check-cyclic | order
  auto* weights = app.add_subcommand("weights", "weight-table generation and checks");
  weights->require_subcommand(1);

  long d = 1, p = 1, ord = 0, require_order = 0;
  bool as_json = false;
  auto* gen = weights->add_subcommand("gen", "generate the rank-2 table for (d, p)");
  gen->add_option("--d", d, "degree parameter")->required();
  gen->add_option("--p", p, "power parameter")->required();
  gen->add_option("--ord", ord, "evaluate the hypothesis min order at this ord");
  gen->add_option("--require-order", require_order, "exit 3 if the min order is below this");
  gen->add_flag("--json", as_json, "single JSON object output");

  long cm = 2, cL = 0;
  std::string c_list;
  auto* chk = weights->add_subcommand("check-cyclic", "check the cyclic moment condition");
  chk->add_option("--m", cm, "ord of the cyclic group")->required();
  chk->add_option("--L", cL, "maximal moment exponent")->required();
  chk->add_option("--c", c_list, "comma-separated weights c_0,c_1,...")->required();

  long od = 1, op = 1, oord = 2, oreq = 0;
  auto* order = weights->add_subcommand("order", "hypothesis min order for (d, p)");
  order->add_option("--d", od, "degree parameter")->required();
  order->add_option("--p", op, "power parameter")->required();
  order->add_option("--ord", oord, "root-of-unity order")->required();
  order->add_option("--require-order", oreq, "exit 3 if below");

  std::string tbl_config, tbl_quantity = "borb", tbl_format = "csv", tbl_out;
  long tbl_i = 0;
  int threads = 0;
  auto* table = app.add_subcommand("table", "raw Bergman tables without fitting");
  table->add_option("--config", tbl_config, "experiment config JSON path")->required();
  table->add_option("--quantity", tbl_quantity, "borb | bik_trace");
  table->add_option("--i", tbl_i, "symmetric power for bik_trace");
  table->add_option("--format", tbl_format, "csv | json");
  table->add_option("--out", tbl_out, "write to file instead of stdout");
  auto* tbl_threads_opt = table->add_option("--threads", threads, "worker thread count");

  std::string verify_config;
  auto* verify = app.add_subcommand("verify", "run the expansion verification pipeline");
  verify->add_option("config", verify_config, "experiment config JSON path")->required();
  auto* ver_threads_opt = verify->add_option("--threads", threads, "worker thread count");

  bool cal_json = false;
  auto* calibrate = app.add_subcommand("calibrate", "smooth-model convention checks");
  calibrate->add_flag("--json", cal_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) return cmd_weights_gen(d, p, ord, require_order, as_json);
  if (chk->parsed()) return cmd_weights_check_cyclic(cm, cL, c_list);
  if (order->parsed()) return cmd_weights_order(od, op, oord, oreq);
  if (table->parsed())
    return cmd_table(tbl_config, tbl_quantity, tbl_i, tbl_format, tbl_out, threads,
                     tbl_threads_opt->count() > 0);
  if (verify->parsed()) return cmd_verify(verify_config, threads, ver_threads_opt->count() > 0);
  if (calibrate->parsed()) return cmd_calibrate(cal_json);
  return 0;
}

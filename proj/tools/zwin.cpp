#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zwin/hardy/main_sum.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"
#include "zwin/pipeline/config.hpp"
#include "zwin/pipeline/identity_suite.hpp"
#include "zwin/pipeline/scenario.hpp"
#include "zwin/pipeline/tables.hpp"

using namespace zwin;

namespace {

struct Output {
  std::string path;
  std::string format;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << text;
    if (!out) throw IoError(path + ": write failed");
  }
  void emit(const nlohmann::json& j) const { emit(j.dump(2) + "\n"); }
};

// CLI flag if given, else config key, else fallback.
std::string pick(const CLI::Option* opt, const std::string& cli, const Config& cfg, const std::string& key,
                 const std::string& fallback) {
  if (opt->count() > 0) return cli;
  return cfg.get_or(key, fallback);
}

long to_long(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ContractError(std::string("bad integer for ") + what + ": '" + s + "'");
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ContractError(std::string("bad number for ") + what + ": '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd-derivative coefficients of Hardy's Z around large peaks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path, format, config_path, threads_s;
  app.add_option("--out", out_path, "Write the result to FILE instead of stdout");
  auto* o_format = app.add_option("--format", format, "csv or json (default: csv for tables, json otherwise)")
                       ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", config_path, "key=value configuration file");
  auto* o_threads = app.add_option("--threads", threads_s, "Worker threads");

  std::string t1_T, t1_a, t1_K;
  bool t1_no_detect = false;
  auto* table1 = app.add_subcommand("table1", "Coefficient table for the fixed window at T = 7.19e14");
  auto* o_t1_T = table1->add_option("--T", t1_T, "Window centre");
  auto* o_t1_a = table1->add_option("--a", t1_a, "Half width");
  auto* o_t1_K = table1->add_option("--K", t1_K, "Rows");
  table1->add_flag("--no-detect", t1_no_detect, "Skip the boundary/peak search");

  std::string t2_zeros, t2_samples;
  auto* table2 = app.add_subcommand("table2", "Coefficient table from ingested zero offsets");
  auto* o_t2_zeros = table2->add_option("--zeros", t2_zeros, "Zero offset file");
  auto* o_t2_samples = table2->add_option("--samples", t2_samples, "(t - T, Z(t)) samples for low-order d");

  std::string sc_T, sc_c, sc_model, sc_peak, sc_K, sc_rule;
  auto* scenario = app.add_subcommand("scenario", "Bounds at a symbolic height under a growth hypothesis");
  auto* o_sc_T = scenario->add_option("--T", sc_T, "<mantissa>e<exp>");
  auto* o_sc_c = scenario->add_option("--c", sc_c, "c in (0, 1)");
  auto* o_sc_model = scenario->add_option("--model", sc_model, "a1, a2 or a3");
  auto* o_sc_peak = scenario->add_option("--peak", sc_peak, "fgh or bs");
  auto* o_sc_K = scenario->add_option("--K", sc_K, "Default floor(7 theta'/8)");
  auto* o_sc_rule = scenario->add_option("--n-rule", sc_rule, "floor or odd");

  std::string ds_T, ds_a;
  auto* deltaS = app.add_subcommand("deltaS", "Zero count against the smooth count across a window");
  auto* o_ds_T = deltaS->add_option("--T", ds_T, "Window centre");
  auto* o_ds_a = deltaS->add_option("--a", ds_a, "Half width");

  std::string vi_n, vi_r, vi_trials, vi_seed;
  auto* verify = app.add_subcommand("verify-identity", "Check the Bernoulli-kernel identity on random instances");
  auto* o_vi_n = verify->add_option("--n", vi_n, "Nodes minus one");
  auto* o_vi_r = verify->add_option("--r", vi_r, "Highest kernel index");
  auto* o_vi_trials = verify->add_option("--trials", vi_trials, "Instances");
  auto* o_vi_seed = verify->add_option("--seed", vi_seed, "RNG seed");

  std::string z_t, z_k;
  auto* zcmd = app.add_subcommand("z", "Main-sum value of Z^(k)(t)");
  auto* o_z_t = zcmd->add_option("--t", z_t, "Height");
  auto* o_z_k = zcmd->add_option("--k", z_k, "Derivative order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Config cfg = config_path.empty() ? Config{} : Config::load(config_path);
    const unsigned threads = static_cast<unsigned>(to_long(pick(o_threads, threads_s, cfg, "threads", "1"), "threads"));
    if (threads < 1) throw ContractError("threads must be positive");
    const bool table_cmd = table1->parsed() || table2->parsed();
    Output out{pick(app.get_option("--out"), out_path, cfg, "out", ""),
               pick(o_format, format, cfg, "format", table_cmd ? "csv" : "json")};

    if (table1->parsed()) {
      Table1Options opt;
      opt.T = pick(o_t1_T, t1_T, cfg, "T", opt.T);
      opt.a = pick(o_t1_a, t1_a, cfg, "a", opt.a);
      opt.K = to_long(pick(o_t1_K, t1_K, cfg, "K", "5"), "K");
      opt.detect_window = !t1_no_detect && cfg.get_or("detect_window", "true") != "false";
      opt.threads = threads;
      const Table1Report r = run_table1(opt);
      if (out.format == "json") {
        out.emit(to_json(r));
      } else {
        out.emit(to_csv(r.table));
        std::cerr << "n=" << r.table.n << " e_{2K,n}=" << r.table.e_bound.to_string(8);
        if (r.table.lhs_over_e) std::cerr << " lhs/e=" << *r.table.lhs_over_e;
        if (r.peak_offset) std::cerr << " T_M-T=" << *r.peak_offset << " Z(T_M)=" << *r.z_peak;
        std::cerr << "\n";
      }
    } else if (table2->parsed()) {
      const auto zeros = o_t2_zeros->count() ? std::optional<std::string>(t2_zeros) : cfg.get("zeros");
      if (!zeros) {
        throw IoError("table2: --zeros FILE is required; the zero offsets near T = 3.92e31 are external data "
                      "and are not bundled");
      }
      std::optional<std::string> samples = o_t2_samples->count() ? std::optional<std::string>(t2_samples)
                                                                   : cfg.get("samples");
      const Table2Report r = run_table2(*zeros, samples);
      for (const auto& note : r.notes) std::cerr << "note: " << note << "\n";
      if (out.format == "json") out.emit(to_json(r));
      else out.emit(to_csv(r.table));
    } else if (scenario->parsed()) {
      GrowthModel model;
      model.variant = parse_growth(pick(o_sc_model, sc_model, cfg, "model", "a2"));
      model.peak = parse_peak(pick(o_sc_peak, sc_peak, cfg, "peak", "fgh"));
      model.c = PrecReal::parse(pick(o_sc_c, sc_c, cfg, "c", "0.25"), 256);
      ScenarioOptions opt;
      opt.threads = threads;
      if (auto k = o_sc_K->count() ? std::optional<std::string>(sc_K) : cfg.get("K")) opt.K = to_long(*k, "K");
      const std::string rule = pick(o_sc_rule, sc_rule, cfg, "n_rule", "floor");
      if (rule == "odd") opt.n_rule = NRule::NearestOdd;
      else if (rule != "floor") throw ContractError("n-rule must be floor or odd");
      const ScenarioReport r = run_scenario(ScaledDecimal::parse(pick(o_sc_T, sc_T, cfg, "T", "1e20000")), model, opt);
      if (out.format == "json") out.emit(to_json(r));
      else out.emit(to_csv(r));
    } else if (deltaS->parsed()) {
      const std::string ts = pick(o_ds_T, ds_T, cfg, "T", "");
      if (ts.empty()) throw ContractError("deltaS: --T is required");
      const PrecReal T = PrecReal::parse(ts, 192);
      const DeltaSReport r = run_deltaS(T, to_double(pick(o_ds_a, ds_a, cfg, "a", "0.5"), "a"), threads);
      out.emit(to_json(r));
    } else if (verify->parsed()) {
      IdentitySuiteOptions opt;
      if (auto v = o_vi_n->count() ? std::optional<std::string>(vi_n) : cfg.get("n")) opt.n = static_cast<int>(to_long(*v, "n"));
      if (auto v = o_vi_r->count() ? std::optional<std::string>(vi_r) : cfg.get("r")) opt.r = static_cast<int>(to_long(*v, "r"));
      opt.trials = static_cast<int>(to_long(pick(o_vi_trials, vi_trials, cfg, "trials", "200"), "trials"));
      opt.seed = static_cast<std::uint64_t>(to_long(pick(o_vi_seed, vi_seed, cfg, "seed", "1"), "seed"));
      const IdentitySuiteResult r = run_identity_suite(opt);
      out.emit(to_json(r));
      if (r.passed != static_cast<int>(r.trials.size())) return 1;
    } else if (zcmd->parsed()) {
      const std::string ts = pick(o_z_t, z_t, cfg, "t", "");
      if (ts.empty()) throw ContractError("z: --t is required");
      const int k = static_cast<int>(to_long(pick(o_z_k, z_k, cfg, "k", "0"), "k"));
      PrecReal t = PrecReal::parse(ts, 256);
      t = PrecReal::parse(ts, std::max<Bits>(256, phase_precision(t)));
      ZEvalConfig zc;
      zc.max_k = k;
      zc.threads = threads;
      const PrecReal v = z_deriv(t, k, zc);
      out.emit(nlohmann::json{{"t", ts}, {"k", k}, {"value", v.to_string(17)}, {"terms", main_sum_terms(t)}});
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

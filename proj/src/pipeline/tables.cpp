#include "zwin/pipeline/tables.hpp"

#include <cmath>

#include "zwin/hardy/ingest.hpp"
#include "zwin/hardy/main_sum.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"

namespace zwin {

namespace {

constexpr Bits kTableBits = 192;

nlohmann::json window_json(const Window& w) {
  nlohmann::json offs = nlohmann::json::array();
  for (double o : w.offsets) offs.push_back(o);
  return {{"T", w.T.to_string(25)},
          {"a", w.a.to_string(17)},
          {"n", w.n()},
          {"offsets", offs},
          {"zprime_max_plus", w.zprime_max_plus},
          {"zprime_max_minus", w.zprime_max_minus}};
}

}  // namespace

Table1Report run_table1(const Table1Options& opt) {
  if (opt.K < 1) throw ContractError("table1: K must be positive");
  Table1Report r;
  const PrecReal T = PrecReal::parse(opt.T, kTableBits);
  const PrecReal a_exact = PrecReal::parse(opt.a, kTableBits);
  if (!(a_exact > 0.0)) throw DomainError("table1: a must be positive");
  const double a = a_exact.to_double();
  ZEvalConfig cfg;
  cfg.max_k = static_cast<int>(2 * opt.K);
  cfg.threads = opt.threads;
  HardyEvaluator ev(T, std::max(3.0, 2 * a), cfg);
  const DerivativeFn f = derivative_fn(ev);

  int sgn = ev.z(0.0) >= 0 ? 1 : -1;
  if (opt.detect_window) {
    BoundarySearch bs;
    bs.min_n = opt.min_n;
    Window d = find_boundary_and_peak(ev, 0.0, bs);
    r.peak_offset = (d.T - T).to_double() + d.peak_offset;
    r.z_peak = d.z_peak;
    sgn = d.z_peak >= 0 ? 1 : -1;
    r.detected = std::move(d);
  }

  Window& w = r.window;
  w.T = T;
  w.a = a_exact;
  w.offsets = find_zeros(ev, -a, a).offsets;
  if (w.offsets.size() % 2 != 0 || w.offsets.empty()) {
    throw WindowRejected("table1: " + std::to_string(w.offsets.size()) +
                         " zeros in the window; an even count (n odd) is required");
  }
  w.zprime_max_plus = derivative_local_max_near(f, a, sgn, 1e-4);
  w.zprime_max_minus = derivative_local_max_near(f, -a, sgn, 1e-4);
  if (r.peak_offset) {
    w.peak_offset = *r.peak_offset;
    w.z_peak = *r.z_peak;
  }

  const int top = static_cast<int>(2 * opt.K - 1);
  const auto dp = ev.derivatives(a, top);
  const auto dm = ev.derivatives(-a, top);
  std::vector<OptReal> plus, minus;
  for (long k = 1; k <= opt.K; ++k) {
    r.derivs_plus.push_back(dp[2 * k - 1]);
    r.derivs_minus.push_back(dm[2 * k - 1]);
    plus.emplace_back(PrecReal(dp[2 * k - 1], kTableBits));
    minus.emplace_back(PrecReal(dm[2 * k - 1], kTableBits));
  }
  r.table = coeff_table(w, opt.K, plus, minus);
  r.sine = mean_sine_check(w);
  return r;
}

nlohmann::json to_json(const Table1Report& r) {
  nlohmann::json j = {{"window", window_json(r.window)}, {"table", to_json(r.table)}, {"mean_sine", to_json(r.sine)}};
  nlohmann::json dp = nlohmann::json::array(), dm = nlohmann::json::array();
  for (std::size_t i = 0; i < r.derivs_plus.size(); ++i) {
    dp.push_back({{"order", 2 * i + 1}, {"value", r.derivs_plus[i]}});
    dm.push_back({{"order", 2 * i + 1}, {"value", r.derivs_minus[i]}});
  }
  j["derivatives_plus"] = dp;
  j["derivatives_minus"] = dm;
  if (r.detected) {
    j["detected_window"] = window_json(*r.detected);
    j["peak_offset"] = *r.peak_offset;
    j["z_peak"] = *r.z_peak;
  }
  return j;
}

Table2Report run_table2(const std::string& zero_file, const std::optional<std::string>& sample_file,
                        const Table2Options& opt) {
  const ZeroList zl = read_zero_list(zero_file);
  Table2Report r;
  Window& w = r.window;
  w.T = zl.T;
  const double a = zl.a.value_or(opt.a);
  const long K = zl.K.value_or(opt.K);
  if (!zl.a) r.notes.push_back("a not in file header; using " + std::to_string(opt.a));
  if (!zl.K) r.notes.push_back("K not in file header; using " + std::to_string(opt.K));
  w.a = PrecReal(a, kTableBits);
  w.offsets = zl.offsets;
  try {
    w.validate();
  } catch (const ConsistencyError& e) {
    throw IoError(zero_file + ": zero offsets do not form a window: " + e.what());
  }

  std::vector<OptReal> plus(K), minus(K);
  if (sample_file) {
    const SampleSet s = read_samples(*sample_file);
    if (s.T && abs(*s.T - zl.T) > 1e-6) throw IoError(*sample_file + ": T header does not match the zero file");
    for (long k = 1; k <= K && 2 * k - 1 <= opt.max_fd_order; ++k) {
      plus[k - 1] = PrecReal(fd_derivative(s, a, static_cast<int>(2 * k - 1), opt.stencil), kTableBits);
      minus[k - 1] = PrecReal(fd_derivative(s, -a, static_cast<int>(2 * k - 1), opt.stencil), kTableBits);
    }
    r.notes.push_back("d for orders <= " + std::to_string(opt.max_fd_order) + " from " +
                      std::to_string(opt.stencil) + "-point finite differences; higher orders not available");
  } else {
    r.notes.push_back("no samples given; d columns not available");
  }
  r.table = coeff_table(w, K, plus, minus);
  return r;
}

nlohmann::json to_json(const Table2Report& r) {
  return {{"window", window_json(r.window)}, {"table", to_json(r.table)}, {"notes", r.notes}};
}

DeltaSReport run_deltaS(const PrecReal& T, double a, unsigned threads) {
  if (!(a > 0.0)) throw DomainError("deltaS: a must be positive");
  DeltaSReport r;
  r.T = T;
  r.a = PrecReal(a, T.precision());
  ZEvalConfig cfg;
  cfg.max_k = 1;
  cfg.threads = threads;
  HardyEvaluator ev(T, a, cfg);
  const ZeroScan zs = find_zeros(ev, -a, a);
  r.offsets = zs.offsets;
  r.smooth_count = zs.smooth_count;
  r.delta_s = static_cast<double>(zs.offsets.size()) - zs.smooth_count;
  r.odd_n = !zs.offsets.empty() && zs.offsets.size() % 2 == 0;
  if (r.odd_n) {
    Window w;
    w.T = T;
    w.a = r.a;
    w.offsets = zs.offsets;
    r.sine = mean_sine_check(w, r.delta_s);
  }
  return r;
}

nlohmann::json to_json(const DeltaSReport& r) {
  nlohmann::json offs = nlohmann::json::array();
  for (double o : r.offsets) offs.push_back(o);
  nlohmann::json j = {{"T", r.T.to_string(25)},
                      {"a", r.a.to_string(17)},
                      {"zero_count", r.offsets.size()},
                      {"offsets", offs},
                      {"smooth_count", r.smooth_count},
                      {"delta_s", r.delta_s},
                      {"n_odd", r.odd_n}};
  if (r.sine) j["mean_sine"] = to_json(*r.sine);
  return j;
}

}  // namespace zwin

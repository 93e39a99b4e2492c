#include "zwin/pipeline/scenario.hpp"

#include <sstream>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"
#include "zwin/psi/bounds.hpp"

namespace zwin {

namespace {

constexpr Bits kScenarioBits = 256;

}  // namespace

ScenarioReport run_scenario(const ScaledDecimal& T, const GrowthModel& model, const ScenarioOptions& opt) {
  if (!(model.c > 0.0 && model.c < 1.0)) throw ContractError("scenario: c must lie in (0, 1)");
  ScenarioReport r;
  r.T = T;
  r.model = model;
  // log(T + a) - log T = O(a / T) is below every precision in use.
  const IteratedLogs L = IteratedLogs::from_log(T.log(kScenarioBits));
  r.a = scenario_a(L);
  const PrecReal Tv = T.value(kScenarioBits);
  r.theta_prime = theta_prime(Tv);
  r.K = opt.K ? *opt.K : static_cast<long>(floor(r.theta_prime * 7.0 / 8.0).to_double());
  r.M_plus = growth_value(model.variant, L);
  const PrecReal zero(0L, kScenarioBits);
  const PhiCResult phi = phi_c(Tv, r.a, r.M_plus, model.c.with_precision(kScenarioBits), zero, zero, opt.n_rule,
                               opt.threads);
  r.n = phi.n;
  r.J = phi.solution.J;
  r.L = phi.solution.L;
  r.plateau = phi.solution.plateau;
  r.feasible_candidates = phi.solution.feasible_candidates;
  r.beta1 = phi.beta1_lower;
  r.peak = peak_magnitude(model.peak, L);
  r.d1 = d1_lower(r.peak, r.M_plus);
  r.e = e_bound(r.K, r.n, Tv, r.a);
  r.product = r.beta1 * r.d1;
  return r;
}

nlohmann::json to_json(const ScenarioReport& r) {
  auto lm = [](const LogMag& v) {
    return nlohmann::json{{"value", v.to_string(12)}, {"log10", v.log10_abs().to_string(20)}, {"sign", v.sign()}};
  };
  return {{"T", r.T.to_string()},
          {"c", r.model.c.to_string(20)},
          {"model", to_string(r.model.variant)},
          {"peak_conjecture", to_string(r.model.peak)},
          {"a", r.a.to_string(30)},
          {"theta_prime", r.theta_prime.to_string(30)},
          {"K", r.K},
          {"n", r.n},
          {"M_plus", r.M_plus.to_string(30)},
          {"solution", {{"J", r.J}, {"L", r.L}, {"plateau", r.plateau.to_string(30)},
                        {"feasible_candidates", r.feasible_candidates}}},
          {"beta1_plus_lower", lm(r.beta1)},
          {"peak_magnitude", lm(r.peak)},
          {"d1_plus_lower", lm(r.d1)},
          {"e_2K_n", lm(r.e)},
          {"beta1_d1_product", lm(r.product)},
          {"note", "O() and o() terms dropped; T + a replaced by T in the growth and peak formulas"}};
}

std::string to_csv(const ScenarioReport& r) {
  std::ostringstream os;
  os << "quantity,value,log10\n";
  auto row = [&](const char* name, const LogMag& v) {
    os << name << ',' << v.to_string(6) << ',' << v.log10_abs().to_string(10) << '\n';
  };
  os << "n," << r.n << ",\nK," << r.K << ",\na," << r.a.to_string(6) << ",\nM_plus," << r.M_plus.to_string(6) << ",\n";
  row("beta1_plus", r.beta1);
  row("d1_plus", r.d1);
  row("e_2K_n", r.e);
  row("product", r.product);
  return os.str();
}

}  // namespace zwin

#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"
#include "zwin/optim/phi_c.hpp"
#include "zwin/pipeline/growth.hpp"

namespace zwin {

struct ScenarioOptions {
  // Default floor(7 theta'(T) / 8).
  std::optional<long> K;
  NRule n_rule = NRule::Floor;
  unsigned threads = 1;
};

struct ScenarioReport {
  ScaledDecimal T;
  GrowthModel model;
  PrecReal a{kDefaultBits};
  PrecReal theta_prime{kDefaultBits};
  long K = 0;
  long n = 0;
  PrecReal M_plus{kDefaultBits};
  long J = 0;
  long L = 0;
  PrecReal plateau{kDefaultBits};
  long feasible_candidates = 0;
  LogMag beta1;
  LogMag peak;
  LogMag d1;
  LogMag e;
  // beta1 * d1.
  LogMag product;
};

// a = log3 T / log2 T, M_+ = A(T + a), beta_1^+ from phi_c, d_1^+ from the peak
// conjecture, e_{2K,n}; O() and o() terms dropped throughout.
ScenarioReport run_scenario(const ScaledDecimal& T, const GrowthModel& model, const ScenarioOptions& opt = {});

nlohmann::json to_json(const ScenarioReport& r);
// Bound table: quantity, value, log10.
std::string to_csv(const ScenarioReport& r);

}  // namespace zwin

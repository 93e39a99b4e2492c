#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zwin/hardy/window.hpp"
#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

using OptReal = std::optional<PrecReal>;

// Rows k = 1..K of alpha, beta and d at both window ends.
struct CoeffTable {
  long K = 0;
  long n = 0;
  PrecReal T{kDefaultBits};
  PrecReal a{kDefaultBits};
  PrecReal theta_prime{kDefaultBits};
  std::vector<PrecReal> alpha_plus, alpha_minus;
  std::vector<PrecReal> beta_plus, beta_minus;
  // Missing when the derivative was not supplied.
  std::vector<OptReal> d_plus, d_minus;
  LogMag e_bound;
  // Present only when every d is known.
  OptReal lhs;
  std::optional<double> lhs_over_e;

  bool complete() const { return lhs.has_value(); }
};

// derivs_plus[k-1] = Z^(2k-1)(T + a), derivs_minus[k-1] = Z^(2k-1)(T - a);
// shorter vectors or empty entries leave rows without d.  Throws
// ConsistencyError on a non-positive beta (odd n) or on lhs > e.
CoeffTable coeff_table(const Window& win, long K, const std::vector<OptReal>& derivs_plus,
                       const std::vector<OptReal>& derivs_minus);

// Columns 2k-1, beta+, d+, beta-, d-; 6 significant digits, "NA" for missing.
std::string to_csv(const CoeffTable& t);
// Full-precision decimal strings.
nlohmann::json to_json(const CoeffTable& t);

struct MeanSineCheck {
  double sine_sum = 0.0;
  // (n + 1) - (theta(T + a) - theta(T - a)) / pi.
  double delta_s = 0.0;
  double smooth_count = 0.0;
  long zero_count = 0;
  // |zero_count - round(smooth_count)| <= |delta_s| + 1/2.
  bool count_consistent = false;
};

MeanSineCheck mean_sine_check(const Window& win, std::optional<double> delta_s_estimate = std::nullopt);
nlohmann::json to_json(const MeanSineCheck& m);

}  // namespace zwin

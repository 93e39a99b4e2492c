#include "zwin/psi/coeff_table.hpp"

#include <cmath>
#include <sstream>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"
#include "zwin/psi/bounds.hpp"
#include "zwin/psi/psi.hpp"

namespace zwin {

CoeffTable coeff_table(const Window& win, long K, const std::vector<OptReal>& derivs_plus,
                       const std::vector<OptReal>& derivs_minus) {
  win.validate();
  CoeffTable t;
  t.K = K;
  t.n = win.n();
  if (K < t.n + 1) throw ContractError("coeff_table: requires K >= n + 1");
  const Bits bits = std::max<Bits>(kDefaultBits, win.T.precision());
  t.T = win.T.with_precision(bits);
  t.a = win.a.with_precision(kDefaultBits);
  t.theta_prime = theta_prime(t.T).with_precision(kDefaultBits);

  std::vector<PrecReal> nodes;
  for (double o : win.offsets) nodes.emplace_back(o, kDefaultBits);
  const NodeSet ns(t.a, nodes);

  bool all_d = true;
  PrecReal sum(kDefaultBits);
  PrecReal tp_pow = t.theta_prime;
  const PrecReal tp2 = t.theta_prime * t.theta_prime;
  for (long k = 1; k <= K; ++k) {
    const int sgn = (k % 2 == 1) ? 1 : -1;
    PrecReal ap = psi(static_cast<int>(k), ns, t.a);
    PrecReal am = -psi(static_cast<int>(k), ns, -t.a);
    PrecReal bp = ap * tp_pow * sgn;
    PrecReal bm = am * tp_pow * sgn;
    if (t.n % 2 == 1 && !(bp > 0.0 && bm > 0.0)) {
      throw ConsistencyError("coeff_table: non-positive beta at k = " + std::to_string(k) + " (beta+ = " +
                             bp.to_string(8) + ", beta- = " + bm.to_string(8) + ")");
    }
    auto d_of = [&](const std::vector<OptReal>& src) -> OptReal {
      if (static_cast<std::size_t>(k) > src.size() || !src[k - 1]) return std::nullopt;
      return (*src[k - 1]).with_precision(kDefaultBits) / tp_pow * sgn;
    };
    OptReal dp = d_of(derivs_plus);
    OptReal dm = d_of(derivs_minus);
    if (dp && dm) {
      sum += bp * *dp + bm * *dm;
    } else {
      all_d = false;
    }
    t.alpha_plus.push_back(std::move(ap));
    t.alpha_minus.push_back(std::move(am));
    t.beta_plus.push_back(std::move(bp));
    t.beta_minus.push_back(std::move(bm));
    t.d_plus.push_back(std::move(dp));
    t.d_minus.push_back(std::move(dm));
    tp_pow *= tp2;
  }
  t.e_bound = e_bound(K, t.n, t.T, t.a);
  if (all_d) {
    t.lhs = abs(sum);
    const double ratio = std::pow(10.0, LogMag::from(*t.lhs).log10_double() - t.e_bound.log10_double());
    t.lhs_over_e = t.lhs->is_zero() ? 0.0 : ratio;
    if (*t.lhs_over_e > 1.0) {
      throw ConsistencyError("coeff_table: lhs " + t.lhs->to_string(8) + " exceeds e = " + t.e_bound.to_string(8));
    }
  }
  return t;
}

namespace {

std::string sig6(const PrecReal& x) {
  std::ostringstream os;
  os.precision(6);
  os << x.to_double();
  return os.str();
}

std::string opt6(const OptReal& x) { return x ? sig6(*x) : "NA"; }

nlohmann::json full(const OptReal& x) { return x ? nlohmann::json(x->to_string()) : nlohmann::json(nullptr); }

}  // namespace

std::string to_csv(const CoeffTable& t) {
  std::ostringstream os;
  os << "2k-1,beta_plus,d_plus,beta_minus,d_minus\n";
  for (long k = 1; k <= t.K; ++k) {
    const std::size_t i = k - 1;
    os << 2 * k - 1 << ',' << sig6(t.beta_plus[i]) << ',' << opt6(t.d_plus[i]) << ',' << sig6(t.beta_minus[i])
       << ',' << opt6(t.d_minus[i]) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const CoeffTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (long k = 1; k <= t.K; ++k) {
    const std::size_t i = k - 1;
    rows.push_back({{"order", 2 * k - 1},
                    {"alpha_plus", t.alpha_plus[i].to_string()},
                    {"alpha_minus", t.alpha_minus[i].to_string()},
                    {"beta_plus", t.beta_plus[i].to_string()},
                    {"beta_minus", t.beta_minus[i].to_string()},
                    {"d_plus", full(t.d_plus[i])},
                    {"d_minus", full(t.d_minus[i])}});
  }
  nlohmann::json j{{"K", t.K},
                   {"n", t.n},
                   {"T", t.T.to_string()},
                   {"a", t.a.to_string()},
                   {"theta_prime", t.theta_prime.to_string()},
                   {"rows", rows},
                   {"e_bound", t.e_bound.to_string(12)},
                   {"e_bound_log10", t.e_bound.log10_abs().to_string(20)},
                   {"lhs", full(t.lhs)}};
  j["lhs_over_e"] = t.lhs_over_e ? nlohmann::json(*t.lhs_over_e) : nlohmann::json(nullptr);
  return j;
}

MeanSineCheck mean_sine_check(const Window& win, std::optional<double> delta_s_estimate) {
  MeanSineCheck m;
  const double a = win.a.to_double();
  for (double o : win.offsets) m.sine_sum += std::sin(M_PI * o / (2 * a));
  const Bits bits = std::max<Bits>(phase_precision(win.T), win.T.precision());
  const PrecReal T = win.T.with_precision(bits);
  const PrecReal aa = win.a.with_precision(bits);
  m.smooth_count = ((theta(T + aa) - theta(T - aa)) / PrecReal::pi(bits)).to_double();
  m.zero_count = static_cast<long>(win.offsets.size());
  m.delta_s = static_cast<double>(m.zero_count) - m.smooth_count;
  const double slack = std::fabs(delta_s_estimate.value_or(m.delta_s)) + 0.5;
  m.count_consistent = std::fabs(static_cast<double>(m.zero_count) - std::round(m.smooth_count)) <= slack;
  return m;
}

nlohmann::json to_json(const MeanSineCheck& m) {
  return {{"sine_sum", m.sine_sum},
          {"delta_s", m.delta_s},
          {"smooth_count", m.smooth_count},
          {"zero_count", m.zero_count},
          {"count_consistent", m.count_consistent}};
}

}  // namespace zwin

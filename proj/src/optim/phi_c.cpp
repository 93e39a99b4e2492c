#include "zwin/optim/phi_c.hpp"

#include <cmath>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"

namespace zwin {

long window_n(const PrecReal& a, const PrecReal& theta_prime, const PrecReal& c, const PrecReal& M_plus,
              NRule rule) {
  const Bits bits = std::max(a.precision(), theta_prime.precision());
  const PrecReal x = a.with_precision(bits) * 2.0 / PrecReal::pi(bits) * theta_prime + c * M_plus;
  if (!(x >= 0.0)) throw DomainError("window_n: negative zero count");
  if (rule == NRule::Floor) return static_cast<long>(floor(x).to_double());
  // Nearest odd: 2 round((x - 1) / 2) + 1.
  const long h = static_cast<long>(round((x - 1.0) / 2.0).to_double());
  return 2 * h + 1;
}

PhiCResult phi_c(const PrecReal& T, const PrecReal& a, const PrecReal& M_plus, const PrecReal& c,
                 const PrecReal& r1, const PrecReal& r2, NRule rule, unsigned threads) {
  if (!(c > 0.0 && c < 1.0)) throw ContractError("phi_c: c must lie in (0, 1)");
  if (M_plus < 0.0) throw ContractError("phi_c: M_+ must be nonnegative");
  PhiCResult out;
  const Bits bits = std::max<Bits>(256, a.precision());
  out.theta_prime = theta_prime(T).with_precision(bits);
  out.n = window_n(a, out.theta_prime, c, M_plus, rule);
  if (out.n < 1) throw ContractError("phi_c: window holds fewer than two zeros");
  const PrecReal w = tau_scale(a.with_precision(bits), out.theta_prime);
  const PrecReal M = M_plus.with_precision(bits);
  ProblemP& p = out.problem;
  p.n = out.n;
  for (long k = 0; k <= out.n; ++k) {
    auto [lo, hi] = tau_bounds(k, w, M, r2.with_precision(bits));
    p.tau_minus.push_back(std::move(lo));
    p.tau_plus.push_back(std::move(hi));
  }
  p.target = c.with_precision(bits) * M * (r1.with_precision(bits) + 1.0);
  out.solution = solve_p(p, threads);
  out.beta1_lower = LogMag::from(a.with_precision(bits) * 4.0 * out.theta_prime) * out.solution.objective;
  return out;
}

LogMag beta1_simple_lower(long n, const PrecReal& a, const PrecReal& tbar, const PrecReal& T) {
  if (n < 1) throw ContractError("beta1_simple_lower: n must be >= 1");
  if (!(tbar > -1.0 && tbar < 1.0)) throw DomainError("beta1_simple_lower: tbar must lie in (-1, 1)");
  const Bits bits = std::max<Bits>(kDefaultBits, a.precision());
  const PrecReal tp = theta_prime(T).with_precision(bits);
  const PrecReal pi = PrecReal::pi(bits);
  const PrecReal head = tp * a.with_precision(bits) * 2.0 / (pi * pi * 3.0 * (static_cast<double>(n) * n));
  return LogMag::from(head) * LogMag::from(tbar.with_precision(bits) + 1.0).pow(PrecReal(n, bits));
}

nlohmann::json to_json(const PhiCResult& r) {
  return {{"n", r.n},
          {"theta_prime", r.theta_prime.to_string(30)},
          {"target_sum", r.problem.target.to_string(30)},
          {"solution", to_json(r.solution)},
          {"beta1_lower", r.beta1_lower.to_string(12)},
          {"beta1_lower_log10", r.beta1_lower.log10_abs().to_string(20)}};
}

}  // namespace zwin

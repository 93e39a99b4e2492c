#pragma once

#include "json.hpp"
#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"
#include "zwin/optim/problem_p.hpp"

namespace zwin {

enum class NRule {
  // floor((2a/pi) theta'(T) + c M_+)
  Floor,
  // nearest odd integer to the same quantity
  NearestOdd,
};

long window_n(const PrecReal& a, const PrecReal& theta_prime, const PrecReal& c, const PrecReal& M_plus,
              NRule rule = NRule::Floor);

struct PhiCResult {
  long n = 0;
  PrecReal theta_prime{kDefaultBits};
  ProblemP problem;
  SolutionP solution;
  // 4 a g* theta'(T).
  LogMag beta1_lower;
};

// Lower bound for beta_1^+.  target = c M_+ (1 + r1); r2 is the residual r in
// tau_+.  Both are zero in the default path.
PhiCResult phi_c(const PrecReal& T, const PrecReal& a, const PrecReal& M_plus, const PrecReal& c,
                 const PrecReal& r1, const PrecReal& r2, NRule rule = NRule::Floor, unsigned threads = 1);

// theta'(T) 2a (1 + tbar)^n / (3 pi^2 n^2).
LogMag beta1_simple_lower(long n, const PrecReal& a, const PrecReal& tbar, const PrecReal& T);

nlohmann::json to_json(const PhiCResult& r);

}  // namespace zwin

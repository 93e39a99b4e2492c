#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// min g*(y_0..y_n) over tau_-(k) <= y_k <= tau_+(k), y nondecreasing,
// sum y_k = target.
struct ProblemP {
  long n = 0;
  std::vector<PrecReal> tau_minus;
  std::vector<PrecReal> tau_plus;
  PrecReal target{kDefaultBits};

  // ContractError on malformed bounds, InfeasibleError when the target sum is
  // out of reach.
  void validate() const;
};

// tau_-(k) = -cos(max(w (k + 1 - M), 0)), tau_+(k) = -cos(min(w (k + 2 + r), pi)).
// Both arguments are held in [0, pi].
std::pair<PrecReal, PrecReal> tau_bounds(long k, const PrecReal& w, const PrecReal& M_plus,
                                         const PrecReal& r = PrecReal(0L, kDefaultBits));
// w = pi^2 / (2 a theta'(T)).
PrecReal tau_scale(const PrecReal& a, const PrecReal& theta_prime);

// f(t) = B_2(3/4 + asin(t) / (2 pi)).
PrecReal objective_f(const PrecReal& t);
// Divided difference of f over y (repeated nodes allowed) at fixed precision.
PrecReal objective_g_at(const std::vector<PrecReal>& y, Bits bits, unsigned threads = 1);
// Same, precision doubled from `start` (0: 4(n+1) bits, at least 128) until two
// results agree to 10 significant digits.
PrecReal objective_g_value(const std::vector<PrecReal>& y, Bits start = 0, unsigned threads = 1);
LogMag objective_g(const std::vector<PrecReal>& y, Bits start = 0, unsigned threads = 1);

struct CandidateP {
  long J = 0;
  long L = 0;
  PrecReal plateau{kDefaultBits};
  PrecReal objective{kDefaultBits};
};

struct SolutionP {
  long n = 0;
  long J = 0;
  long L = 0;
  PrecReal plateau{kDefaultBits};
  std::vector<PrecReal> y;
  PrecReal objective_value{kDefaultBits};
  LogMag objective;
  long feasible_candidates = 0;
  // Best feasible candidates by objective, at most 100.
  std::vector<CandidateP> audit;

  // ConsistencyError unless y has the tau_+ / plateau / tau_- shape, is
  // nondecreasing, within the bounds and sums to the target.
  void check(const ProblemP& p) const;
};

// Enumerates (J, L): y_k = tau_+(k) for k < J, plateau on J..L, tau_-(k)
// after L.  Ties go to the smallest J, then L.
SolutionP solve_p(const ProblemP& p, unsigned threads = 1);

nlohmann::json to_json(const SolutionP& s);

}  // namespace zwin

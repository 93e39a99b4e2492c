#include "zwin/optim/problem_p.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zwin/numkernel/divided_difference.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/scalar.hpp"
#include "zwin/numkernel/series.hpp"

namespace zwin {

namespace {

Bits working_bits(const ProblemP& p) {
  Bits b = p.target.precision();
  for (const auto& v : p.tau_minus) b = std::max(b, v.precision());
  for (const auto& v : p.tau_plus) b = std::max(b, v.precision());
  return std::max<Bits>(b, kDefaultBits) + 64;
}

PrecReal sum_tol(const ProblemP& p, Bits bits) {
  PrecReal scale = max(PrecReal(1L, bits), abs(p.target));
  return ldexp(scale, -static_cast<long>(bits / 2));
}

}  // namespace

void ProblemP::validate() const {
  const std::size_t N = static_cast<std::size_t>(n) + 1;
  if (n < 0 || tau_minus.size() != N || tau_plus.size() != N) {
    throw ContractError("ProblemP: bounds must have n + 1 entries");
  }
  PrecReal lo_sum(0L, kDefaultBits), hi_sum(0L, kDefaultBits);
  for (std::size_t k = 0; k < N; ++k) {
    if (tau_minus[k] > tau_plus[k]) throw ContractError("ProblemP: tau_-(" + std::to_string(k) + ") > tau_+");
    if (tau_minus[k] < -1.0 || tau_plus[k] > 1.0) throw ContractError("ProblemP: bounds outside [-1, 1]");
    if (k > 0 && (tau_minus[k] < tau_minus[k - 1] || tau_plus[k] < tau_plus[k - 1])) {
      throw ContractError("ProblemP: bounds must be nondecreasing in k");
    }
    lo_sum += tau_minus[k];
    hi_sum += tau_plus[k];
  }
  if (target < lo_sum || target > hi_sum) {
    throw InfeasibleError("ProblemP: target sum " + target.to_string(12) + " outside [" + lo_sum.to_string(12) +
                          ", " + hi_sum.to_string(12) + "]");
  }
}

PrecReal tau_scale(const PrecReal& a, const PrecReal& theta_prime) {
  const Bits bits = std::max(a.precision(), theta_prime.precision());
  const PrecReal pi = PrecReal::pi(bits);
  return pi * pi / (a.with_precision(bits) * theta_prime * 2.0);
}

std::pair<PrecReal, PrecReal> tau_bounds(long k, const PrecReal& w, const PrecReal& M_plus, const PrecReal& r) {
  const Bits bits = std::max(w.precision(), M_plus.precision());
  const PrecReal zero(0L, bits);
  PrecReal lo_arg = w * (PrecReal(k + 1, bits) - M_plus);
  PrecReal hi_arg = w * (PrecReal(k + 2, bits) + r);
  const PrecReal pi = PrecReal::pi(bits);
  return {-cos(min(max(lo_arg, zero), pi)), -cos(min(hi_arg, pi))};
}

PrecReal objective_f(const PrecReal& t) {
  const Bits bits = t.precision();
  PrecReal v = asin(t) / PrecReal::two_pi(bits) + 0.75;
  return v * v - v + PrecReal::ratio(1, 6, bits);
}

PrecReal objective_g_at(const std::vector<PrecReal>& y, Bits bits, unsigned threads) {
  if (y.empty()) throw ContractError("objective_g: no nodes");
  for (const auto& v : y) {
    if (!(v > -1.0 && v < 1.0)) throw DomainError("objective_g: node " + v.to_string(12) + " outside (-1, 1)");
  }
  const std::vector<PrecReal> coeffs{PrecReal::ratio(1, 6, bits), PrecReal(-1L, bits), PrecReal(1L, bits)};
  const PrecReal inv2pi = PrecReal(1L, bits) / PrecReal::two_pi(bits);
  auto taylor = [&](const PrecReal& node, std::size_t m) {
    const PrecReal t = node.with_precision(bits);
    if (m == 1) return std::vector<PrecReal>{objective_f(t)};
    Series<PrecReal> v = asin_series(t, m - 1);
    for (auto& c : v) c *= inv2pi;
    v[0] += 0.75;
    return series_compose_poly(coeffs, v, m - 1);
  };
  std::vector<PrecReal> nodes;
  nodes.reserve(y.size());
  for (const auto& v : y) nodes.push_back(v.with_precision(std::max(bits, v.precision())));
  return divided_difference<PrecReal>(nodes, taylor, threads);
}

PrecReal objective_g_value(const std::vector<PrecReal>& y, Bits start, unsigned threads) {
  if (start == 0) start = std::max<Bits>(128, 4 * static_cast<Bits>(y.size()));
  return refine_precision([&](Bits b) { return objective_g_at(y, b, threads); }, start, 1e-10, 1 << 20);
}

LogMag objective_g(const std::vector<PrecReal>& y, Bits start, unsigned threads) {
  return LogMag::from(objective_g_value(y, start, threads));
}

namespace {

std::vector<PrecReal> assemble(const ProblemP& p, long J, long L, const PrecReal& plateau) {
  std::vector<PrecReal> y;
  y.reserve(p.n + 1);
  for (long k = 0; k <= p.n; ++k) {
    if (k < J) y.push_back(p.tau_plus[k]);
    else if (k <= L) y.push_back(plateau);
    else y.push_back(p.tau_minus[k]);
  }
  return y;
}

}  // namespace

void SolutionP::check(const ProblemP& p) const {
  if (static_cast<long>(y.size()) != p.n + 1) throw ConsistencyError("SolutionP: wrong size");
  const Bits bits = working_bits(p);
  PrecReal sum(0L, bits);
  for (long k = 0; k <= p.n; ++k) {
    const PrecReal& v = y[k];
    if (v < p.tau_minus[k] || v > p.tau_plus[k]) throw ConsistencyError("SolutionP: bound violated at k = " + std::to_string(k));
    if (k > 0 && v < y[k - 1]) throw ConsistencyError("SolutionP: not nondecreasing at k = " + std::to_string(k));
    if (k < J && v != p.tau_plus[k]) throw ConsistencyError("SolutionP: y_k != tau_+(k) before J");
    if (k >= J && k <= L && v != plateau) throw ConsistencyError("SolutionP: plateau broken");
    if (k > L && v != p.tau_minus[k]) throw ConsistencyError("SolutionP: y_k != tau_-(k) after L");
    sum += v;
  }
  if (abs(sum - p.target) > sum_tol(p, bits) * (p.n + 1)) throw ConsistencyError("SolutionP: sum constraint violated");
}

SolutionP solve_p(const ProblemP& p, unsigned threads) {
  p.validate();
  const long n = p.n;
  const std::size_t N = static_cast<std::size_t>(n) + 1;
  const Bits bits = working_bits(p);

  // Prefix sums: exact check in PrecReal after a long double screen.
  std::vector<PrecReal> P(N + 1, PrecReal(0L, bits)), Q(N + 1, PrecReal(0L, bits));
  std::vector<long double> Pf(N + 1, 0), Qf(N + 1, 0), up(N), dn(N);
  for (std::size_t k = 0; k < N; ++k) {
    P[k + 1] = P[k] + p.tau_plus[k];
    Q[k + 1] = Q[k] + p.tau_minus[k];
    up[k] = static_cast<long double>(p.tau_plus[k].to_double());
    dn[k] = static_cast<long double>(p.tau_minus[k].to_double());
    Pf[k + 1] = Pf[k] + up[k];
    Qf[k + 1] = Qf[k] + dn[k];
  }
  const long double Sf = p.target.to_double();
  const long double slack = 1e-9L * (1 + std::fabs(static_cast<double>(Sf)) + static_cast<long double>(N));
  const PrecReal tol = sum_tol(p, bits);
  constexpr long double inf = std::numeric_limits<long double>::infinity();

  std::vector<CandidateP> feasible;
  for (long J = 0; J <= n; ++J) {
    for (long L = J; L <= n; ++L) {
      const long m = L - J + 1;
      const long double rest = Sf - Pf[J] - (Qf[N] - Qf[L + 1]);
      const long double lo = std::max(dn[L], J > 0 ? up[J - 1] : -inf);
      const long double hi = std::min(up[J], L < n ? dn[L + 1] : inf);
      if (rest < m * lo - slack || rest > m * hi + slack) continue;
      PrecReal plateau = (p.target - P[J] - (Q[N] - Q[L + 1])) / m;
      // The plateau may touch a bound up to rounding.
      const PrecReal lo_x = max(p.tau_minus[L], J > 0 ? p.tau_plus[J - 1] : p.tau_minus[L]);
      const PrecReal hi_x = min(p.tau_plus[J], L < n ? p.tau_minus[L + 1] : p.tau_plus[J]);
      if (plateau < lo_x - tol || plateau > hi_x + tol) continue;
      if (plateau < lo_x) plateau = lo_x;
      if (plateau > hi_x) plateau = hi_x;
      feasible.push_back({J, L, std::move(plateau), PrecReal(bits)});
    }
  }
  if (feasible.empty()) {
    throw InfeasibleError("solve_p: no feasible (J, L) candidate; the plateau structure does not apply");
  }

  std::size_t best = 0;
  for (std::size_t i = 0; i < feasible.size(); ++i) {
    auto& c = feasible[i];
    c.objective = objective_g_value(assemble(p, c.J, c.L, c.plateau), 0, threads);
    if (i > 0 && c.objective < feasible[best].objective) best = i;
  }

  SolutionP s;
  s.n = n;
  s.J = feasible[best].J;
  s.L = feasible[best].L;
  s.plateau = feasible[best].plateau;
  s.y = assemble(p, s.J, s.L, s.plateau);
  s.objective_value = feasible[best].objective;
  s.objective = LogMag::from(s.objective_value);
  s.feasible_candidates = static_cast<long>(feasible.size());
  std::stable_sort(feasible.begin(), feasible.end(),
                   [](const CandidateP& x, const CandidateP& y) { return x.objective < y.objective; });
  if (feasible.size() > 100) feasible.resize(100);
  s.audit = std::move(feasible);
  s.check(p);
  return s;
}

nlohmann::json to_json(const SolutionP& s) {
  nlohmann::json y = nlohmann::json::array();
  const long N = static_cast<long>(s.y.size());
  for (long k = 0; k < N; ++k) {
    if (k < 20 || k >= N - 20) {
      y.push_back({{"k", k}, {"y", s.y[k].to_string(20)}});
    } else if (k == s.J) {
      y.push_back({{"k", k}, {"y", s.y[k].to_string(20)}, {"plateau_through", s.L}});
    }
  }
  nlohmann::json audit = nlohmann::json::array();
  for (const auto& c : s.audit) {
    audit.push_back({{"J", c.J}, {"L", c.L}, {"objective_log10", LogMag::from(c.objective).log10_abs().to_string(15)}});
  }
  return {{"n", s.n},
          {"J", s.J},
          {"L", s.L},
          {"plateau", s.plateau.to_string()},
          {"objective_sign", s.objective.sign()},
          {"objective_log10", s.objective.log10_abs().to_string(20)},
          {"feasible_candidates", s.feasible_candidates},
          {"y", y},
          {"audit", audit}};
}

}  // namespace zwin

#include "zwin/pipeline/identity_suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "zwin/numkernel/errors.hpp"
#include "zwin/psi/identity.hpp"

namespace zwin {

namespace {

DerivativeFn random_g(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> W(0.5, 6.0), P(0.0, 2 * M_PI), L(-3.0, 3.0);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    const double w = W(rng), phi = P(rng);
    return [w, phi](double x, int m) {
      std::vector<double> d(m + 1);
      for (int j = 0; j <= m; ++j) d[j] = std::pow(w, j) * std::sin(w * x + phi + j * M_PI / 2);
      return d;
    };
  }
  const double l = L(rng);
  return [l](double x, int m) {
    std::vector<double> d(m + 1);
    for (int j = 0; j <= m; ++j) d[j] = std::pow(l, j) * std::exp(l * x);
    return d;
  };
}

std::vector<double> random_nodes(std::mt19937_64& rng, double a, int count) {
  std::uniform_real_distribution<double> U(-0.98 * a, 0.98 * a);
  while (true) {
    std::vector<double> x(count);
    for (auto& v : x) v = U(rng);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (int i = 1; i < count; ++i) ok = ok && x[i] - x[i - 1] > 1e-3 * a;
    if (ok) return x;
  }
}

}  // namespace

IdentitySuiteResult run_identity_suite(const IdentitySuiteOptions& opt) {
  if (opt.trials < 1) throw ContractError("identity suite: trials must be positive");
  if (opt.n && *opt.n < 1) throw ContractError("identity suite: n must be >= 1");
  if (opt.n && opt.r && 2 * *opt.r < *opt.n + 2) throw ContractError("identity suite: requires 2r >= n + 2");
  if (!(opt.a_min > 0.0 && opt.a_min <= opt.a_max)) throw ContractError("identity suite: bad a range");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> A(opt.a_min, opt.a_max);
  IdentitySuiteResult out;
  for (int t = 0; t < opt.trials; ++t) {
    IdentityTrial tr;
    tr.n = opt.n ? *opt.n : 3 + 2 * std::uniform_int_distribution<int>(0, 2)(rng);
    if (opt.r) {
      tr.r = *opt.r;
    } else {
      const int lo = (tr.n + 3) / 2, hi = (tr.n + 10) / 2;
      tr.r = std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    tr.a = A(rng);
    NodeSet ns(tr.a, random_nodes(rng, tr.a, tr.n + 1));
    const IdentityResult res = verify_identity(times_node_polynomial(ns, random_g(rng)), ns, tr.r);
    tr.relative = res.scale > 0 ? res.residual / res.scale : res.residual;
    tr.pass = tr.relative <= opt.tolerance;
    out.passed += tr.pass;
    out.worst = std::max(out.worst, tr.relative);
    out.trials.push_back(tr);
  }
  return out;
}

nlohmann::json to_json(const IdentitySuiteResult& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"n", t.n}, {"r", t.r}, {"a", t.a}, {"relative_residual", t.relative}, {"pass", t.pass}});
  }
  return {{"trials", r.trials.size()}, {"passed", r.passed}, {"worst_relative_residual", r.worst}, {"results", trials}};
}

}  // namespace zwin

#include "zwin/psi/identity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/quadrature.hpp"

namespace zwin {

DerivativeFn times_node_polynomial(const NodeSet& ns, DerivativeFn g) {
  // Coefficients of W, low order first.
  std::vector<double> w{1.0};
  for (double xk : ns.x_double()) {
    w.push_back(0.0);
    for (std::size_t j = w.size() - 1; j > 0; --j) w[j] = w[j - 1] - xk * w[j];
    w[0] *= -xk;
  }
  return [w = std::move(w), g = std::move(g)](double x, int m) {
    // W^(j)(x) for j = 0..m.
    std::vector<double> wd(m + 1, 0.0);
    std::vector<double> c = w;
    for (int j = 0; j <= m && !c.empty(); ++j) {
      double v = 0.0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
      wd[j] = v;
      std::vector<double> next;
      for (std::size_t i = 1; i < c.size(); ++i) next.push_back(c[i] * static_cast<double>(i));
      c = std::move(next);
    }
    const std::vector<double> gd = g(x, m);
    std::vector<double> out(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
      double binom = 1.0;
      for (int j = 0; j <= k; ++j) {
        out[k] += binom * wd[j] * gd[k - j];
        binom = binom * (k - j) / (j + 1);
      }
    }
    return out;
  };
}

namespace {

void check_order(const NodeSet& ns, int r) {
  if (2 * r < ns.n() + 2) {
    throw ContractError("verify_identity: requires 2r >= n + 2 (r = " + std::to_string(r) +
                        ", n = " + std::to_string(ns.n()) + ")");
  }
}

}  // namespace

IdentityResult verify_identity(const DerivativeFn& f, const NodeSet& ns, int r, double rel_tol) {
  check_order(ns, r);
  const double a = ns.a().to_double();
  IdentityResult res;
  const std::vector<double> fp = f(a, 2 * r - 1);
  const std::vector<double> fm = f(-a, 2 * r - 1);
  const PrecReal ap = ns.a();
  const PrecReal am = -ns.a();
  double lhs_abs = 0.0;
  for (int k = 1; k <= r; ++k) {
    PsiEvaluator ev(k, ns, psi_precision(ns, k, 64));
    const double tp = ev(ap).to_double() * fp[2 * k - 1];
    const double tm = ev(am).to_double() * fm[2 * k - 1];
    res.lhs += tp - tm;
    lhs_abs += std::fabs(tp) + std::fabs(tm);
  }

  PsiEvaluator top(r, ns, psi_precision(ns, r, 64));
  auto integrand = [&](double x) { return top(x) * f(x, 2 * r)[2 * r]; };
  auto magnitude = [&](double x) { return std::fabs(integrand(x)); };
  const auto breaks = ns.x_double();
  const QuadResult mag = integrate_gl16(magnitude, -a, a, breaks, 1e-6 * (lhs_abs + 1e-300));
  res.scale = std::max(lhs_abs, mag.value);
  const QuadResult q = integrate_gl16(integrand, -a, a, breaks, rel_tol * res.scale);
  if (!q.converged) {
    throw ConvergenceError("verify_identity: quadrature did not converge (error estimate " +
                           std::to_string(q.error) + ")");
  }
  res.rhs = q.value;
  res.quad_error = q.error;
  res.panels = q.panels;
  res.residual = std::fabs(res.lhs - res.rhs);
  return res;
}

double identity_rhs_fixed(const DerivativeFn& f, const NodeSet& ns, int r, int panels) {
  check_order(ns, r);
  const double a = ns.a().to_double();
  PsiEvaluator top(r, ns, psi_precision(ns, r, 64));
  auto integrand = [&](double x) { return top(x) * f(x, 2 * r)[2 * r]; };
  std::vector<double> cuts{-a};
  auto xs = ns.x_double();
  std::sort(xs.begin(), xs.end());
  for (double x : xs) {
    if (x > cuts.back()) cuts.push_back(x);
  }
  cuts.push_back(a);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double h = (cuts[i + 1] - cuts[i]) / panels;
    for (int p = 0; p < panels; ++p) total += gl16_panel(integrand, cuts[i] + p * h, cuts[i] + (p + 1) * h);
  }
  return total;
}

double derivative_l2(const DerivativeFn& f, double a, int order) {
  auto sq = [&](double x) {
    const double v = f(x, order)[order];
    return v * v;
  };
  const QuadResult coarse = integrate_gl16(sq, -a, a, {}, 1e300, 0);
  return std::sqrt(integrate_gl16(sq, -a, a, {}, 1e-13 * coarse.value + 1e-300).value);
}

}  // namespace zwin

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace zwin {

struct GaussLegendre16 {
  std::array<double, 16> nodes{};
  std::array<double, 16> weights{};
};

// Nodes and weights on [-1, 1] from Newton iteration on P_16.
inline const GaussLegendre16& gauss_legendre16() {
  static const GaussLegendre16 rule = [] {
    GaussLegendre16 g;
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      long double x = std::cos(3.14159265358979323846L * (i + 0.75L) / (n + 0.5L));
      long double dp = 0;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(static_cast<double>(dx)) < 1e-19) break;
      }
      g.nodes[i] = static_cast<double>(x);
      g.weights[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
    }
    return g;
  }();
  return rule;
}

struct QuadResult {
  double value = 0.0;
  // Sum of |coarse - refined| over accepted panels.
  double error = 0.0;
  bool converged = true;
  long panels = 0;
};

template <typename F>
double gl16_panel(F& f, double lo, double hi) {
  const auto& g = gauss_legendre16();
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) acc += g.weights[i] * f(c + h * g.nodes[i]);
  return acc * h;
}

namespace detail {

template <typename F>
void adaptive_gl16(F& f, double lo, double hi, double whole, double tol, int depth, QuadResult& out) {
  const double mid = 0.5 * (lo + hi);
  const double left = gl16_panel(f, lo, mid);
  const double right = gl16_panel(f, mid, hi);
  const double diff = std::fabs(left + right - whole);
  // Differences at the rounding level of the panel sum cannot shrink further.
  const double floor = 64 * std::numeric_limits<double>::epsilon() * (std::fabs(left) + std::fabs(right));
  if (diff <= std::max(tol, floor) || depth <= 0) {
    if (diff > std::max(tol, floor)) out.converged = false;
    out.value += left + right;
    out.error += diff;
    out.panels += 2;
    return;
  }
  adaptive_gl16(f, lo, mid, left, 0.5 * tol, depth - 1, out);
  adaptive_gl16(f, mid, hi, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

// Adaptive Gauss-Legendre-16 on [lo, hi], split first at every breakpoint
// inside the interval.  Panels are halved until coarse and refined estimates
// agree to abs_tol (distributed by length).
template <typename F>
QuadResult integrate_gl16(F&& f, double lo, double hi, std::vector<double> breaks,
                          double abs_tol, int max_depth = 24) {
  QuadResult out;
  std::vector<double> cuts{lo};
  std::sort(breaks.begin(), breaks.end());
  for (double b : breaks) {
    if (b > cuts.back() && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);
  const double length = hi - lo;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const double whole = gl16_panel(f, a, b);
    detail::adaptive_gl16(f, a, b, whole, abs_tol * (b - a) / length, max_depth, out);
  }
  return out;
}

}  // namespace zwin

#include "zwin/hardy/window.hpp"

#include <cmath>
#include <string>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"

namespace zwin {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Sample {
  double x;
  double z;
  double z2;
};

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

void Window::validate() const {
  const long count = static_cast<long>(offsets.size());
  if (count < 2 || count % 2 != 0) {
    throw ConsistencyError("window: n = " + std::to_string(count - 1) + " is not odd");
  }
  const double half = a.to_double();
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    if (!(offsets[k] > -half && offsets[k] < half)) {
      throw ConsistencyError("window: zero offset " + std::to_string(offsets[k]) + " outside (-a, a)");
    }
    if (k > 0 && offsets[k] < offsets[k - 1]) throw ConsistencyError("window: zeros not ordered");
  }
}

DerivativeFn derivative_fn(const HardyEvaluator& ev) {
  return [&ev](double x, int m) { return ev.derivatives(x, m); };
}

double refine_root(const DerivativeFn& f, int order, double lo, double hi, double v_lo, double tol) {
  if (!(lo < hi)) throw ContractError("refine_root: empty bracket");
  double a = lo, b = hi, fa = v_lo;
  double x = 0.5 * (a + b);
  for (int it = 0; it < 200; ++it) {
    auto d = f(x, order + 1);
    const double v = d[order];
    const double dv = d[order + 1];
    if (v == 0.0) return x;
    if (sign_of(v) == sign_of(fa)) {
      a = x;
      fa = v;
    } else {
      b = x;
    }
    const double xn = x - v / dv;
    const bool newton = std::isfinite(xn) && xn > a && xn < b;
    if (newton && std::fabs(xn - x) < 0.01 * tol) return xn;
    if (b - a < tol) return 0.5 * (a + b);
    x = newton ? xn : 0.5 * (a + b);
  }
  throw ConvergenceError("refine_root: no convergence in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

ZeroScan find_zeros(const DerivativeFn& f, double lo, double hi, double step) {
  ZeroScan out;
  if (!(hi > lo)) return out;
  if (!(step > 0)) throw ContractError("find_zeros: step must be positive");
  const long m = std::max(1L, static_cast<long>(std::ceil((hi - lo) / step)));
  const double h = (hi - lo) / static_cast<double>(m);
  std::vector<double> xs(m + 1), vs(m + 1);
  for (long i = 0; i <= m; ++i) {
    xs[i] = i == m ? hi : lo + h * static_cast<double>(i);
    vs[i] = f(xs[i], 0)[0];
  }
  for (long i = 0; i < m; ++i) {
    if (vs[i] == 0.0) {
      if (i > 0) out.offsets.push_back(xs[i]);
      continue;
    }
    if (sign_of(vs[i]) * sign_of(vs[i + 1]) < 0) {
      out.offsets.push_back(refine_root(f, 0, xs[i], xs[i + 1], vs[i]));
    }
  }
  return out;
}

ZeroScan find_zeros(const HardyEvaluator& ev, double lo, double hi) {
  const double step = kPi / ev.theta_prime_anchor() / 8.0;
  ZeroScan out = find_zeros(derivative_fn(ev), lo, hi, step);
  const Bits bits = std::max(ev.anchor().precision(), phase_precision(ev.anchor()));
  PrecReal T = ev.anchor().with_precision(bits);
  out.smooth_count = ((theta(T + hi) - theta(T + lo)) / PrecReal::pi(bits)).to_double();
  return out;
}

std::vector<PrecReal> find_zeros(const PrecReal& T, const PrecReal& a, const ZEvalConfig& cfg) {
  std::vector<PrecReal> out;
  if (!(a > 0.0)) return out;
  HardyEvaluator ev(T, a.to_double(), cfg);
  const double ad = a.to_double();
  for (double x : find_zeros(ev, -ad, ad).offsets) out.push_back(T + x);
  return out;
}

double locate_peak(const DerivativeFn& f, double seed, double radius, double step) {
  const long m = std::max(2L, static_cast<long>(std::ceil(2 * radius / step)));
  const double h = 2 * radius / static_cast<double>(m);
  long best = 0;
  double best_abs = -1;
  for (long i = 0; i <= m; ++i) {
    const double v = std::fabs(f(seed - radius + h * static_cast<double>(i), 0)[0]);
    if (v > best_abs) {
      best_abs = v;
      best = i;
    }
  }
  if (best == 0 || best == m) throw WindowRejected("peak search: maximum of |Z| at the scan edge");
  const double xl = seed - radius + h * static_cast<double>(best - 1);
  const double xm = xl + h;
  const double xr = xm + h;
  const double dl = f(xl, 1)[1];
  const double dm = f(xm, 1)[1];
  const double dr = f(xr, 1)[1];
  if (dm == 0.0) return xm;
  if (sign_of(dl) * sign_of(dm) < 0) return refine_root(f, 1, xl, xm, dl, 1e-12);
  if (sign_of(dm) * sign_of(dr) < 0) return refine_root(f, 1, xm, xr, dm, 1e-12);
  throw ConvergenceError("peak search: derivative does not change sign around the maximum");
}

bool derivative_local_max_near(const DerivativeFn& f, double x, int sign, double tol) {
  const double left = sign * f(x - tol, 2)[2];
  const double right = sign * f(x + tol, 2)[2];
  return left > 0 && right < 0;
}

Window find_boundary_and_peak(const DerivativeFn& f, const PrecReal& anchor, double seed,
                              double mean_gap, const BoundarySearch& opt) {
  const double h = mean_gap / 8.0;
  const double tm = locate_peak(f, seed, opt.peak_radius_gaps * mean_gap, h);
  const double z_peak = f(tm, 0)[0];
  const int sgn = z_peak > 0 ? 1 : -1;

  // Samples stepping left from T_M; pts[j + 1] lies left of pts[j].
  std::vector<Sample> pts;
  auto push = [&](double x) {
    auto d = f(x, 2);
    pts.push_back({x, d[0], d[2]});
  };
  push(tm);
  // Index j such that sgn Z'' goes from + at pts[j + 1] to - at pts[j].
  auto next_max = [&](std::size_t from) -> std::size_t {
    for (std::size_t j = from;; ++j) {
      while (pts.size() < j + 2) push(pts.back().x - h);
      if (sgn * pts[j + 1].z2 > 0 && sgn * pts[j].z2 <= 0) return j;
      if (j > 64 * 8 * static_cast<std::size_t>(opt.max_candidates + 1)) {
        throw WindowRejected("boundary search: no local maximum of Z' found");
      }
    }
  };
  auto refine_max = [&](std::size_t j) {
    return refine_root(f, 2, pts[j + 1].x, pts[j].x, pts[j + 1].z2, 1e-12);
  };

  const std::size_t jr = next_max(0);
  const double t2 = refine_max(jr);
  const double z_t2 = f(t2, 0)[0];
  if (z_t2 == 0.0) throw WindowRejected("boundary search: Z vanishes at the right boundary");

  std::size_t j = jr + 1;
  for (int cand = 0; cand < opt.max_candidates; ++cand) {
    const std::size_t jl = next_max(j);
    j = jl + 1;
    const double t1 = refine_max(jl);
    const double z_t1 = f(t1, 0)[0];
    if (z_t1 == 0.0) continue;
    // Z along t1 < grid points < t2, left to right.
    std::vector<std::pair<double, double>> seq;
    seq.push_back({t1, z_t1});
    for (std::size_t i = jl + 1; i-- > 0;) {
      if (pts[i].x > t1 && pts[i].x < t2) seq.push_back({pts[i].x, pts[i].z});
    }
    seq.push_back({t2, z_t2});
    long changes = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (sign_of(seq[i].second) * sign_of(seq[i + 1].second) < 0) ++changes;
    }
    if (changes % 2 != 0 || changes - 1 < opt.min_n) continue;

    Window w;
    const double centre = 0.5 * (t1 + t2);
    const Bits bits = anchor.precision();
    w.T = anchor + centre;
    w.a = PrecReal(0.5 * (t2 - t1), bits);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (sign_of(seq[i].second) * sign_of(seq[i + 1].second) < 0) {
        w.offsets.push_back(refine_root(f, 0, seq[i].first, seq[i + 1].first, seq[i].second) - centre);
      }
    }
    w.peak_offset = tm - centre;
    w.z_peak = z_peak;
    w.zprime_max_plus = derivative_local_max_near(f, t2, sgn, 1e-6);
    w.zprime_max_minus = derivative_local_max_near(f, t1, sgn, 1e-6);
    w.validate();
    return w;
  }
  throw WindowRejected("boundary search: no window with odd n >= " + std::to_string(opt.min_n) +
                       " among " + std::to_string(opt.max_candidates) + " candidates");
}

Window find_boundary_and_peak(const HardyEvaluator& ev, double seed, const BoundarySearch& opt) {
  return find_boundary_and_peak(derivative_fn(ev), ev.anchor(), seed,
                                kPi / ev.theta_prime_anchor(), opt);
}

}  // namespace zwin

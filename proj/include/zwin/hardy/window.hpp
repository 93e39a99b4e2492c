#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "zwin/hardy/main_sum.hpp"
#include "zwin/numkernel/derivative_fn.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// Window [T - a, T + a] with zeros gamma_k = T + offsets[k].
struct Window {
  PrecReal T{kDefaultBits};
  PrecReal a{kDefaultBits};
  std::vector<double> offsets;
  bool zprime_max_plus = false;
  bool zprime_max_minus = false;
  // T_M - T and Z(T_M).
  double peak_offset = 0.0;
  double z_peak = 0.0;

  // n with offsets.size() == n + 1.
  long n() const { return static_cast<long>(offsets.size()) - 1; }
  PrecReal zero(std::size_t k) const { return T + offsets.at(k); }
  // Throws ConsistencyError unless the offsets are ordered, strictly inside
  // (-a, a) and n is odd.
  void validate() const;
};

DerivativeFn derivative_fn(const HardyEvaluator& ev);

// Root of f^(order) in [lo, hi], where f^(order)(lo) = v_lo has the opposite
// sign of the value at hi.  Newton steps with the next derivative, guarded by
// bisection; the bracket never grows.
double refine_root(const DerivativeFn& f, int order, double lo, double hi, double v_lo,
                   double tol = 1e-10);

struct ZeroScan {
  std::vector<double> offsets;
  // (theta(t_hi) - theta(t_lo)) / pi, the smooth part of the zero count.
  double smooth_count = 0.0;
  // Number of refined brackets whose |Z| exceeded a bracketing grid value.
  std::size_t refinement_violations = 0;
};

// Sign-change zeros of f in (lo, hi), grid step at most `step`.
ZeroScan find_zeros(const DerivativeFn& f, double lo, double hi, double step);
// Offsets from ev.anchor() of the zeros of Z in (lo, hi); grid step is an
// eighth of the mean gap pi / theta'.
ZeroScan find_zeros(const HardyEvaluator& ev, double lo, double hi);
// Zeros of Z in (T - a, T + a).
std::vector<PrecReal> find_zeros(const PrecReal& T, const PrecReal& a, const ZEvalConfig& cfg);

// Local maximiser of |f| near `seed`: the |f|-largest grid point in
// [seed - radius, seed + radius] refined to a root of f'.
double locate_peak(const DerivativeFn& f, double seed, double radius, double step);

// Whether sign * f' has a local maximum within `tol` of x.
bool derivative_local_max_near(const DerivativeFn& f, double x, int sign, double tol = 1e-4);

struct BoundarySearch {
  // Half width, in mean zero gaps, of the scan for the peak around the seed.
  double peak_radius_gaps = 4.0;
  // Smallest odd n accepted.
  long min_n = 1;
  // Left-boundary candidates tried before rejecting.
  int max_candidates = 32;
};

// From a seed offset near a large |Z| peak: T_M, then the right boundary at the
// last local maximum of sign(Z(T_M)) Z' before T_M, then the closest left
// boundary at such a maximum with an even interior zero count (n odd,
// n >= min_n).  Offsets are relative to `anchor`; the returned Window is
// centred on the boundaries.  Throws WindowRejected when nothing qualifies.
Window find_boundary_and_peak(const DerivativeFn& f, const PrecReal& anchor, double seed,
                              double mean_gap, const BoundarySearch& opt = {});
Window find_boundary_and_peak(const HardyEvaluator& ev, double seed, const BoundarySearch& opt = {});

}  // namespace zwin

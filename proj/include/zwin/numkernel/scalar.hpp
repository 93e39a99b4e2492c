#pragma once

#include <cmath>
#include <string>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// Uniform construction for the scalar types the templated kernels accept.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static double make(double v, const double&) { return v; }
  static double to_double(double v) { return v; }
};

template <>
struct ScalarTraits<PrecReal> {
  static PrecReal make(double v, const PrecReal& like) {
    return PrecReal(v, like.precision());
  }
  static double to_double(const PrecReal& v) { return v.to_double(); }
};

template <typename S>
S scalar_like(double v, const S& like) {
  return ScalarTraits<S>::make(v, like);
}

// Evaluates compute(bits) at start, 2*start, ... until two consecutive
// results agree to `rel_tol` (relative, with `abs_floor` as an absolute
// escape for values that cancel to zero).  Returns the last result.
template <typename F>
PrecReal refine_precision(F&& compute, Bits start, double rel_tol,
                          Bits max_bits = 1 << 17, double abs_floor = 0.0) {
  Bits bits = std::max(start, kMinBits);
  PrecReal prev = compute(bits);
  while (true) {
    if (2 * bits > max_bits) {
      throw PrecisionError("precision refinement exceeded " +
                           std::to_string(max_bits) + " bits");
    }
    bits *= 2;
    PrecReal next = compute(bits);
    PrecReal diff = abs(next - prev);
    PrecReal scale = abs(next);
    if (diff <= scale * rel_tol || diff <= abs_floor) return next;
    prev = std::move(next);
  }
}

}  // namespace zwin

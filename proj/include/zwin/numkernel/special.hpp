#pragma once

#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// x - floor(x), in [0, 1).
PrecReal frac(const PrecReal& x);

// Riemann-Siegel theta and its first two derivatives from the Stirling
// series; every result is computed at the precision of t and carries an
// absolute error below one ulp of the leading term.  Requires t >= 10.
PrecReal theta(const PrecReal& t);
PrecReal theta_prime(const PrecReal& t);
PrecReal theta_pp(const PrecReal& t);

// Working precision the pipeline uses for phases at height t:
// bits(t * theta'(t)) + 80.
Bits phase_precision(const PrecReal& t);

// (theta(t) - t log n) mod 2pi in [0, 2pi).  The precision of t must cover
// the integer bits of t log n plus `fraction_bits` (at least 60); otherwise
// PrecisionError is thrown.
PrecReal reduce_phase(const PrecReal& t, unsigned long n, int fraction_bits = 60);

// Riemann zeta for real s > 1 (relative error below 2^-(bits-8)).
PrecReal zeta_real(const PrecReal& s);

// Hurwitz zeta sum_{j>=0} (q + j)^-s for s > 1, q > 0.
PrecReal hurwitz_zeta(const PrecReal& s, const PrecReal& q);

}  // namespace zwin

#pragma once

#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// c_{2l-1,r} = sqrt(sum_{s>=0} ((r/(r+s))^{2l-1} binom(2r+s-1, s))^2), l >= r+1.
LogMag c_constant(long l, long r);

// e_{2K,n} = 2^{n-1/2} c_{2K-1,n} (2a/(n pi))^{2K} min(log T, 3 zeta(1/2 + 2K/theta'(T))) theta'(T)^{2K}.
LogMag e_bound(long K, long n, const PrecReal& T, const PrecReal& a);

}  // namespace zwin

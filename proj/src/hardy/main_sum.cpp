#include "zwin/hardy/main_sum.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/parallel.hpp"
#include "zwin/numkernel/special.hpp"

namespace zwin {

namespace {

using f128 = __float128;

f128 to_f128(const PrecReal& v) {
  PrecReal rest = v.with_precision(std::max<Bits>(v.precision(), 192));
  f128 acc = 0;
  for (int i = 0; i < 3; ++i) {
    double part = rest.to_double();
    acc += static_cast<f128>(part);
    rest -= part;
  }
  return acc;
}

std::vector<std::uint32_t> smallest_prime_factors(std::size_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    if (i > n / i) continue;
    for (std::size_t j = i * i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

void require_floor(const PrecReal& t, const ZEvalConfig& cfg) {
  if (!(t >= cfg.validity_floor)) {
    throw DomainError("main sum: t = " + t.to_string(12) + " below the validity floor " +
                      std::to_string(cfg.validity_floor));
  }
}

}  // namespace

std::size_t main_sum_terms(const PrecReal& t) {
  PrecReal q = sqrt(t / PrecReal::two_pi(t.precision()));
  return static_cast<std::size_t>(floor(q).to_long_floor());
}

MainSumTable::MainSumTable(const PrecReal& anchor, double radius, unsigned threads)
    : anchor_(anchor), radius_(radius) {
  if (!(radius >= 0.0)) throw ContractError("MainSumTable: radius must be >= 0");
  const std::size_t N = main_sum_terms(anchor + radius);
  if (N < 1) throw DomainError("MainSumTable: anchor too small");
  log_n_.assign(N + 1, 0.0);
  inv_sqrt_.assign(N + 1, 0.0);
  phase0_.assign(N + 1, 0.0);

  // log n in binary128: primes from MPFR, composites as log p + log(n/p).
  std::vector<f128> lg(N + 1, 0);
  {
    auto spf = smallest_prime_factors(N);
    PrecReal lp(192);
    for (std::size_t n = 2; n <= N; ++n) {
      const std::size_t p = spf[n];
      if (p == n) {
        mpfr_set_ui(lp.raw(), n, MPFR_RNDN);
        mpfr_log(lp.raw(), lp.raw(), MPFR_RNDN);
        lg[n] = to_f128(lp);
      } else {
        lg[n] = lg[p] + lg[n / p];
      }
    }
  }
  for (std::size_t n = 1; n <= N; ++n) {
    log_n_[n] = static_cast<double>(lg[n]);
    inv_sqrt_[n] = 1.0 / std::sqrt(static_cast<double>(n));
  }

  // (anchor * log n) mod 2pi.  binary128 suffices while anchor * log N < 2^62,
  // keeping the absolute error near 2^-51.
  PrecReal probe = anchor.with_precision(64) * std::log(static_cast<double>(std::max<std::size_t>(N, 2)));
  fast_ = integer_bits(probe) <= 62;
  const std::size_t chunk = 1 << 16;
  const std::size_t chunks = (N + chunk) / chunk;
  if (fast_) {
    const f128 T = to_f128(anchor);
    const f128 P = to_f128(PrecReal::two_pi(192));
    for_each_chunk(chunks, threads, [&](std::size_t c) {
      const std::size_t lo = std::max<std::size_t>(1, c * chunk);
      const std::size_t hi = std::min(N, (c + 1) * chunk - 1);
      for (std::size_t n = lo; n <= hi; ++n) {
        f128 X = T * lg[n];
        f128 k = static_cast<f128>(static_cast<std::int64_t>(X / P));
        f128 r = X - k * P;
        if (r < 0) r += P;
        if (r >= P) r -= P;
        phase0_[n] = static_cast<double>(r);
      }
    });
  } else {
    const Bits bits = integer_bits(probe) + 96;
    const PrecReal T = anchor.with_precision(bits);
    const PrecReal P = PrecReal::two_pi(bits);
    for_each_chunk(chunks, threads, [&](std::size_t c) {
      const std::size_t lo = std::max<std::size_t>(1, c * chunk);
      const std::size_t hi = std::min(N, (c + 1) * chunk - 1);
      PrecReal x(bits);
      PrecReal q(bits);
      for (std::size_t n = lo; n <= hi; ++n) {
        mpfr_set_ui(x.raw(), n, MPFR_RNDN);
        mpfr_log(x.raw(), x.raw(), MPFR_RNDN);
        mpfr_mul(x.raw(), x.raw(), T.raw(), MPFR_RNDN);
        mpfr_div(q.raw(), x.raw(), P.raw(), MPFR_RNDN);
        mpfr_floor(q.raw(), q.raw());
        mpfr_mul(q.raw(), q.raw(), P.raw(), MPFR_RNDN);
        mpfr_sub(x.raw(), x.raw(), q.raw(), MPFR_RNDN);
        phase0_[n] = x.to_double();
      }
    });
  }
}

HardyEvaluator::HardyEvaluator(const PrecReal& anchor, double radius, ZEvalConfig cfg)
    : HardyEvaluator(std::make_shared<const MainSumTable>(anchor, radius, cfg.threads), cfg) {}

HardyEvaluator::HardyEvaluator(std::shared_ptr<const MainSumTable> table, ZEvalConfig cfg)
    : table_(std::move(table)), cfg_(cfg) {
  if (cfg_.chunk == 0) throw ContractError("ZEvalConfig: chunk must be positive");
  if (!(cfg_.c_param >= 2.718281828459045)) throw ContractError("ZEvalConfig: c must be >= e");
  require_floor(table_->anchor() - table_->radius(), cfg_);
  theta_prime_anchor_ = theta_prime(table_->anchor()).to_double();
}

HardyEvaluator::Point HardyEvaluator::prepare(double x, int max_k) const {
  if (std::fabs(x) > table_->radius()) {
    throw ContractError("HardyEvaluator: offset " + std::to_string(x) + " outside the table radius");
  }
  const PrecReal& T = table_->anchor();
  const Bits bits = std::max(T.precision(), phase_precision(T));
  PrecReal t = T.with_precision(bits) + x;
  Point p;
  p.theta_prime = theta_prime(t).to_double();
  if (max_k < 0 || max_k > cfg_.c_param / 2 * p.theta_prime) {
    throw ContractError("z_deriv: order " + std::to_string(max_k) + " exceeds (c/2) theta'(t) = " +
                        std::to_string(cfg_.c_param / 2 * p.theta_prime));
  }
  p.theta_mod = reduce_phase(t, 1).to_double();
  p.terms = main_sum_terms(t);
  if (p.terms > table_->size()) throw ContractError("HardyEvaluator: table too short for t");
  ++evaluations_;
  return p;
}

std::vector<double> HardyEvaluator::derivatives(double x, int max_k) const {
  const Point p = prepare(x, max_k);
  const std::size_t K = static_cast<std::size_t>(max_k) + 1;
  const std::size_t chunk = cfg_.chunk;
  const std::size_t chunks = (p.terms + chunk - 1) / chunk;
  std::vector<double> partial(chunks * K, 0.0);
  const MainSumTable& tab = *table_;
  for_each_chunk(chunks, cfg_.threads, [&](std::size_t c) {
    std::vector<CompensatedSum> acc(K);
    const std::size_t lo = c * chunk + 1;
    const std::size_t hi = std::min(p.terms, (c + 1) * chunk);
    for (std::size_t n = lo; n <= hi; ++n) {
      const double ln = tab.log_n(n);
      const double phi = p.theta_mod - tab.phase0(n) - x * ln;
      double s, co;
      sincos(phi, &s, &co);
      const double trig[4] = {co, -s, -co, s};
      const double L = p.theta_prime - ln;
      double w = 2.0 * tab.inv_sqrt(n);
      for (std::size_t k = 0; k < K; ++k) {
        acc[k].add(w * trig[k & 3]);
        w *= L;
      }
    }
    for (std::size_t k = 0; k < K; ++k) partial[c * K + k] = acc[k].value();
  });
  std::vector<double> out(K);
  for (std::size_t k = 0; k < K; ++k) {
    CompensatedSum total;
    for (std::size_t c = 0; c < chunks; ++c) total.add(partial[c * K + k]);
    out[k] = total.value();
  }
  return out;
}

double HardyEvaluator::partial_sum_min(double x) const {
  const Point p = prepare(x, 1);
  const std::size_t chunk = cfg_.chunk;
  const std::size_t chunks = (p.terms + chunk - 1) / chunk;
  std::vector<double> sums(chunks), mins(chunks);
  const MainSumTable& tab = *table_;
  for_each_chunk(chunks, cfg_.threads, [&](std::size_t c) {
    CompensatedSum acc;
    double lowest = std::numeric_limits<double>::infinity();
    const std::size_t lo = c * chunk + 1;
    const std::size_t hi = std::min(p.terms, (c + 1) * chunk);
    for (std::size_t n = lo; n <= hi; ++n) {
      const double ln = tab.log_n(n);
      const double phi = p.theta_mod - tab.phase0(n) - x * ln;
      acc.add(-2.0 * tab.inv_sqrt(n) * (p.theta_prime - ln) * std::sin(phi));
      lowest = std::min(lowest, acc.value());
    }
    sums[c] = acc.value();
    mins[c] = lowest;
  });
  double running = 0.0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < chunks; ++c) {
    lowest = std::min(lowest, running + mins[c]);
    running += sums[c];
  }
  return lowest;
}

PrecReal z_deriv(const PrecReal& t, int k, const ZEvalConfig& cfg) {
  require_floor(t, cfg);
  HardyEvaluator ev(t, 0.0, cfg);
  return PrecReal(ev.derivatives(0.0, k)[static_cast<std::size_t>(k)], kMinBits);
}

PrecReal partial_sum_min(const PrecReal& t, const ZEvalConfig& cfg) {
  require_floor(t, cfg);
  HardyEvaluator ev(t, 0.0, cfg);
  return PrecReal(ev.partial_sum_min(0.0), kMinBits);
}

LogMag z2k_bound(const PrecReal& T, long K) {
  const Bits bits = std::max<Bits>(T.precision(), kDefaultBits);
  PrecReal Tw = T.with_precision(bits);
  PrecReal tp = theta_prime(Tw);
  const double k = static_cast<double>(K);
  if (!(tp / 4.0 < k) || !(tp * 7.0 / 8.0 >= k)) {
    throw ContractError("z2k_bound: K = " + std::to_string(K) + " outside (theta'/4, 7 theta'/8] = (" +
                        (tp / 4.0).to_string(8) + ", " + (tp * 7.0 / 8.0).to_string(8) + "]");
  }
  PrecReal s = 0.5 + PrecReal(2 * K, bits) / tp;
  PrecReal z3 = zeta_real(s) * 3.0;
  PrecReal m = min(log(Tw), z3);
  return LogMag::from(m) * LogMag::from(tp).pow(PrecReal(2 * K, bits));
}

}  // namespace zwin

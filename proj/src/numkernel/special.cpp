#include "zwin/numkernel/special.hpp"

#include <array>
#include <string>
#include <vector>

#include "zwin/numkernel/bernoulli.hpp"
#include "zwin/numkernel/errors.hpp"

namespace zwin {

namespace {

// (1 - 2^{1-2k}) |b_{2k}|, the numerators of the theta Stirling series.
PrecReal stirling_coefficient(int k, Bits bits) {
  mpq_class b = abs(bernoulli_cache().number(2 * k));
  mpq_class f = 1 - mpq_class(1, 1) / (mpz_class(1) << (2 * k - 1));
  return to_prec(b * f, bits);
}

void require_theta_domain(const PrecReal& t) {
  if (!(t >= 10.0)) {
    throw DomainError("theta: t = " + t.to_string(12) +
                      " below the asymptotic validity floor 10");
  }
}

// Sums sum_k coef(k) * t^-(2k+shift) / denom(k) until terms fall below `tol`.
template <typename Denominator>
PrecReal stirling_tail(const PrecReal& t, int shift, Denominator denom,
                       const PrecReal& tol, const char* who) {
  const Bits w = t.precision();
  PrecReal inv_t2 = 1.0 / (t * t);
  PrecReal power = pow(t, -static_cast<long>(2 + shift));
  PrecReal sum(w);
  PrecReal prev_abs(w);
  const int kmax = bernoulli_cache().max_degree() / 2;
  for (int k = 1; k <= kmax; ++k) {
    PrecReal term = stirling_coefficient(k, w) * power / denom(k);
    PrecReal a = abs(term);
    if (a < tol) return sum;
    if (k > 1 && a > prev_abs) {
      throw PrecisionError(std::string(who) +
                           ": asymptotic series cannot reach the requested "
                           "precision at t = " + t.to_string(12));
    }
    sum += term;
    prev_abs = a;
    power *= inv_t2;
  }
  throw PrecisionError(std::string(who) + ": series budget exhausted");
}

PrecReal abs_tolerance(const PrecReal& leading, Bits bits) {
  long e = leading.is_zero() ? 0 : leading.exponent2();
  return ldexp(PrecReal(1L, bits), std::min<long>(0, e) - static_cast<long>(bits) - 2);
}

}  // namespace

PrecReal frac(const PrecReal& x) { return x - floor(x); }

PrecReal theta(const PrecReal& t) {
  require_theta_domain(t);
  const Bits bits = t.precision();
  const Bits w = bits + 16;
  PrecReal tw = t.with_precision(w);
  PrecReal pi = PrecReal::pi(w);
  PrecReal main = tw / 2.0 * log(tw / (2.0 * pi)) - tw / 2.0 - pi / 8.0;
  PrecReal tol = ldexp(PrecReal(1L, w), std::max<long>(main.exponent2(), 0) -
                                            static_cast<long>(bits) - 2);
  // t^-(2k-1) / (4k(2k-1))
  PrecReal tail = stirling_tail(
      tw, -1, [](int k) { return static_cast<long>(4 * k * (2 * k - 1)); }, tol,
      "theta");
  return (main + tail).with_precision(bits);
}

PrecReal theta_prime(const PrecReal& t) {
  require_theta_domain(t);
  const Bits bits = t.precision();
  const Bits w = bits + 16;
  PrecReal tw = t.with_precision(w);
  PrecReal main = log(tw / PrecReal::two_pi(w)) / 2.0;
  PrecReal tol = abs_tolerance(main, bits);
  PrecReal tail = stirling_tail(
      tw, 0, [](int k) { return static_cast<long>(4 * k); }, tol, "theta_prime");
  return (main - tail).with_precision(bits);
}

PrecReal theta_pp(const PrecReal& t) {
  require_theta_domain(t);
  const Bits bits = t.precision();
  const Bits w = bits + 16;
  PrecReal tw = t.with_precision(w);
  PrecReal main = 0.5 / tw;
  PrecReal tol = ldexp(PrecReal(1L, w), main.exponent2() - static_cast<long>(bits) - 2);
  PrecReal tail = stirling_tail(
      tw, 1, [](int) { return 2L; }, tol, "theta_pp");
  return (main + tail).with_precision(bits);
}

Bits phase_precision(const PrecReal& t) {
  PrecReal t64 = t.with_precision(96);
  PrecReal prod = t64 * theta_prime(t64);
  return static_cast<Bits>(integer_bits(prod)) + 80;
}

PrecReal reduce_phase(const PrecReal& t, unsigned long n, int fraction_bits) {
  if (n == 0) throw ContractError("reduce_phase: n must be >= 1");
  if (fraction_bits < 60) fraction_bits = 60;
  const Bits bits = t.precision();
  PrecReal logn(static_cast<long>(n), bits);
  logn = log(logn);
  // Integer bits of the larger of theta(t) ~ t log t and t log n.
  PrecReal probe = t.with_precision(64) * (logn.with_precision(64) + log(t.with_precision(64)));
  const long need = integer_bits(probe) + fraction_bits;
  if (bits < need) {
    throw PrecisionError("reduce_phase: precision " + std::to_string(bits) +
                         " bits < required " + std::to_string(need) + " bits");
  }
  PrecReal x = theta(t) - t * logn;
  const Bits w = bits + 16;
  PrecReal two_pi = PrecReal::two_pi(w + integer_bits(x));
  PrecReal xw = x.with_precision(two_pi.precision());
  PrecReal r = xw - two_pi * floor(xw / two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r -= two_pi;
  return r.with_precision(bits);
}

PrecReal hurwitz_zeta(const PrecReal& s, const PrecReal& q) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1");
  if (!(q > 0.0)) throw DomainError("hurwitz_zeta: requires q > 0");
  const Bits bits = std::max(s.precision(), q.precision());
  const Bits w = bits + 32;
  PrecReal sw = s.with_precision(w);
  PrecReal qw = q.with_precision(w);
  const auto& cache = bernoulli_cache();
  for (long n_direct = std::max<long>(16, w / 4);; n_direct *= 2) {
    PrecReal head(w);
    for (long j = 0; j < n_direct; ++j) {
      head += pow(qw + static_cast<double>(j), -sw);
    }
    PrecReal x = qw + static_cast<double>(n_direct);
    PrecReal xs = pow(x, -sw);
    PrecReal sum = head + x * xs / (sw - 1.0) + xs / 2.0;
    PrecReal tol = ldexp(abs(sum), -static_cast<long>(w) + 2);
    // rising = s (s+1) ... (s+2i-2); power = x^{-s-2i+1}
    PrecReal rising = sw;
    PrecReal power = xs / x;
    PrecReal inv_x2 = 1.0 / (x * x);
    PrecReal fact(2L, w);  // (2i)!
    bool converged = false;
    PrecReal prev(w);
    for (int i = 1; 2 * i <= cache.max_degree(); ++i) {
      PrecReal term = to_prec(cache.number(2 * i), w) / fact * rising * power;
      PrecReal a = abs(term);
      if (a < tol) {
        converged = true;
        break;
      }
      if (i > 1 && a > prev) break;
      sum += term;
      prev = a;
      rising *= (sw + static_cast<double>(2 * i - 1)) * (sw + static_cast<double>(2 * i));
      power *= inv_x2;
      fact *= static_cast<long>((2 * i + 1) * (2 * i + 2));
    }
    if (converged) return sum.with_precision(bits);
    if (n_direct > (1L << 22)) throw ConvergenceError("hurwitz_zeta: no convergence");
  }
}

PrecReal zeta_real(const PrecReal& s) {
  if (!(s > 1.0)) throw DomainError("zeta_real: requires s > 1, got " + s.to_string(12));
  const Bits bits = s.precision();
  PrecReal eps = s - 1.0;
  if (eps < 1e-3 && bits <= 128) {
    // Laurent expansion 1/(s-1) + sum_k (-1)^k gamma_k (s-1)^k / k!.
    static const std::array<const char*, 9> stieltjes = {
        "0.5772156649015328606065120900824024310422",
        "-0.07281584548367672486058637587490131913774",
        "-0.009690363192872318484530386035212529359066",
        "0.002053834420303345866160046542753384285716",
        "0.002325370065467300057468170177526068000904",
        "0.0007933238173010627017533348774444448307315",
        "-0.0002387693454301996098724218419080042777837",
        "-0.0005272895670577510460740975054788582819963",
        "-0.0003521233538030395096020521650012087417292"};
    const Bits w = bits + 16;
    PrecReal e = eps.with_precision(w);
    PrecReal sum = 1.0 / e;
    PrecReal power(1L, w);
    PrecReal fact(1L, w);
    for (std::size_t k = 0; k < stieltjes.size(); ++k) {
      if (k > 0) {
        power *= e;
        fact *= static_cast<long>(k);
      }
      PrecReal g = PrecReal::parse(stieltjes[k], w);
      PrecReal term = g * power / fact;
      if (k % 2 == 1) term = -term;
      sum += term;
    }
    return sum.with_precision(bits);
  }
  return hurwitz_zeta(s, PrecReal(1L, bits));
}

}  // namespace zwin

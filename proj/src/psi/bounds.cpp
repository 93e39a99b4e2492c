#include "zwin/psi/bounds.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zwin/hardy/main_sum.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"

namespace zwin {

namespace {

constexpr Bits kConstBits = 192;
constexpr long kExactTailMaxR = 512;
constexpr long kDirectBudget = 10'000'000;

// Coefficients of prod_{j=1}^{r-1} (1 - j^2 y)^2 in y.
std::vector<mpz_class> square_product_coeffs(long r) {
  std::vector<mpz_class> p{1};
  for (long j = 1; j < r; ++j) {
    const mpz_class jj = mpz_class(j) * j;
    for (int twice = 0; twice < 2; ++twice) {
      p.push_back(0);
      for (std::size_t m = p.size() - 1; m > 0; --m) p[m] -= jj * p[m - 1];
    }
  }
  return p;
}

PrecReal from_mpz(const mpz_class& z, Bits bits) {
  PrecReal r(bits);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace

LogMag c_constant(long l, long r) {
  if (r < 1) throw ContractError("c_constant: r must be >= 1");
  if (l < r + 1) throw ContractError("c_constant: requires l >= r + 1");
  const Bits bits = kConstBits;
  const long e = 2 * l - 1;
  const long p = 4 * (l - r);

  // term_s = ((r/u)^{2l-1} binom(2r+s-1, s))^2 with u = r + s; term_0 = 1.
  PrecReal term(1L, bits);
  PrecReal sum(1L, bits);
  PrecReal c0 = pow(PrecReal(r, bits), e);
  for (long j = 2; j < 2 * r; ++j) c0 /= j;
  const PrecReal c0sq = c0 * c0;

  auto advance = [&](long s) {
    // term_{s+1} / term_s = ((u/(u+1))^{2l-1} (2r+s)/(s+1))^2
    const long u = r + s;
    PrecReal ratio = pow(PrecReal::ratio(u, u + 1, bits), e) * PrecReal::ratio(2 * r + s, s + 1, bits);
    term *= ratio * ratio;
    sum += term;
  };

  // Direct summation while the majorant sum_{u>=U} u^-p <= U^-p + U^{1-p}/(p-1)
  // is not yet negligible.
  const long S = r <= kExactTailMaxR ? std::max<long>(64, 4 * r * r) : kDirectBudget;
  for (long s = 0; s + 1 < S; ++s) {
    advance(s);
    if (s % 64 != 63) continue;
    const PrecReal U(r + s + 2, bits);
    PrecReal bound = c0sq * (pow(U, -p) + pow(U, 1 - p) / (p - 1));
    if (bound < sum * 1e-30) return LogMag::from(sqrt(sum + bound * 0.5));
  }
  if (r > kExactTailMaxR) {
    throw ConvergenceError("c_constant: tail of c_{" + std::to_string(e) + "," + std::to_string(r) +
                           "} not below tolerance within " + std::to_string(kDirectBudget) + " terms");
  }
  // Remaining u >= S + r: c0^2 sum_m P_m zeta_H(p + 2m, S + r).
  const auto P = square_product_coeffs(r);
  const PrecReal q(S + r, bits);
  PrecReal tail(bits);
  for (std::size_t m = 0; m < P.size(); ++m) {
    if (P[m] == 0) continue;
    tail += from_mpz(P[m], bits) * hurwitz_zeta(PrecReal(p + 2 * static_cast<long>(m), bits), q);
  }
  sum += c0sq * tail;
  return LogMag::from(sqrt(sum));
}

LogMag e_bound(long K, long n, const PrecReal& T, const PrecReal& a) {
  if (n < 1) throw ContractError("e_bound: n must be >= 1");
  if (K < n + 1) throw ContractError("e_bound: requires K >= n + 1");
  if (!(a > 0.0)) throw DomainError("e_bound: a must be positive");
  const Bits bits = std::max<Bits>(kConstBits, T.precision());
  PrecReal geo = a.with_precision(bits) * 2.0 / (PrecReal::pi(bits) * n);
  LogMag head = LogMag::from(sqrt(PrecReal(0.5, bits)) * pow(PrecReal(2L, bits), n));
  return head * c_constant(K, n) * LogMag::from(geo).pow(PrecReal(2 * K, bits)) * z2k_bound(T, K);
}

}  // namespace zwin

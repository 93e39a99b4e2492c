#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "zwin/numkernel/bernoulli.hpp"
#include "zwin/numkernel/divided_difference.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"
#include "zwin/numkernel/series.hpp"
#include "zwin/numkernel/special.hpp"

using namespace zwin;

namespace {

// theta(10^6) from mpmath.siegeltheta at 40 digits (tests/oracles/mpmath_reference.py).
constexpr const char* kTheta1e6 = "5488816.353078403444882823154365663184116";

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("PrecReal arithmetic keeps the larger precision") {
  PrecReal a(1.5, 80);
  PrecReal b(2.25, 200);
  CHECK((a + b).precision() == 200);
  CHECK((a * 3.0).precision() == 80);
  CHECK((a + b).to_double() == 3.75);
  CHECK(PrecReal(1.0, 10).precision() == kMinBits);
}

TEST_CASE("PrecReal decimal round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-30, 30);
  for (Bits bits : {64, 113, 200, 512}) {
    for (int i = 0; i < 50; ++i) {
      PrecReal x = exp(PrecReal(u(rng), bits)) * PrecReal(u(rng), bits);
      PrecReal back = PrecReal::parse(x.to_string(), bits);
      CHECK(back == x);
    }
  }
  CHECK_THROWS_AS(PrecReal::parse("12x", 64), ContractError);
}

TEST_CASE("Bernoulli polynomials follow the integral normalisation") {
  const auto& cache = bernoulli_cache();
  // int_x^{x+1} (t^2 + b t + c) dt = x^2 forces b = -1, c = 1/6.
  const auto& b2 = cache.coefficients(2);
  CHECK(b2[2] == 1);
  CHECK(b2[1] == -1);
  CHECK(b2[0] == mpq_class(1, 6));
  CHECK(cache.number(1) == mpq_class(-1, 2));
  CHECK(bernoulli_poly(2, PrecReal(0.5, 128)).to_double() == doctest::Approx(-1.0 / 12).epsilon(1e-16));
  CHECK(bernoulli_poly(0, PrecReal(0.37, 128)).to_double() == 1.0);
  CHECK(bernoulli_poly(3, PrecReal(0.0, 128)).is_zero());
  CHECK(bernoulli_poly(3, PrecReal(1.0, 128)).is_zero());
  for (int n = 0; n <= 30; ++n) CHECK(cache.satisfies_integral_identity(n));
  // B_n(1) = B_n(0) for n >= 2, exactly.
  for (int n = 2; n <= 60; ++n) {
    mpq_class at_one = 0;
    for (const auto& c : cache.coefficients(n)) at_one += c;
    CHECK(at_one == cache.coefficients(n)[0]);
  }
  CHECK_THROWS_AS(cache.coefficients(kDefaultBernoulliDegree + 1), UnsupportedDegreeError);
}

TEST_CASE("B_2l(frac(u)) is continuous across integers") {
  for (int l = 1; l <= 8; ++l) {
    for (double eps : {1e-6, 1e-9, 1e-12}) {
      PrecReal e(eps, 200);
      PrecReal right = bernoulli_poly(2 * l, frac(e));
      PrecReal left = bernoulli_poly(2 * l, frac(-e));
      CHECK(abs(right - left).to_double() < 1e3 * eps * std::tgamma(2.0 * l + 1));
    }
  }
}

TEST_CASE("frac") {
  CHECK(frac(PrecReal(2.75, 64)).to_double() == 0.75);
  CHECK(frac(PrecReal(-0.25, 64)).to_double() == 0.75);
  CHECK(frac(PrecReal(3.0, 64)).to_double() == 0.0);
}

TEST_CASE("theta against mpmath and window constants") {
  PrecReal t(1e6, 160);
  PrecReal oracle = PrecReal::parse(kTheta1e6, 160);
  CHECK(abs(theta(t) - oracle).to_double() < 1e-30);

  PrecReal t1 = PrecReal::parse("7.1934200352263711248e14", 160);
  CHECK(ceil(theta_prime(t1) / 4.0).to_double() == 5.0);
  PrecReal t2 = PrecReal::parse("1e20000", 160);
  CHECK(floor(theta_prime(t2) * 7.0 / 8.0).to_double() == 20146.0);

  // theta'(t) - log(t/2pi)/2 -> 0.
  double prev = 1.0;
  for (double x : {1e2, 1e4, 1e6, 1e8}) {
    PrecReal tx(x, 128);
    double d = std::fabs((theta_prime(tx) - log(tx / PrecReal::two_pi(128)) / 2.0).to_double());
    CHECK(d < prev);
    prev = d;
  }
  CHECK_THROWS_AS(theta(PrecReal(5.0, 64)), DomainError);
}

TEST_CASE("theta derivatives agree with central differences") {
  PrecReal t(1e6, 256);
  PrecReal h = ldexp(PrecReal(1L, 256), -30);
  PrecReal fd1 = (theta(t + h) - theta(t - h)) / (h * 2.0);
  PrecReal tp = theta_prime(t);
  CHECK((abs(fd1 - tp) / tp).to_double() < 1e-20);
  PrecReal fd2 = (theta_prime(t + h) - theta_prime(t - h)) / (h * 2.0);
  PrecReal tpp = theta_pp(t);
  CHECK((abs(fd2 - tpp) / tpp).to_double() < 1e-20);
}

TEST_CASE("reduce_phase") {
  PrecReal t(1e6, 160);
  PrecReal two_pi = PrecReal::two_pi(300);
  // n = 1 gives theta mod 2pi.
  PrecReal th = PrecReal::parse(kTheta1e6, 300);
  PrecReal expect1 = th - two_pi * floor(th / two_pi);
  CHECK(abs(reduce_phase(t, 1) - expect1).to_double() < std::ldexp(1.0, -50));

  // n = 2 against a 300-bit direct evaluation from the mpmath theta.
  PrecReal x = th - PrecReal(1e6, 300) * log(PrecReal(2L, 300));
  PrecReal expect2 = x - two_pi * floor(x / two_pi);
  CHECK(abs(reduce_phase(t, 2) - expect2).to_double() < std::ldexp(1.0, -50));

  // Difference consistency modulo 2pi.
  for (unsigned long n : {3ul, 17ul, 1000ul, 99991ul}) {
    PrecReal d = reduce_phase(t, n) - reduce_phase(t, 1) +
                 PrecReal(1e6, 300) * log(PrecReal(static_cast<long>(n), 300));
    PrecReal r = d - two_pi * round(d / two_pi);
    CHECK(abs(r).to_double() < std::ldexp(1.0, -45));
  }

  // Bit-identical repeats.
  CHECK(reduce_phase(t, 12345) == reduce_phase(t, 12345));

  // Precision budget enforcement.
  PrecReal big = PrecReal::parse("7.1934200352263711248e14", 64);
  CHECK_THROWS_AS(reduce_phase(big, 1000), PrecisionError);
  CHECK_NOTHROW(reduce_phase(big.with_precision(phase_precision(big)), 1000));
}

TEST_CASE("zeta_real") {
  PrecReal two(2L, 128);
  PrecReal pi = PrecReal::pi(128);
  CHECK(abs(zeta_real(two) - pi * pi / 6.0).to_double() < 1e-35);

  // Oracle: direct summation with 10^6 terms plus the integral tail.
  const double s = 2.25;
  const long N = 1000000;
  double sum = 0.0, comp = 0.0;
  for (long n = N; n >= 1; --n) {
    double y = std::pow(static_cast<double>(n), -s) - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double tail = std::pow(static_cast<double>(N), 1 - s) / (s - 1) -
                      std::pow(static_cast<double>(N), -s) / 2;
  CHECK(rel(zeta_real(PrecReal(s, 128)).to_double(), sum + tail) < 1e-10);

  // Laurent check: 1/(s-1) + gamma to O((s-1)).
  PrecReal s1 = PrecReal::parse("1.0001", 128);
  double z1 = zeta_real(s1).to_double();
  CHECK(std::fabs(z1 - (1e4 + 0.5772156649015329)) < 1e-5);
  CHECK(z1 == doctest::Approx(10000.57722294643762907).epsilon(1e-15));
  // Branch agreement just above the Laurent switch.
  PrecReal s2 = PrecReal::parse("1.0011", 128);
  PrecReal s3 = PrecReal::parse("1.0009", 128);
  PrecReal via_em = hurwitz_zeta(s3, PrecReal(1L, 128));
  CHECK((abs(zeta_real(s3) - via_em) / via_em).to_double() < 1e-25);
  CHECK(zeta_real(s2) < zeta_real(s3));
  CHECK_THROWS_AS(zeta_real(PrecReal(1.0, 64)), DomainError);
}

TEST_CASE("LogMag") {
  LogMag a = LogMag::from(PrecReal::parse("8.55e864", 128));
  LogMag b = LogMag::from(PrecReal::parse("8.86e212", 128));
  LogMag p = a * b;
  CHECK(p.log10_abs() == a.log10_abs() + b.log10_abs());
  CHECK(p.to_string(3) == "7.58e1077");
  CHECK(LogMag::from(-0.5).to_string(2) == "-5.0e-1");
  CHECK(LogMag::from(9.996).to_string(3) == "1.00e1");
  CHECK(a.to_prec(128) > 0.0);
  CHECK_THROWS_AS(a.to_double(), DomainError);
}

TEST_CASE("divided differences") {
  std::vector<double> nodes = {-0.7, -0.1, 0.3, 0.35, 0.9};
  auto power = [](double y, std::size_t m) {
    // Taylor coefficients of y^4.
    std::vector<double> c(m);
    double binom[5] = {1, 4, 6, 4, 1};
    for (std::size_t j = 0; j < m; ++j) c[j] = j <= 4 ? binom[j] * std::pow(y, 4.0 - j) : 0;
    return c;
  };
  CHECK(divided_difference<double>(nodes, power) == doctest::Approx(1.0).epsilon(1e-12));

  auto w = divided_difference_weights<double>(nodes);
  double s0 = 0, s4 = 0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    s0 += w[k];
    s4 += w[k] * std::pow(nodes[k], 4);
  }
  CHECK(std::fabs(s0) < 1e-12);
  CHECK(s4 == doctest::Approx(1.0).epsilon(1e-12));

  // f[y, y] = f'(y) for asin.
  PrecReal y0(0.3, 128);
  std::vector<PrecReal> twice = {y0, y0};
  auto asin_taylor = [](const PrecReal& y, std::size_t m) {
    auto s = asin_series(y, m);
    s.resize(m, PrecReal(y.precision()));
    return s;
  };
  PrecReal d = divided_difference<PrecReal>(twice, asin_taylor);
  CHECK(d.to_double() == doctest::Approx(1.0 / std::sqrt(1 - 0.09)).epsilon(1e-15));

  // Confluent limit agrees with nearly coincident nodes.
  std::vector<PrecReal> triple = {PrecReal(-0.2, 256), y0.with_precision(256), y0.with_precision(256)};
  std::vector<PrecReal> spread = {PrecReal(-0.2, 256), y0.with_precision(256),
                                  y0.with_precision(256) + ldexp(PrecReal(1L, 256), -60)};
  PrecReal exact = divided_difference<PrecReal>(triple, asin_taylor);
  PrecReal near = divided_difference<PrecReal>(spread, asin_taylor);
  CHECK(abs(exact - near).to_double() < 1e-16);
  CHECK_THROWS_AS(divided_difference_weights<PrecReal>(triple), CoincidentNodesError);
}

TEST_CASE("asin series matches derivatives") {
  auto s = asin_series(0.5, 4);
  CHECK(s[0] == doctest::Approx(std::asin(0.5)));
  CHECK(s[1] == doctest::Approx(1 / std::sqrt(0.75)));
  CHECK(s[2] == doctest::Approx(0.5 * 0.5 / std::pow(0.75, 1.5)));
  // asin''' = (1 + 2x^2) / (1 - x^2)^{5/2}
  CHECK(s[3] == doctest::Approx((1 + 2 * 0.25) / std::pow(0.75, 2.5) / 6));
}

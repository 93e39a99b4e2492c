#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "zwin/numkernel/errors.hpp"
#include "zwin/psi/bounds.hpp"
#include "zwin/psi/coeff_table.hpp"
#include "zwin/psi/identity.hpp"
#include "zwin/psi/psi.hpp"

using namespace zwin;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Sorted, pairwise separated nodes in (-a, a).
std::vector<double> random_nodes(std::mt19937_64& rng, double a, int count, double sep = 1e-3) {
  std::uniform_real_distribution<double> U(-0.98 * a, 0.98 * a);
  while (true) {
    std::vector<double> x(count);
    for (auto& v : x) v = U(rng);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (int i = 1; i < count; ++i) ok = ok && x[i] - x[i - 1] > sep * a;
    if (ok) return x;
  }
}

DerivativeFn sine_fn(double w = 1.0) {
  return [w](double x, int m) {
    std::vector<double> d(m + 1);
    for (int j = 0; j <= m; ++j) d[j] = std::pow(w, j) * std::sin(w * x + j * kPi / 2);
    return d;
  };
}

DerivativeFn exp_fn() {
  return [](double x, int m) { return std::vector<double>(m + 1, std::exp(x)); };
}

DerivativeFn zero_fn() {
  return [](double, int m) { return std::vector<double>(m + 1, 0.0); };
}

DerivativeFn one_fn() {
  return [](double, int m) {
    std::vector<double> d(m + 1, 0.0);
    d[0] = 1.0;
    return d;
  };
}

}  // namespace

TEST_CASE("mu weights") {
  const double a = 0.5, x = 0.2;
  NodeSet two(a, {-x, x});
  const auto mu = mu_weights(two);
  const double s = std::sin(kPi * x / (2 * a));
  CHECK(mu[0].to_double() == doctest::Approx(-1 / (2 * s)).epsilon(1e-14));
  CHECK(mu[1].to_double() == doctest::Approx(1 / (2 * s)).epsilon(1e-14));

  std::mt19937_64 rng(7);
  for (int n : {1, 3, 6}) {
    NodeSet ns(0.7, random_nodes(rng, 0.7, n + 1));
    const auto m = mu_weights(ns, 256);
    const auto u = ns.u(256);
    PrecReal sum(256), top(256);
    for (std::size_t k = 0; k < m.size(); ++k) {
      sum += m[k];
      top += m[k] * pow(u[k], static_cast<long>(n));
    }
    CHECK(std::fabs(sum.to_double()) < 1e-60);
    CHECK(std::fabs(top.to_double() - 1) < 1e-60);
  }
  CHECK_THROWS_AS(mu_weights(NodeSet(0.5, {0.1, 0.1})), CoincidentNodesError);
}

TEST_CASE("node set domain") {
  CHECK_THROWS_AS(NodeSet(0.0, {0.0, 0.1}), DomainError);
  CHECK_THROWS_AS(NodeSet(0.5, {0.1}), ContractError);
  CHECK_THROWS_AS(NodeSet(0.5, {0.1, 0.5}), DomainError);
  CHECK_THROWS_AS(NodeSet(0.5, {-0.6, 0.1}), DomainError);
  NodeSet ns(0.5, {0.1, 0.2});
  CHECK_THROWS_AS(psi(1, ns, PrecReal(0.51, 128)), DomainError);
}

TEST_CASE("sign of Psi at the window ends") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> A(0.1, 1.0);
  std::uniform_int_distribution<int> N(1, 7), L(1, 8);
  int cases = 0, failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const double a = A(rng);
    const int n = N(rng), l = L(rng);
    NodeSet ns(a, random_nodes(rng, a, n + 1));
    const PrecReal pa = psi(l, ns, ns.a());
    const PrecReal pm = psi(l, ns, -ns.a());
    const int s_plus = (l + 1) % 2 == 0 ? 1 : -1;
    const int s_minus = (n + l + 1) % 2 == 0 ? 1 : -1;
    if (!(pa * s_plus > 0.0) || !(pm * s_minus > 0.0)) {
      ++failures;
      MESSAGE("sign failure: a = " << a << " n = " << n << " l = " << l);
    }
    ++cases;
  }
  CHECK(cases == 1000);
  CHECK(failures == 0);
}

TEST_CASE("permutation invariance") {
  std::mt19937_64 rng(11);
  const double a = 0.6;
  auto x = random_nodes(rng, a, 6);
  const PrecReal at(0.13, 256);
  const PrecReal ref = psi(4, NodeSet(a, x), at, 160);
  for (int p = 0; p < 5; ++p) {
    std::shuffle(x.begin(), x.end(), rng);
    const PrecReal v = psi(4, NodeSet(a, x), at, 160);
    CHECK(abs(v - ref) <= abs(ref) * 1e-40);
  }
}

TEST_CASE("repeated nodes: continuity and contract") {
  std::mt19937_64 rng(5);
  const double a = 0.45;
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_nodes(rng, a, 4, 0.05);
    const int l = 1 + trial % 6;
    std::vector<double> merged = x, near1 = x, near2 = x;
    merged[2] = x[1];
    near1[2] = x[1] + 1e-6;
    near2[2] = x[1] + 2e-6;
    const PrecReal end = PrecReal(a, 128);
    const double v0 = psi(l, NodeSet(a, merged), end).to_double();
    const double v1 = psi(l, NodeSet(a, near1), end).to_double();
    const double v2 = psi(l, NodeSet(a, near2), end).to_double();
    const double d1 = std::fabs(v1 - v0), d2 = std::fabs(v2 - v0);
    CHECK(d1 <= 1e-3 * std::max(1.0, std::fabs(v0)));
    if (d1 > 1e-12 * std::max(1.0, std::fabs(v0))) CHECK(d2 / d1 == doctest::Approx(2.0).epsilon(0.05));
  }

  NodeSet rep(0.5, {-0.2, 0.1, 0.1, 0.3});
  CHECK_THROWS_AS(psi(2, rep, PrecReal(0.0, 128)), ContractError);
  CHECK_NOTHROW(psi(2, rep, PrecReal(0.5, 128)));
  CHECK_NOTHROW(psi(3, rep, PrecReal(0.0, 128)));
  // Interior continuity with 2l >= n + 2.
  const double m = psi(3, rep, PrecReal(0.05, 128)).to_double();
  const double s = psi(3, NodeSet(0.5, {-0.2, 0.1, 0.1 + 1e-7, 0.3}), PrecReal(0.05, 128)).to_double();
  CHECK(std::fabs(m - s) < 1e-5 * std::max(1.0, std::fabs(m)));
}

TEST_CASE("identity on the node polynomial itself") {
  std::mt19937_64 rng(3);
  NodeSet ns(0.4, random_nodes(rng, 0.4, 4));
  const auto res = verify_identity(times_node_polynomial(ns, one_fn()), ns, 3);
  CHECK(res.rhs == 0.0);
  CHECK(res.residual <= 1e-12 * res.scale);
}

TEST_CASE("identity for W sin and W exp") {
  std::mt19937_64 rng(17);
  {
    NodeSet ns(0.4, random_nodes(rng, 0.4, 4));
    const auto res = verify_identity(times_node_polynomial(ns, sine_fn()), ns, 4);
    MESSAGE("W sin: lhs " << res.lhs << " rhs " << res.rhs << " scale " << res.scale);
    CHECK(res.residual <= 1e-12 * res.scale);
  }
  {
    NodeSet ns(0.7, random_nodes(rng, 0.7, 6));
    const auto res = verify_identity(times_node_polynomial(ns, exp_fn()), ns, 6);
    MESSAGE("W exp: lhs " << res.lhs << " rhs " << res.rhs << " scale " << res.scale);
    CHECK(res.residual <= 1e-10 * res.scale);
  }
  NodeSet ns(0.4, {-0.1, 0.0, 0.1, 0.2});
  CHECK_THROWS_AS(verify_identity(zero_fn(), ns, 2), ContractError);
}

TEST_CASE("identity quadrature converges at high order") {
  NodeSet ns(0.9, {-0.6, -0.2, 0.3, 0.7});
  const auto f = times_node_polynomial(ns, sine_fn(120.0));
  const double ref = verify_identity(f, ns, 4, 1e-15).rhs;
  double prev = std::fabs(identity_rhs_fixed(f, ns, 4, 1) - ref);
  int measured = 0;
  for (int panels = 2; panels <= 16; panels *= 2) {
    const double err = std::fabs(identity_rhs_fixed(f, ns, 4, panels) - ref);
    if (err < 1e-12 * std::fabs(ref)) break;
    const double order = std::log2(prev / err);
    MESSAGE("panels " << panels << " error " << err << " order " << order);
    CHECK(order >= 8.0);
    ++measured;
    prev = err;
  }
  CHECK(measured >= 1);
}

TEST_CASE("Cauchy-Schwarz chain") {
  std::mt19937_64 rng(29);
  for (int n : {3, 5}) {
    const int r = (n + 3) / 2;
    NodeSet ns(0.5, random_nodes(rng, 0.5, n + 1));
    const auto f = times_node_polynomial(ns, exp_fn());
    const auto res = verify_identity(f, ns, r);
    const double bound = psi_norm2(r, ns).to_double() * derivative_l2(f, 0.5, 2 * r);
    CHECK(std::fabs(res.rhs) <= bound * (1 + 1e-12));
  }
}

TEST_CASE("c constant") {
  // Brute force: 10^6 terms of ((r/(r+s))^{2l-1} binom(2r+s-1, s))^2 at 256 bits.
  const long l = 5, r = 3;
  PrecReal sum(256);
  for (long s = 0; s < 1'000'000; ++s) {
    PrecReal binom(1L, 256);
    for (long j = 1; j <= 2 * r - 1; ++j) binom = binom * (s + j) / j;
    PrecReal t = pow(PrecReal::ratio(r, r + s, 256), 2 * l - 1) * binom;
    sum += t * t;
  }
  const double brute = sqrt(sum).to_double();
  const double c = c_constant(l, r).to_double();
  MESSAGE("c_{9,3} = " << c);
  CHECK(c == doctest::Approx(brute).epsilon(1e-12));

  for (long rr : {1L, 2L, 5L, 20L, 70L})
    for (long ll : {rr + 1, rr + 4}) CHECK(c_constant(ll, rr).to_double() >= 1.0);

  double prev = 1e300;
  for (long n : {64L, 128L, 256L, 512L}) {
    const long ll = static_cast<long>(2 * n * std::log(n) / std::log(std::log(n)));
    const double ratio = c_constant(ll, n).log10_double() * std::log(10.0) / n;
    CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK_THROWS_AS(c_constant(3, 3), ContractError);
  CHECK_THROWS_AS(c_constant(3, 0), ContractError);
}

TEST_CASE("e bound examples") {
  const PrecReal T1 = PrecReal::parse("7.1934200352263711248e14", 256);
  const PrecReal T2 = PrecReal::parse("3.924676458989430915525116928410362023e31", 256);
  CHECK(e_bound(5, 3, T1, PrecReal(0.38644, 128)).to_double() == doctest::Approx(2940.12).epsilon(1e-5));
  CHECK(e_bound(9, 7, T2, PrecReal(0.33794, 128)).to_double() == doctest::Approx(100375.07).epsilon(1e-5));
  const double l1 = e_bound(5, 3, T1, PrecReal(0.3, 128)).log10_double();
  const double l2 = e_bound(5, 3, T1, PrecReal(0.6, 128)).log10_double();
  CHECK(l2 - l1 == doctest::Approx(10 * std::log10(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(e_bound(3, 3, T1, PrecReal(0.3, 128)), ContractError);
}

TEST_CASE("L2 norm against its bound and under scaling") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> A(0.1, 1.0);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + 2 * (i % 3);
    const double a = A(rng);
    NodeSet ns(a, random_nodes(rng, a, n + 1, 0.01));
    for (int l = n + 1; l <= n + 4; ++l) {
      const double norm = psi_norm2(l, ns).to_double();
      const double bound = psi_norm_bound(l, ns).to_double();
      if (!(norm <= bound)) MESSAGE("norm " << norm << " > bound " << bound << " n = " << n << " l = " << l);
      CHECK(norm <= bound);
      ++checked;
    }
  }
  CHECK(checked == 200);

  NodeSet small(0.3, {-0.2, -0.05, 0.1, 0.25});
  NodeSet big(0.6, {-0.4, -0.1, 0.2, 0.5});
  for (int l = 4; l <= 6; ++l) {
    const double ratio = psi_norm2(l, big).to_double() / psi_norm2(l, small).to_double();
    CHECK(ratio == doctest::Approx(std::ldexp(std::sqrt(2.0), 2 * l - 1)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(psi_norm_bound(3, small), ContractError);
}

TEST_CASE("coefficient table at the first example window") {
  Window w;
  w.T = PrecReal::parse("7.1934200352263711248e14", 256);
  w.a = PrecReal(0.38644, 128);
  w.offsets = {-0.247622406722, -0.123289654419, -0.016588894246, 0.077602718737};
  const double bp[] = {0.20, 0.85, 2.25, 4.86, 9.53};
  const double bm[] = {1.13, 2.60, 4.46, 7.31, 12.08};
  // Derivatives reconstructed from printed d values: Z^(2k-1) = (-1)^{k+1} d theta'^{2k-1}.
  const double dp[] = {171.73, 45.20, 17.90, 8.99, 5.26};
  const double dm[] = {0.32, 0.60, 1.06, 1.55, 1.94};
  std::vector<OptReal> zp, zm;
  const double tp = 16.1857404798;
  for (int k = 1; k <= 5; ++k) {
    const double s = (k % 2 ? 1.0 : -1.0) * std::pow(tp, 2 * k - 1);
    zp.emplace_back(PrecReal(dp[k - 1] * s, 128));
    zm.emplace_back(PrecReal(dm[k - 1] * s, 128));
  }
  const CoeffTable t = coeff_table(w, 5, zp, zm);
  for (int k = 0; k < 5; ++k) {
    CHECK(std::fabs(t.beta_plus[k].to_double() - bp[k]) < 0.011);
    CHECK(std::fabs(t.beta_minus[k].to_double() - bm[k]) < 0.011);
    CHECK(std::fabs(t.d_plus[k]->to_double() - dp[k]) < 1e-6);
  }
  REQUIRE(t.complete());
  CHECK(*t.lhs_over_e <= 1.0);
  CHECK(t.e_bound.to_double() == doctest::Approx(2940.12).epsilon(1e-5));

  const std::string csv = to_csv(t);
  CHECK(csv.rfind("2k-1,beta_plus,d_plus,beta_minus,d_minus\n1,0.20198", 0) == 0);
  const auto j = to_json(t);
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][0]["order"] == 1);

  const CoeffTable partial = coeff_table(w, 5, {zp[0]}, {});
  CHECK_FALSE(partial.complete());
  CHECK(to_csv(partial).find("NA") != std::string::npos);
  CHECK_THROWS_AS(coeff_table(w, 3, {}, {}), ContractError);
}

TEST_CASE("mean sine check") {
  Window w;
  w.T = PrecReal(1e6, 128);
  w.a = PrecReal(0.5, 128);
  // theta'(1e6) / pi zeros per unit, placed symmetrically.
  w.offsets = {-0.375, -0.125, 0.125, 0.375};
  const auto m = mean_sine_check(w);
  CHECK(std::fabs(m.sine_sum) < 1e-15);
  CHECK(m.zero_count == 4);
  CHECK(m.delta_s == doctest::Approx(4 - m.smooth_count));
  CHECK(m.count_consistent);
}

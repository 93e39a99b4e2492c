#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles/problem_p_oracle.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/special.hpp"
#include "zwin/optim/phi_c.hpp"
#include "zwin/optim/problem_p.hpp"

using namespace zwin;

namespace {

constexpr Bits kBits = 256;

ProblemP to_problem(const oracle::Instance& in) {
  ProblemP p;
  p.n = static_cast<long>(in.lo.size()) - 1;
  for (std::size_t k = 0; k < in.lo.size(); ++k) {
    p.tau_minus.emplace_back(in.lo[k], kBits);
    p.tau_plus.emplace_back(in.hi[k], kBits);
  }
  p.target = PrecReal(in.target, kBits);
  return p;
}

std::vector<PrecReal> prec(const std::vector<double>& y) {
  std::vector<PrecReal> out;
  for (double v : y) out.emplace_back(v, kBits);
  return out;
}

PrecReal big_T() { return exp(PrecReal(20000L, kBits) * log(PrecReal(10L, kBits))); }

}  // namespace

TEST_CASE("tau_bounds clamps") {
  const PrecReal w(0.01, kBits), M(5.0, kBits);
  auto [lo, hi] = tau_bounds(3, w, M);
  CHECK(lo == -1.0);
  CHECK(hi > -1.0);
  auto [lo2, hi2] = tau_bounds(313, w, M);
  CHECK(hi2 == 1.0);
  CHECK(lo2 < 1.0);
}

TEST_CASE("tau_bounds interior at the large scenario") {
  const PrecReal T = big_T();
  const PrecReal a(0.22107, kBits);
  const PrecReal tp = theta_prime(T);
  const PrecReal w = tau_scale(a, tp);
  auto [lo, hi] = tau_bounds(200, w, PrecReal(158.27, kBits));
  CHECK(lo > -1.0);
  CHECK(hi < 1.0);
  CHECK(lo < hi);
  // Independent evaluation of the two cosines.
  const double wd = M_PI * M_PI / (2 * 0.22107 * tp.to_double());
  CHECK(lo.to_double() == doctest::Approx(-std::cos(wd * (201 - 158.27))).epsilon(1e-12));
  CHECK(hi.to_double() == doctest::Approx(-std::cos(wd * 202)).epsilon(1e-12));
}

TEST_CASE("objective_g examples") {
  CHECK(objective_g_value(prec({0.0})).to_double() == doctest::Approx(-1.0 / 48).epsilon(1e-14));
  const double h = 1e-6;
  CHECK(objective_g_value(prec({-h, h})).to_double() == doctest::Approx(1 / (4 * M_PI)).epsilon(1e-9));
  CHECK(objective_g_value(prec({0.0, 0.0})).to_double() == doctest::Approx(1 / (4 * M_PI)).epsilon(1e-14));
  // f agrees with the half-angle form B2(1/2 + asin(sqrt((1+t)/2))/pi).
  for (double t : {-0.9, -0.3, 0.2, 0.75}) {
    const double v = 0.5 + std::asin(std::sqrt((1 + t) / 2)) / M_PI;
    CHECK(objective_f(PrecReal(t, kBits)).to_double() == doctest::Approx(v * v - v + 1.0 / 6).epsilon(1e-14));
  }
  CHECK_THROWS_AS(objective_g_value(prec({0.2, 1.0})), DomainError);
  CHECK_THROWS_AS(objective_g_value(prec({-1.0, 0.3})), DomainError);
}

TEST_CASE("objective_g permutation invariance and oracle agreement") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-0.95, 0.95);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> y(6);
    for (auto& v : y) v = U(rng);
    if (trial % 4 == 0) y[2] = y[4];
    const double g = objective_g_value(prec(y)).to_double();
    auto z = y;
    std::shuffle(z.begin(), z.end(), rng);
    CHECK(objective_g_value(prec(z)).to_double() == doctest::Approx(g).epsilon(1e-12));
    CHECK(oracle::g_value(y) == doctest::Approx(g).epsilon(1e-9));
  }
}

TEST_CASE("validate rejects malformed and infeasible problems") {
  ProblemP p;
  p.n = 1;
  p.tau_minus = prec({-0.5, 0.1});
  p.tau_plus = prec({0.0, 0.4});
  p.target = PrecReal(0.2, kBits);
  CHECK_NOTHROW(p.validate());
  p.target = PrecReal(0.5, kBits);
  CHECK_THROWS_AS(p.validate(), InfeasibleError);
  CHECK_THROWS_AS(solve_p(p), InfeasibleError);
  p.target = PrecReal(0.2, kBits);
  p.tau_minus = prec({0.1, -0.5});
  CHECK_THROWS_AS(p.validate(), ContractError);
  p.tau_minus = prec({-0.5});
  CHECK_THROWS_AS(p.validate(), ContractError);
}

TEST_CASE("tight box forces y = tau") {
  ProblemP p;
  p.n = 3;
  p.tau_minus = prec({-0.7, -0.2, 0.1, 0.6});
  p.tau_plus = p.tau_minus;
  p.target = p.tau_minus[0] + p.tau_minus[1] + p.tau_minus[2] + p.tau_minus[3];
  const SolutionP s = solve_p(p);
  for (int k = 0; k < 4; ++k) CHECK(s.y[k] == p.tau_minus[k]);
  CHECK(s.J == 0);
  CHECK(s.L == 0);
  CHECK(s.objective_value.to_double() ==
        doctest::Approx(oracle::g_value({-0.7, -0.2, 0.1, 0.6})).epsilon(1e-9));
}

TEST_CASE("solve_p matches the face-enumeration oracle") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 24; ++i) {
    const int n = 1 + i % 5;
    const auto in = oracle::random_instance(rng, n);
    const auto ref = oracle::minimise(in);
    REQUIRE(std::isfinite(ref.value));
    const SolutionP s = solve_p(to_problem(in));
    CHECK(s.objective_value.to_double() == doctest::Approx(ref.value).epsilon(1e-9));
  }
}

TEST_CASE("solve_p structure on random instances") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 8;
    const auto in = oracle::random_instance(rng, n);
    const ProblemP p = to_problem(in);
    const SolutionP s = solve_p(p);
    CHECK_NOTHROW(s.check(p));
    CHECK(s.feasible_candidates >= 1);
    CHECK(s.audit.size() <= 100);
  }
}

TEST_CASE("solve_p dominates random feasible points") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    const int n = 2 + i;
    const auto in = oracle::random_instance(rng, n);
    const double best = solve_p(to_problem(in)).objective_value.to_double();
    int violations = 0;
    for (int s = 0; s < 10000; ++s) {
      const auto y = oracle::random_point(rng, in);
      REQUIRE(oracle::feasible(in, y, 1e-9));
      if (oracle::g_value(y) < best - 1e-12 * (1 + std::fabs(best))) ++violations;
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("phi_c with M_+ = 0") {
  // Without the push the target 0 lies below the sum of the lower bounds.
  const PrecReal T = exp(PrecReal(100L, kBits) * log(PrecReal(10L, kBits)));
  const PrecReal a(0.22107, kBits), zero(0L, kBits);
  CHECK_THROWS_AS(phi_c(T, a, zero, PrecReal(0.25, kBits), zero, zero), InfeasibleError);
  CHECK_THROWS_AS(phi_c(T, a, zero, PrecReal(1.0, kBits), zero, zero), ContractError);
}

TEST_CASE("phi_c small window") {
  const PrecReal T = exp(PrecReal(100L, kBits) * log(PrecReal(10L, kBits)));
  const PrecReal a(0.22107, kBits), zero(0L, kBits), M(12.0, kBits);
  const PhiCResult r = phi_c(T, a, M, PrecReal(0.25, kBits), zero, zero);
  CHECK(r.n == static_cast<long>(std::floor(2 * 0.22107 / M_PI * r.theta_prime.to_double() + 3.0)));
  CHECK(r.problem.target.to_double() == doctest::Approx(3.0));
  CHECK(r.beta1_lower.sign() == 1);
  CHECK_NOTHROW(r.solution.check(r.problem));
  const double expect = std::log10(4 * 0.22107 * r.theta_prime.to_double() * r.solution.objective_value.to_double());
  CHECK(r.beta1_lower.log10_double() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("phi_c monotonicity in c (diagnostic)") {
  const PrecReal T = exp(PrecReal(60L, kBits) * log(PrecReal(10L, kBits)));
  const PrecReal a(0.3, kBits), zero(0L, kBits), M(6.0, kBits);
  double prev = -1e300;
  int drops = 0;
  for (double c : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    try {
      const double v = phi_c(T, a, M, PrecReal(c, kBits), zero, zero).beta1_lower.log10_double();
      if (v < prev) ++drops;
      prev = v;
    } catch (const InfeasibleError&) {
      MESSAGE("c = " << c << " infeasible");
    }
  }
  if (drops > 0) MESSAGE("phi_c decreased with c " << drops << " times");
}

TEST_CASE("beta1_simple_lower") {
  const PrecReal T(7.1934200352263711248e14, kBits), a(0.38644, kBits);
  const double tp = theta_prime(T).to_double();
  const LogMag v0 = beta1_simple_lower(3, a, PrecReal(0L, kBits), T);
  CHECK(v0.to_prec(kBits).to_double() == doctest::Approx(2 * 0.38644 * tp / (3 * M_PI * M_PI * 9)).epsilon(1e-12));
  CHECK(v0.to_prec(kBits).to_double() <= 0.20);
  // (1 + t)^n factor squares when n t doubles.
  const PrecReal t(1e-3, kBits), big(1e5, kBits);
  const double f1 = beta1_simple_lower(1000, a, t, big).log10_double() - beta1_simple_lower(1000, a, PrecReal(0L, kBits), big).log10_double();
  const double f2 = beta1_simple_lower(2000, a, t, big).log10_double() - beta1_simple_lower(2000, a, PrecReal(0L, kBits), big).log10_double();
  CHECK(f2 == doctest::Approx(2 * f1).epsilon(1e-12));
  CHECK_THROWS_AS(beta1_simple_lower(3, a, PrecReal(1.0, kBits), T), DomainError);
}

TEST_CASE("solution json") {
  std::mt19937_64 rng(1);
  const auto in = oracle::random_instance(rng, 4);
  const auto j = to_json(solve_p(to_problem(in)));
  CHECK(j.contains("objective_log10"));
  CHECK(j["n"] == 4);
  CHECK(j["y"].size() == 5);
}

TEST_CASE("objective_g is independent of the thread count") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-0.9, 0.9);
  std::vector<double> y(300);
  for (auto& v : y) v = U(rng);
  std::sort(y.begin(), y.end());
  for (int k = 100; k < 140; ++k) y[k] = y[100];
  const auto yp = prec(y);
  const PrecReal g1 = objective_g_at(yp, 1200, 1);
  for (unsigned t : {2u, 3u, 8u}) CHECK(objective_g_at(yp, 1200, t) == g1);
}

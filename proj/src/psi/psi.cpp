#include "zwin/psi/psi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zwin/numkernel/divided_difference.hpp"
#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/quadrature.hpp"
#include "zwin/numkernel/scalar.hpp"
#include "zwin/numkernel/series.hpp"
#include "zwin/numkernel/special.hpp"
#include "zwin/psi/bounds.hpp"

namespace zwin {

NodeSet::NodeSet(PrecReal a, std::vector<PrecReal> x) : a_(std::move(a)), x_(std::move(x)) {
  if (!(a_ > 0.0)) throw DomainError("NodeSet: a must be positive");
  if (x_.size() < 2) throw ContractError("NodeSet: at least two nodes (n >= 1) are required");
  for (const auto& v : x_) {
    if (!(v > -a_ && v < a_)) throw DomainError("NodeSet: node " + v.to_string(12) + " outside (-a, a)");
  }
}

NodeSet::NodeSet(double a, const std::vector<double>& x, Bits bits)
    : NodeSet(PrecReal(a, bits), [&] {
        std::vector<PrecReal> v;
        for (double d : x) v.emplace_back(d, bits);
        return v;
      }()) {}

std::vector<PrecReal> NodeSet::u(Bits bits) const {
  PrecReal scale = PrecReal::pi(bits) / (a_.with_precision(bits) * 2.0);
  std::vector<PrecReal> out;
  out.reserve(x_.size());
  for (const auto& v : x_) out.push_back(sin(v.with_precision(bits) * scale));
  return out;
}

bool NodeSet::has_coincident() const {
  std::vector<PrecReal> s = x_;
  std::sort(s.begin(), s.end(), [](const PrecReal& p, const PrecReal& q) { return p < q; });
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == s[i - 1]) return true;
  }
  return false;
}

long NodeSet::cancellation_bits() const {
  const auto uu = u(kDefaultBits);
  double worst = 0.0;
  for (std::size_t k = 0; k < uu.size(); ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < uu.size(); ++j) {
      if (j == k) continue;
      const double d = std::fabs((uu[k] - uu[j]).to_double());
      if (d > 0) acc += std::max(0.0, -std::log2(d));
    }
    worst = std::max(worst, acc);
  }
  return static_cast<long>(std::ceil(worst));
}

std::vector<double> NodeSet::x_double() const {
  std::vector<double> out;
  for (const auto& v : x_) out.push_back(v.to_double());
  return out;
}

std::vector<PrecReal> mu_weights(const NodeSet& ns, Bits bits) {
  const auto uu = ns.u(bits);
  return divided_difference_weights<PrecReal>(uu);
}

Bits psi_precision(const NodeSet& ns, int l, Bits target) {
  // Magnitude of the Bernoulli coefficients bounds the Horner cancellation.
  const auto& c = bernoulli_cache().coefficients(2 * l);
  double log_sum = 0.0;
  for (const auto& q : c) log_sum = std::max(log_sum, std::log2(std::fabs(q.get_d()) + 1.0));
  return target + ns.cancellation_bits() + static_cast<Bits>(log_sum) + 2 * l + 48;
}

PsiEvaluator::PsiEvaluator(int l, const NodeSet& ns, Bits bits)
    : l_(l),
      ns_(ns),
      bits_(std::max(bits, kMinBits)),
      poly_(2 * std::max(l, 1), std::max(bits, kMinBits)),
      a_(ns.a().with_precision(bits_)),
      four_a_(a_ * 4.0),
      scale_(bits_),
      confluent_(ns.has_coincident()) {
  if (l < 1) throw ContractError("psi: l must be >= 1");
  PrecReal fact(1L, bits_);
  for (long j = 2; j <= 2L * l; ++j) fact *= j;
  scale_ = pow(four_a_, static_cast<long>(2 * l - 1)) / fact;
  u_ = ns.u(bits_);
  if (!confluent_) mu_ = divided_difference_weights<PrecReal>(u_);
}

PrecReal PsiEvaluator::kernel(const PrecReal& x, const PrecReal& xk) const {
  PrecReal first = poly_((x + xk) / four_a_ + 0.5);
  PrecReal second = poly_(frac((x - xk) / four_a_));
  return first + second;
}

std::vector<PrecReal> PsiEvaluator::taylor(const PrecReal& x, const PrecReal& u0, std::size_t m) const {
  const std::size_t order = m - 1;
  Series<PrecReal> s = asin_series(u0, order);
  PrecReal k = a_ * 2.0 / PrecReal::pi(bits_);
  for (auto& c : s) c *= k;
  Series<PrecReal> arg1(order + 1, PrecReal(bits_));
  Series<PrecReal> arg2(order + 1, PrecReal(bits_));
  arg1[0] = (x + s[0]) / four_a_ + 0.5;
  arg2[0] = frac((x - s[0]) / four_a_);
  for (std::size_t j = 1; j <= order; ++j) {
    arg1[j] = s[j] / four_a_;
    arg2[j] = -arg1[j];
  }
  const auto& coeffs = poly_.coefficients();
  Series<PrecReal> g1 = series_compose_poly(coeffs, arg1, order);
  Series<PrecReal> g2 = series_compose_poly(coeffs, arg2, order);
  for (std::size_t j = 0; j <= order; ++j) g1[j] += g2[j];
  return g1;
}

PrecReal PsiEvaluator::operator()(const PrecReal& xin) const {
  PrecReal x = xin.with_precision(bits_);
  if (x > a_ || x < -a_) throw DomainError("psi: x outside [-a, a]");
  if (!confluent_) {
    PrecReal acc(bits_);
    const auto& xs = ns_.x();
    for (std::size_t k = 0; k < xs.size(); ++k) acc += mu_[k] * kernel(x, xs[k].with_precision(bits_));
    return acc * scale_;
  }
  const bool boundary = (x == a_) || (x == -a_);
  if (!boundary && 2 * l_ < ns_.n() + 2) {
    throw ContractError("psi: repeated nodes at interior x need 2l >= n + 2 (l = " + std::to_string(l_) +
                        ", n = " + std::to_string(ns_.n()) + ")");
  }
  auto tay = [&](const PrecReal& u0, std::size_t m) { return taylor(x, u0, m); };
  return divided_difference<PrecReal>(u_, tay) * scale_;
}

PrecReal psi(int l, const NodeSet& ns, const PrecReal& x, Bits target) {
  auto compute = [&](Bits b) { return PsiEvaluator(l, ns, b)(x); };
  return refine_precision(compute, psi_precision(ns, l, target), std::ldexp(1.0, -static_cast<int>(target)),
                          1 << 16, 0.0);
}

PrecReal psi_norm2(int l, const NodeSet& ns) {
  PsiEvaluator ev(l, ns, psi_precision(ns, l, 64));
  auto sq = [&](double x) {
    const double v = ev(x);
    return v * v;
  };
  const double a = ns.a().to_double();
  const auto breaks = ns.x_double();
  const QuadResult coarse = integrate_gl16(sq, -a, a, breaks, 1e300, 0);
  const QuadResult fine = integrate_gl16(sq, -a, a, breaks, 1e-13 * coarse.value + 1e-300);
  if (!fine.converged) {
    throw ConvergenceError("psi_norm2: quadrature did not converge (error estimate " +
                           std::to_string(fine.error) + ")");
  }
  return sqrt(PrecReal(fine.value, kDefaultBits));
}

PrecReal psi_norm_bound(int l, const NodeSet& ns) {
  const long n = ns.n();
  if (n < 1 || l < n + 1) throw ContractError("psi_norm_bound: requires n >= 1 and l >= n + 1");
  const Bits bits = kDefaultBits;
  PrecReal a = ns.a().with_precision(bits);
  PrecReal c = c_constant(l, n).to_prec(bits);
  PrecReal geo = a * 2.0 / (PrecReal::pi(bits) * n);
  return ldexp(c, n - 1) / sqrt(a) * pow(geo, static_cast<long>(2 * l));
}

}  // namespace zwin

#pragma once

#include <vector>

#include "zwin/numkernel/bernoulli.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// Nodes x_0..x_n in (-a, a), n >= 1, possibly coincident; u_k = sin(pi x_k / (2a)).
class NodeSet {
 public:
  NodeSet(PrecReal a, std::vector<PrecReal> x);
  NodeSet(double a, const std::vector<double>& x, Bits bits = kDefaultBits);

  const PrecReal& a() const { return a_; }
  const std::vector<PrecReal>& x() const { return x_; }
  long n() const { return static_cast<long>(x_.size()) - 1; }
  std::vector<PrecReal> u(Bits bits) const;
  bool has_coincident() const;
  // Bits lost to cancellation in a divided difference over u, estimated as
  // max_k sum_{j != k} log2(1 / |u_k - u_j|) over distinct pairs.
  long cancellation_bits() const;
  std::vector<double> x_double() const;

 private:
  PrecReal a_;
  std::vector<PrecReal> x_;
};

// mu_k = 1 / prod_{j != k} (u_k - u_j); CoincidentNodesError for repeated nodes.
std::vector<PrecReal> mu_weights(const NodeSet& ns, Bits bits = kDefaultBits);

// Psi*_{2l-1}(x_0..x_n, x) at a fixed working precision.  Distinct nodes use
// the mu weights; repeated nodes use the confluent divided difference over u
// of G_x(u) = B_2l(1/2 + (x + s(u))/(4a)) + B_2l({(x - s(u))/(4a)}),
// s(u) = (2a/pi) asin u.
class PsiEvaluator {
 public:
  PsiEvaluator(int l, const NodeSet& ns, Bits bits);

  int l() const { return l_; }
  Bits precision() const { return bits_; }
  // Throws ContractError for interior x with repeated nodes and 2l < n + 2.
  PrecReal operator()(const PrecReal& x) const;
  double operator()(double x) const { return (*this)(PrecReal(x, bits_)).to_double(); }

 private:
  PrecReal kernel(const PrecReal& x, const PrecReal& xk) const;
  std::vector<PrecReal> taylor(const PrecReal& x, const PrecReal& u0, std::size_t m) const;

  int l_;
  NodeSet ns_;
  Bits bits_;
  BernoulliPolynomial poly_;
  PrecReal a_;
  PrecReal four_a_;
  PrecReal scale_;
  std::vector<PrecReal> u_;
  std::vector<PrecReal> mu_;
  bool confluent_;
};

// Working precision PsiEvaluator needs for ~`target` correct bits.
Bits psi_precision(const NodeSet& ns, int l, Bits target = 128);

// Psi*_{2l-1}(x), precision doubled until two evaluations agree to 2^-target.
PrecReal psi(int l, const NodeSet& ns, const PrecReal& x, Bits target = 128);

// ||Psi*_{2l-1}||_2 on (-a, a) by quadrature split at the nodes.
PrecReal psi_norm2(int l, const NodeSet& ns);
// 2^{n-1} c_{2l-1,n} / sqrt(a) (2a / (n pi))^{2l}; requires l >= n + 1.
PrecReal psi_norm_bound(int l, const NodeSet& ns);

}  // namespace zwin

#pragma once

#include <gmpxx.h>

#include <vector>

#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

inline constexpr int kDefaultBernoulliDegree = 200;

// Exact coefficients of the Bernoulli polynomials B_0..B_max, normalised by
//   integral_x^{x+1} B_n(t) dt = x^n,
// which fixes b_1 = -1/2.  Construction checks that identity coefficient by
// coefficient for every n <= min(max_degree, 30).
class BernoulliCache {
 public:
  explicit BernoulliCache(int max_degree = kDefaultBernoulliDegree);

  int max_degree() const { return static_cast<int>(numbers_.size()) - 1; }
  // Bernoulli number b_n.
  const mpq_class& number(int n) const;
  // Coefficients c_0..c_n with B_n(x) = sum_j c_j x^j.
  const std::vector<mpq_class>& coefficients(int n) const;
  // Whether the integral identity holds exactly for degree n.
  bool satisfies_integral_identity(int n) const;

 private:
  void check_degree(int n) const;

  std::vector<mpq_class> numbers_;
  std::vector<std::vector<mpq_class>> polys_;
};

// Process-wide cache of degree kDefaultBernoulliDegree, built on first use.
const BernoulliCache& bernoulli_cache();

PrecReal to_prec(const mpq_class& q, Bits bits);

// B_n(x) at the precision of x.
PrecReal bernoulli_poly(int n, const PrecReal& x);

// B_n with coefficients rounded once to a fixed precision, for repeated
// evaluation.
class BernoulliPolynomial {
 public:
  BernoulliPolynomial(int n, Bits bits);
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Bits precision() const { return bits_; }
  PrecReal operator()(const PrecReal& x) const;
  const std::vector<PrecReal>& coefficients() const { return coeffs_; }

 private:
  Bits bits_;
  std::vector<PrecReal> coeffs_;
};

}  // namespace zwin

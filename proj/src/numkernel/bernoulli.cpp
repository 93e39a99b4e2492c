#include "zwin/numkernel/bernoulli.hpp"

#include <string>

#include "zwin/numkernel/errors.hpp"

namespace zwin {

namespace {

std::vector<std::vector<mpz_class>> pascal(int rows) {
  std::vector<std::vector<mpz_class>> c(rows + 1);
  for (int m = 0; m <= rows; ++m) {
    c[m].assign(m + 1, 1);
    for (int k = 1; k < m; ++k) c[m][k] = c[m - 1][k - 1] + c[m - 1][k];
  }
  return c;
}

}  // namespace

BernoulliCache::BernoulliCache(int max_degree) {
  if (max_degree < 0) throw ContractError("negative Bernoulli degree");
  const auto binom = pascal(max_degree + 1);

  // sum_{k=0}^{m} C(m+1, k) b_k = 0 for m >= 1.
  numbers_.assign(max_degree + 1, 0);
  numbers_[0] = 1;
  for (int m = 1; m <= max_degree; ++m) {
    mpq_class s = 0;
    for (int k = 0; k < m; ++k) s += mpq_class(binom[m + 1][k]) * numbers_[k];
    numbers_[m] = -s / mpq_class(binom[m + 1][m]);
    numbers_[m].canonicalize();
  }

  polys_.resize(max_degree + 1);
  for (int n = 0; n <= max_degree; ++n) {
    auto& p = polys_[n];
    p.assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) p[n - k] = mpq_class(binom[n][k]) * numbers_[k];
  }

  for (int n = 0; n <= std::min(max_degree, 30); ++n) {
    if (!satisfies_integral_identity(n)) {
      throw ConsistencyError("Bernoulli integral identity fails at degree " +
                             std::to_string(n));
    }
  }
}

void BernoulliCache::check_degree(int n) const {
  if (n < 0 || n > max_degree()) {
    throw UnsupportedDegreeError("Bernoulli degree " + std::to_string(n) +
                                 " outside cache limit " +
                                 std::to_string(max_degree()));
  }
}

const mpq_class& BernoulliCache::number(int n) const {
  check_degree(n);
  return numbers_[n];
}

const std::vector<mpq_class>& BernoulliCache::coefficients(int n) const {
  check_degree(n);
  return polys_[n];
}

bool BernoulliCache::satisfies_integral_identity(int n) const {
  check_degree(n);
  // integral_x^{x+1} t^j dt = ((x+1)^{j+1} - x^{j+1}) / (j+1)
  //                         = sum_{i=0}^{j} C(j+1, i) x^i / (j+1).
  const auto binom = pascal(n + 1);
  std::vector<mpq_class> lhs(n + 1, 0);
  const auto& p = polys_[n];
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      lhs[i] += p[j] * mpq_class(binom[j + 1][i]) / (j + 1);
    }
  }
  for (int i = 0; i <= n; ++i) {
    lhs[i].canonicalize();
    if (lhs[i] != (i == n ? 1 : 0)) return false;
  }
  return true;
}

const BernoulliCache& bernoulli_cache() {
  static const BernoulliCache cache(kDefaultBernoulliDegree);
  return cache;
}

PrecReal to_prec(const mpq_class& q, Bits bits) {
  PrecReal r(bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

PrecReal bernoulli_poly(int n, const PrecReal& x) {
  return BernoulliPolynomial(n, x.precision())(x);
}

BernoulliPolynomial::BernoulliPolynomial(int n, Bits bits) : bits_(bits) {
  const auto& c = bernoulli_cache().coefficients(n);
  coeffs_.reserve(c.size());
  for (const auto& q : c) coeffs_.push_back(to_prec(q, bits));
}

PrecReal BernoulliPolynomial::operator()(const PrecReal& x) const {
  PrecReal acc = coeffs_.back();
  for (int j = degree() - 1; j >= 0; --j) {
    acc *= x;
    acc += coeffs_[j];
  }
  return acc;
}

}  // namespace zwin

#pragma once

#include <cstddef>
#include <vector>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/scalar.hpp"

namespace zwin {

// Truncated Taylor series sum_j c[j] h^j, j <= order.
template <typename S>
using Series = std::vector<S>;

template <typename S>
Series<S> series_mul(const Series<S>& a, const Series<S>& b, std::size_t order) {
  Series<S> r(order + 1, scalar_like(0.0, a.front()));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// sum_j coeffs[j] * A(h)^j, truncated at `order`.
template <typename S>
Series<S> series_compose_poly(const std::vector<S>& coeffs, const Series<S>& arg,
                              std::size_t order) {
  Series<S> r(order + 1, scalar_like(0.0, arg.front()));
  r[0] = coeffs.back();
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
    r = series_mul(r, arg, order);
    r[0] += coeffs[j];
  }
  return r;
}

// Taylor coefficients of asin(x0 + h) for |x0| < 1.
template <typename S>
Series<S> asin_series(const S& x0, std::size_t order) {
  using std::asin;
  using std::sqrt;
  S one_minus = scalar_like(1.0, x0) - x0 * x0;
  if (!(one_minus > 0.0)) throw DomainError("asin_series: |x0| must be < 1");
  // g = (1 - x^2)^{-1/2}, (1 - x^2) g' = x g.
  std::vector<S> g;
  g.reserve(order + 1);
  g.push_back(scalar_like(1.0, x0) / sqrt(one_minus));
  if (order >= 1) g.push_back(x0 * g[0] / one_minus);
  for (std::size_t j = 1; j + 1 < order; ++j) {
    S next = (static_cast<double>(2 * j + 1) * x0 * g[j] +
              static_cast<double>(j) * g[j - 1]) /
             (one_minus * static_cast<double>(j + 1));
    g.push_back(std::move(next));
  }
  Series<S> a;
  a.reserve(order + 1);
  a.push_back(asin(x0));
  for (std::size_t j = 1; j <= order; ++j) a.push_back(g[j - 1] / static_cast<double>(j));
  return a;
}

}  // namespace zwin

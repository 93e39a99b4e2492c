#pragma once

#include <algorithm>
#include <barrier>
#include <cstddef>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

#include "zwin/numkernel/errors.hpp"
#include "zwin/numkernel/scalar.hpp"

namespace zwin {

// Weights w_k = 1 / prod_{j != k} (u_k - u_j) of the divided difference on
// pairwise distinct abscissae.
template <typename S>
std::vector<S> divided_difference_weights(std::span<const S> u) {
  std::vector<S> w;
  w.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    S prod = scalar_like(1.0, u[k]);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (j == k) continue;
      S d = u[k] - u[j];
      if (d == 0.0) throw CoincidentNodesError("divided difference weights need distinct nodes");
      prod *= d;
    }
    w.push_back(scalar_like(1.0, u[k]) / prod);
  }
  return w;
}

// Divided difference f[u_0, ..., u_n], confluent nodes allowed.
//
// `taylor(node, m)` returns f^{(j)}(node)/j! for j = 0..m-1; it is called once
// per distinct node with m equal to that node's multiplicity.  The nodes are
// sorted internally, so the result is permutation invariant.  With PrecReal
// nodes each level of the triangle may be split over `threads` workers; every
// entry is computed by the same operations, so the result does not depend on
// the thread count.
template <typename S, typename Taylor>
S divided_difference(std::span<const S> nodes, Taylor&& taylor, unsigned threads = 1) {
  if (nodes.empty()) throw ContractError("divided difference of zero nodes");
  std::vector<S> y(nodes.begin(), nodes.end());
  std::sort(y.begin(), y.end(), [](const S& a, const S& b) { return a < b; });
  const std::size_t n = y.size();

  // Runs of equal nodes and their Taylor data.
  std::vector<std::size_t> run_start(n);
  std::vector<std::vector<S>> coeffs;
  std::vector<std::size_t> run_of(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && y[j] == y[i]) ++j;
    std::vector<S> c = taylor(y[i], j - i);
    if (c.size() < j - i) throw ContractError("taylor callback returned too few coefficients");
    for (std::size_t k = i; k < j; ++k) {
      run_start[k] = i;
      run_of[k] = coeffs.size();
    }
    coeffs.push_back(std::move(c));
    i = j;
  }

  std::vector<S> dd;
  dd.reserve(n);
  for (std::size_t i = 0; i < n; ++i) dd.push_back(coeffs[run_of[i]][0]);
  if constexpr (std::is_same_v<S, PrecReal>) {
    // In-place MPFR updates; avoids a temporary per triangle entry.
    Bits bits = kMinBits;
    for (const auto& v : dd) bits = std::max(bits, v.precision());
    for (const auto& v : y) bits = std::max(bits, v.precision());
    for (auto& v : dd) v = v.with_precision(bits);
    auto step = [&](std::vector<PrecReal>& out, const std::vector<PrecReal>& in, std::size_t level,
                    std::size_t lo, std::size_t hi, PrecReal& gap) {
      for (std::size_t i = lo; i < hi; ++i) {
        if (run_of[i] == run_of[i + level]) {
          mpfr_set(out[i].raw(), coeffs[run_of[i]][level].raw(), MPFR_RNDN);
        } else {
          mpfr_sub(out[i].raw(), in[i + 1].raw(), in[i].raw(), MPFR_RNDN);
          mpfr_sub(gap.raw(), y[i + level].raw(), y[i].raw(), MPFR_RNDN);
          mpfr_div(out[i].raw(), out[i].raw(), gap.raw(), MPFR_RNDN);
        }
      }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n / 64 + 1)));
    if (threads == 1) {
      // In place: dd[i + 1] is read before it is overwritten.
      PrecReal gap(bits);
      for (std::size_t level = 1; level < n; ++level) step(dd, dd, level, 0, n - level, gap);
    } else {
      std::vector<PrecReal> next(dd);
      std::vector<PrecReal>* cur = &dd;
      std::vector<PrecReal>* nxt = &next;
      std::size_t level = 1;
      std::barrier sync(static_cast<std::ptrdiff_t>(threads), [&]() noexcept {
        std::swap(cur, nxt);
        ++level;
      });
      auto worker = [&](unsigned w) {
        PrecReal gap(bits);
        while (level < n) {
          const std::size_t m = n - level;
          const std::size_t lo = m * w / threads, hi = m * (w + 1) / threads;
          step(*nxt, *cur, level, lo, hi, gap);
          sync.arrive_and_wait();
        }
      };
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker, w);
      worker(0);
      pool.clear();
      return (*cur)[0];
    }
  } else {
    for (std::size_t level = 1; level < n; ++level) {
      for (std::size_t i = 0; i + level < n; ++i) {
        if (run_of[i] == run_of[i + level]) {
          dd[i] = coeffs[run_of[i]][level];
        } else {
          dd[i] = (dd[i + 1] - dd[i]) / (y[i + level] - y[i]);
        }
      }
    }
  }
  return dd[0];
}

}  // namespace zwin

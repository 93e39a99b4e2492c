#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <vector>

#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

struct ZEvalConfig {
  // Highest derivative order requested; must satisfy max_k <= (c/2) theta'(t).
  int max_k = 0;
  double c_param = 2.718281828459045;
  std::size_t chunk = 1 << 15;
  unsigned threads = 1;
  // Smallest t accepted by the main-sum evaluators.
  double validity_floor = 1e3;
};

// Number of main-sum terms floor(sqrt(t / 2pi)).
std::size_t main_sum_terms(const PrecReal& t);

// Per-height table for t = anchor + x with |x| <= radius:
//   log n, n^{-1/2} and (anchor * log n) mod 2pi for n <= N(anchor + radius).
// Immutable after construction.
class MainSumTable {
 public:
  MainSumTable(const PrecReal& anchor, double radius, unsigned threads = 1);

  const PrecReal& anchor() const { return anchor_; }
  double radius() const { return radius_; }
  std::size_t size() const { return log_n_.size() - 1; }
  double log_n(std::size_t n) const { return log_n_[n]; }
  double inv_sqrt(std::size_t n) const { return inv_sqrt_[n]; }
  double phase0(std::size_t n) const { return phase0_[n]; }
  // Whether the __float128 reduction was used for the anchor phases.
  bool fast_path() const { return fast_; }

 private:
  PrecReal anchor_;
  double radius_;
  bool fast_ = false;
  std::vector<double> log_n_;
  std::vector<double> inv_sqrt_;
  std::vector<double> phase0_;
};

// Main-sum values Z^(k)(t), k = 0..max_k, near a fixed anchor height.
class HardyEvaluator {
 public:
  HardyEvaluator(const PrecReal& anchor, double radius, ZEvalConfig cfg);
  HardyEvaluator(std::shared_ptr<const MainSumTable> table, ZEvalConfig cfg);
  HardyEvaluator(const HardyEvaluator& o)
      : table_(o.table_), cfg_(o.cfg_), theta_prime_anchor_(o.theta_prime_anchor_) {}

  const PrecReal& anchor() const { return table_->anchor(); }
  const ZEvalConfig& config() const { return cfg_; }
  const MainSumTable& table() const { return *table_; }
  std::shared_ptr<const MainSumTable> shared_table() const { return table_; }
  // theta'(anchor) in double.
  double theta_prime_anchor() const { return theta_prime_anchor_; }

  // Z^(k)(anchor + x) for k = 0..max_k in one pass over the sum.
  std::vector<double> derivatives(double x, int max_k) const;
  double z(double x) const { return derivatives(x, 0)[0]; }
  // min over m of sum_{n<=m} s_n(t), s_n = -(2/sqrt n)(theta' - log n) sin(theta - t log n).
  double partial_sum_min(double x) const;
  // Number of evaluations performed so far.
  std::size_t evaluations() const { return evaluations_; }

 private:
  struct Point {
    double theta_mod;
    double theta_prime;
    std::size_t terms;
  };
  Point prepare(double x, int max_k) const;

  std::shared_ptr<const MainSumTable> table_;
  ZEvalConfig cfg_;
  double theta_prime_anchor_;
  mutable std::atomic<std::size_t> evaluations_{0};
};

// 2 sum_{n <= sqrt(t/2pi)} n^{-1/2} (theta'(t) - log n)^k cos(theta(t) - t log n + k pi/2).
PrecReal z_deriv(const PrecReal& t, int k, const ZEvalConfig& cfg);

// Prefix-minimum of the s_n partial sums at t.
PrecReal partial_sum_min(const PrecReal& t, const ZEvalConfig& cfg);

// min(log T, 3 zeta(1/2 + 2K/theta'(T))) theta'(T)^{2K}; K in (theta'/4, 7 theta'/8].
LogMag z2k_bound(const PrecReal& T, long K);

}  // namespace zwin

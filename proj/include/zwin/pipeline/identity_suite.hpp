#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

namespace zwin {

struct IdentitySuiteOptions {
  // Fixed n, or drawn from {3, 5, 7}.
  std::optional<int> n;
  // Fixed r, or 2r drawn from [n + 2, n + 10].
  std::optional<int> r;
  int trials = 200;
  std::uint64_t seed = 1;
  double a_min = 0.1, a_max = 1.0;
  double tolerance = 1e-10;
};

struct IdentityTrial {
  int n = 0;
  int r = 0;
  double a = 0.0;
  // residual / scale.
  double relative = 0.0;
  bool pass = false;
};

struct IdentitySuiteResult {
  std::vector<IdentityTrial> trials;
  int passed = 0;
  double worst = 0.0;
};

// verify_identity on random node sets with f = prod (x - x_k) g, g a random
// sinusoid or exponential.
IdentitySuiteResult run_identity_suite(const IdentitySuiteOptions& opt);
nlohmann::json to_json(const IdentitySuiteResult& r);

}  // namespace zwin

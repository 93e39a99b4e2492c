#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// Externally computed zeros near a height T:
//   # T=<decimal>
//   # a=<decimal>      (optional)
//   # K=<integer>      (optional)
//   <gamma_k - T>      one per line, increasing
struct ZeroList {
  PrecReal T{kDefaultBits};
  std::optional<double> a;
  std::optional<long> K;
  std::vector<double> offsets;
};

// (t - T, Z(t)) pairs, whitespace or comma separated, optional "# T=" header.
struct SampleSet {
  std::optional<PrecReal> T;
  std::vector<std::pair<double, double>> points;
};

// Both readers throw IoError with "<path>:<line>: ..." diagnostics.
ZeroList read_zero_list(const std::string& path, Bits bits = 256);
SampleSet read_samples(const std::string& path);
ZeroList parse_zero_list(const std::string& text, const std::string& source, Bits bits = 256);
SampleSet parse_samples(const std::string& text, const std::string& source);
std::string format_zero_list(const ZeroList& zl);
void write_zero_list(const std::string& path, const ZeroList& zl);

// Finite-difference weights for derivatives 0..m at x0 from abscissae xs.
// w[j][i] multiplies f(xs[i]) in the j-th derivative.
std::vector<std::vector<double>> fornberg_weights(double x0, const std::vector<double>& xs, int m);

// f^(order)(x0) from the `stencil` samples nearest to x0 (stencil > order).
double fd_derivative(const SampleSet& s, double x0, int order, int stencil);

}  // namespace zwin

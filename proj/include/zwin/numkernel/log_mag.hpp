#pragma once

#include <string>

#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// Sign and decimal logarithm of a magnitude that may exceed every
// fixed-exponent format (values such as 10^864).
class LogMag {
 public:
  LogMag() : sign_(0), log10_abs_(0L, kDefaultBits) {}
  LogMag(int sign, PrecReal log10_abs);

  static LogMag from(const PrecReal& x);
  static LogMag from(double x);
  // Builds exp(natural_log) with the given sign.
  static LogMag from_ln(const PrecReal& natural_log, int sign = 1);

  int sign() const { return sign_; }
  const PrecReal& log10_abs() const { return log10_abs_; }
  double log10_double() const { return log10_abs_.to_double(); }

  // Throws PrecisionError when the magnitude leaves the MPFR exponent range.
  PrecReal to_prec(Bits bits) const;
  // Throws DomainError when the magnitude leaves the double range.
  double to_double() const;

  LogMag operator*(const LogMag& o) const;
  LogMag operator/(const LogMag& o) const;
  LogMag pow(const PrecReal& exponent) const;

  // "8.55e864"-style text with `digits` significant digits.
  std::string to_string(int digits = 6) const;

  friend bool operator==(const LogMag& a, const LogMag& b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log10_abs_ == b.log10_abs_);
  }

 private:
  int sign_;
  PrecReal log10_abs_;
};

}  // namespace zwin

#include "zwin/numkernel/log_mag.hpp"

#include <cmath>
#include <cstdio>

#include "zwin/numkernel/errors.hpp"

namespace zwin {

LogMag::LogMag(int sign, PrecReal log10_abs)
    : sign_(sign < 0 ? -1 : (sign > 0 ? 1 : 0)), log10_abs_(std::move(log10_abs)) {
  if (sign_ == 0) log10_abs_ = PrecReal(0L, log10_abs_.precision());
}

LogMag LogMag::from(const PrecReal& x) {
  if (x.is_zero()) return LogMag();
  return LogMag(x.sign(), log10(abs(x)));
}

LogMag LogMag::from(double x) { return from(PrecReal(x, kDefaultBits)); }

LogMag LogMag::from_ln(const PrecReal& natural_log, int sign) {
  return LogMag(sign, natural_log / PrecReal::ln10(natural_log.precision()));
}

PrecReal LogMag::to_prec(Bits bits) const {
  if (sign_ == 0) return PrecReal(bits);
  // 0.3010 * emax, kept well inside the exponent range.
  const double limit = 0.30102999566398120 * static_cast<double>(mpfr_get_emax()) * 0.5;
  if (std::fabs(log10_double()) > limit) {
    throw PrecisionError("LogMag outside the PrecReal exponent range");
  }
  PrecReal ten(10L, bits);
  PrecReal r = zwin::pow(ten, log10_abs_.with_precision(bits + 32));
  return sign_ < 0 ? -r : r;
}

double LogMag::to_double() const {
  if (sign_ == 0) return 0.0;
  const double l = log10_double();
  if (l > 308.2 || l < -307.0) {
    throw DomainError("LogMag outside the double range: 1e" + std::to_string(l));
  }
  return sign_ * std::pow(10.0, l);
}

LogMag LogMag::operator*(const LogMag& o) const {
  if (sign_ == 0 || o.sign_ == 0) return LogMag();
  return LogMag(sign_ * o.sign_, log10_abs_ + o.log10_abs_);
}

LogMag LogMag::operator/(const LogMag& o) const {
  if (o.sign_ == 0) throw DomainError("LogMag division by zero");
  if (sign_ == 0) return LogMag();
  return LogMag(sign_ * o.sign_, log10_abs_ - o.log10_abs_);
}

LogMag LogMag::pow(const PrecReal& exponent) const {
  if (sign_ < 0) throw DomainError("LogMag::pow of a negative value");
  if (sign_ == 0) return LogMag();
  return LogMag(1, log10_abs_ * exponent);
}

std::string LogMag::to_string(int digits) const {
  if (sign_ == 0) return "0";
  digits = std::max(digits, 1);
  Bits bits = std::max<Bits>(log10_abs_.precision(), 128);
  PrecReal l = log10_abs_.with_precision(bits);
  PrecReal e = floor(l);
  PrecReal m = zwin::pow(PrecReal(10L, bits), l - e);
  // Round the mantissa to `digits` significant digits, carrying into e.
  PrecReal scale = zwin::pow(PrecReal(10L, bits), static_cast<long>(digits - 1));
  PrecReal rounded = round(m * scale) / scale;
  long exp10 = e.to_long_floor();
  if (rounded >= 10.0) {
    rounded /= 10.0;
    ++exp10;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits - 1, rounded.to_double());
  std::string out = (sign_ < 0 ? "-" : "") + std::string(buf);
  if (exp10 != 0) out += "e" + std::to_string(exp10);
  return out;
}

}  // namespace zwin

#include "zwin/numkernel/prec_real.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "zwin/numkernel/errors.hpp"

namespace zwin {

PrecReal PrecReal::parse(std::string_view text, Bits bits) {
  std::string s(text);
  PrecReal r(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || end == s.c_str() || *end != '\0') {
    throw ContractError("not a decimal number: '" + s + "'");
  }
  if (!r.is_finite()) throw ContractError("non-finite number: '" + s + "'");
  return r;
}

PrecReal PrecReal::pi(Bits bits) {
  PrecReal r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::two_pi(Bits bits) {
  PrecReal r = pi(bits);
  mpfr_mul_2ui(r.v_, r.v_, 1, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::ln10(Bits bits) {
  PrecReal r(10L, bits);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::euler_gamma(Bits bits) {
  PrecReal r(bits);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

PrecReal PrecReal::ratio(long num, long den, Bits bits) {
  PrecReal r(num, bits + 8);
  mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
  return r.with_precision(bits);
}

std::string PrecReal::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(precision() * 0.30102999566398120)) + 1;
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_,
                           MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const PrecReal& x) {
  auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 0);
}

}  // namespace zwin

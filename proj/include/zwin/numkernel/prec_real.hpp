#pragma once

#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zwin {

using Bits = mpfr_prec_t;

inline constexpr Bits kMinBits = 64;
inline constexpr Bits kDefaultBits = 128;

// Real scalar backed by an MPFR value with an explicit binary precision.
// Binary operations produce a result carrying the larger operand precision;
// plain doubles adopt the precision of the PrecReal they meet.
class PrecReal {
 public:
  explicit PrecReal(Bits bits = kDefaultBits) {
    mpfr_init2(v_, checked(bits));
    mpfr_set_zero(v_, 1);
  }
  PrecReal(double x, Bits bits) {
    mpfr_init2(v_, checked(bits));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  PrecReal(long x, Bits bits) {
    mpfr_init2(v_, checked(bits));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  PrecReal(int x, Bits bits) : PrecReal(static_cast<long>(x), bits) {}

  // Parses a decimal string such as "7.1934200352263711248e14".
  static PrecReal parse(std::string_view text, Bits bits);
  static PrecReal pi(Bits bits);
  static PrecReal two_pi(Bits bits);
  static PrecReal ln10(Bits bits);
  static PrecReal euler_gamma(Bits bits);
  // Exact rational num/den rounded to `bits`.
  static PrecReal ratio(long num, long den, Bits bits);

  PrecReal(const PrecReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  PrecReal(PrecReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  // Assignment adopts the precision of the source.
  PrecReal& operator=(const PrecReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  PrecReal& operator=(PrecReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~PrecReal() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }
  PrecReal with_precision(Bits bits) const {
    PrecReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }
  // Decimal text with `digits` significant digits; 0 selects enough digits
  // to round-trip at the current precision.
  std::string to_string(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with |x| = m * 2^e, m in [1/2, 1).
  long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  PrecReal operator-() const {
    PrecReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  PrecReal& operator+=(const PrecReal& o) {
    widen(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator-=(const PrecReal& o) {
    widen(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator*=(const PrecReal& o) {
    widen(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator/=(const PrecReal& o) {
    widen(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator+=(double o) {
    mpfr_add_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator-=(double o) {
    mpfr_sub_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator*=(double o) {
    mpfr_mul_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator/=(double o) {
    mpfr_div_d(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  PrecReal& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  friend PrecReal operator+(PrecReal a, const PrecReal& b) { return a += b; }
  friend PrecReal operator-(PrecReal a, const PrecReal& b) { return a -= b; }
  friend PrecReal operator*(PrecReal a, const PrecReal& b) { return a *= b; }
  friend PrecReal operator/(PrecReal a, const PrecReal& b) { return a /= b; }
  friend PrecReal operator+(PrecReal a, double b) { return a += b; }
  friend PrecReal operator-(PrecReal a, double b) { return a -= b; }
  friend PrecReal operator*(PrecReal a, double b) { return a *= b; }
  friend PrecReal operator/(PrecReal a, double b) { return a /= b; }
  friend PrecReal operator+(double a, PrecReal b) { return b += a; }
  friend PrecReal operator*(double a, PrecReal b) { return b *= a; }
  friend PrecReal operator-(double a, const PrecReal& b) {
    PrecReal r(b.precision());
    mpfr_d_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecReal operator/(double a, const PrecReal& b) {
    PrecReal r(b.precision());
    mpfr_d_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend PrecReal operator*(PrecReal a, long b) { return a *= b; }
  friend PrecReal operator*(long a, PrecReal b) { return b *= a; }
  friend PrecReal operator/(PrecReal a, long b) { return a /= b; }
  friend PrecReal operator*(PrecReal a, int b) { return a *= static_cast<long>(b); }
  friend PrecReal operator*(int a, PrecReal b) { return b *= static_cast<long>(a); }
  friend PrecReal operator/(PrecReal a, int b) { return a /= static_cast<long>(b); }

  friend bool operator==(const PrecReal& a, const PrecReal& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const PrecReal& a,
                                           const PrecReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0   ? std::partial_ordering::less
           : c > 0 ? std::partial_ordering::greater
                   : std::partial_ordering::equivalent;
  }
  friend bool operator==(const PrecReal& a, double b) {
    return mpfr_cmp_d(a.v_, b) == 0;
  }
  friend std::partial_ordering operator<=>(const PrecReal& a, double b) {
    int c = mpfr_cmp_d(a.v_, b);
    return c < 0   ? std::partial_ordering::less
           : c > 0 ? std::partial_ordering::greater
                   : std::partial_ordering::equivalent;
  }

  friend std::ostream& operator<<(std::ostream& os, const PrecReal& x);

 private:
  static Bits checked(Bits bits) { return std::max(bits, kMinBits); }
  void widen(const PrecReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
      mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }
  }

  mpfr_t v_;
};

namespace detail {
template <typename F>
PrecReal unary(const PrecReal& x, F f) {
  PrecReal r(x.precision());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline PrecReal abs(const PrecReal& x) { return detail::unary(x, mpfr_abs); }
inline PrecReal sqrt(const PrecReal& x) { return detail::unary(x, mpfr_sqrt); }
inline PrecReal log(const PrecReal& x) { return detail::unary(x, mpfr_log); }
inline PrecReal log10(const PrecReal& x) { return detail::unary(x, mpfr_log10); }
inline PrecReal log1p(const PrecReal& x) { return detail::unary(x, mpfr_log1p); }
inline PrecReal exp(const PrecReal& x) { return detail::unary(x, mpfr_exp); }
inline PrecReal sin(const PrecReal& x) { return detail::unary(x, mpfr_sin); }
inline PrecReal cos(const PrecReal& x) { return detail::unary(x, mpfr_cos); }
inline PrecReal asin(const PrecReal& x) { return detail::unary(x, mpfr_asin); }
inline PrecReal atan(const PrecReal& x) { return detail::unary(x, mpfr_atan); }

inline PrecReal floor(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}
inline PrecReal ceil(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}
inline PrecReal round(const PrecReal& x) {
  PrecReal r(x.precision());
  mpfr_round(r.raw(), x.raw());
  return r;
}
inline PrecReal pow(const PrecReal& x, long e) {
  PrecReal r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline PrecReal pow(const PrecReal& x, const PrecReal& e) {
  PrecReal r(std::max(x.precision(), e.precision()));
  mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline PrecReal ldexp(const PrecReal& x, long e) {
  PrecReal r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
inline PrecReal min(const PrecReal& a, const PrecReal& b) { return b < a ? b : a; }
inline PrecReal max(const PrecReal& a, const PrecReal& b) { return a < b ? b : a; }

// Number of bits in the integer part of |x| (0 when |x| < 1).
inline long integer_bits(const PrecReal& x) {
  return x.is_zero() ? 0 : std::max<long>(0, x.exponent2());
}

}  // namespace zwin

#pragma once

#include <string>
#include <string_view>

#include "zwin/numkernel/log_mag.hpp"
#include "zwin/numkernel/prec_real.hpp"

namespace zwin {

// mantissa * 10^exp10, kept symbolic so that log t is exp10 ln 10 + ln mantissa.
struct ScaledDecimal {
  PrecReal mantissa{1L, kDefaultBits};
  long exp10 = 0;

  // "<mantissa>e<exp>" or a plain decimal.
  static ScaledDecimal parse(std::string_view text, Bits bits = kDefaultBits);
  PrecReal log(Bits bits) const;
  PrecReal value(Bits bits) const;
  std::string to_string() const;
};

enum class GrowthVariant { A1, A2, A3 };
enum class PeakConjecture { FGH, BS };

GrowthVariant parse_growth(std::string_view s);
PeakConjecture parse_peak(std::string_view s);
std::string to_string(GrowthVariant v);
std::string to_string(PeakConjecture p);

struct GrowthModel {
  GrowthVariant variant = GrowthVariant::A2;
  PrecReal c{0.25, kDefaultBits};
  PeakConjecture peak = PeakConjecture::FGH;
};

// log_r t for r = 1, 2, 3 from log t; DomainError unless log t >= e.
struct IteratedLogs {
  PrecReal l1, l2, l3;
  static IteratedLogs from_log(const PrecReal& log_t);
};

// A1 = log t / (4 log2 t), A2 = sqrt(log t log2 t) / (pi sqrt 2), A3 = sqrt(log t / log2 t).
PrecReal growth_value(GrowthVariant v, const IteratedLogs& L);
PrecReal growth_value(GrowthVariant v, const ScaledDecimal& t, Bits bits = kDefaultBits);

// FGH: exp(sqrt(log t log2 t / 2)); BS: exp(sqrt(log t log3 t / (2 log2 t))).
LogMag peak_magnitude(PeakConjecture p, const IteratedLogs& L);
LogMag peak_magnitude(PeakConjecture p, const ScaledDecimal& t, Bits bits = kDefaultBits);

// peak / (2 pi M_+); ContractError unless M_+ > 0.
LogMag d1_lower(const LogMag& peak, const PrecReal& M_plus);

// log3 T / log2 T.
PrecReal scenario_a(const IteratedLogs& L);

}  // namespace zwin

#include "zwin/pipeline/growth.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "zwin/numkernel/errors.hpp"

namespace zwin {

ScaledDecimal ScaledDecimal::parse(std::string_view text, Bits bits) {
  const auto pos = text.find_first_of("eE");
  ScaledDecimal out;
  try {
    out.mantissa = PrecReal::parse(text.substr(0, pos), bits);
  } catch (const std::exception&) {
    throw ContractError("cannot parse number '" + std::string(text) + "'");
  }
  if (pos != std::string_view::npos) {
    auto rest = text.substr(pos + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    const auto r = std::from_chars(rest.data(), rest.data() + rest.size(), out.exp10);
    if (r.ec != std::errc() || r.ptr != rest.data() + rest.size()) {
      throw ContractError("bad exponent in '" + std::string(text) + "'");
    }
  }
  if (!(out.mantissa > 0.0)) throw DomainError("height must be positive: '" + std::string(text) + "'");
  return out;
}

PrecReal ScaledDecimal::log(Bits bits) const {
  return PrecReal::ln10(bits) * exp10 + zwin::log(mantissa.with_precision(bits));
}

PrecReal ScaledDecimal::value(Bits bits) const {
  return mantissa.with_precision(bits) * pow(PrecReal(10L, bits), exp10);
}

std::string ScaledDecimal::to_string() const {
  return mantissa.to_string(20) + "e" + std::to_string(exp10);
}

GrowthVariant parse_growth(std::string_view s) {
  if (s == "a1" || s == "A1") return GrowthVariant::A1;
  if (s == "a2" || s == "A2") return GrowthVariant::A2;
  if (s == "a3" || s == "A3") return GrowthVariant::A3;
  throw ContractError("unknown growth model '" + std::string(s) + "' (a1, a2, a3)");
}

PeakConjecture parse_peak(std::string_view s) {
  if (s == "fgh" || s == "FGH") return PeakConjecture::FGH;
  if (s == "bs" || s == "BS") return PeakConjecture::BS;
  throw ContractError("unknown peak conjecture '" + std::string(s) + "' (fgh, bs)");
}

std::string to_string(GrowthVariant v) {
  switch (v) {
    case GrowthVariant::A1: return "a1";
    case GrowthVariant::A2: return "a2";
    case GrowthVariant::A3: return "a3";
  }
  return "?";
}

std::string to_string(PeakConjecture p) { return p == PeakConjecture::FGH ? "fgh" : "bs"; }

IteratedLogs IteratedLogs::from_log(const PrecReal& log_t) {
  if (!(log_t >= std::exp(1.0))) throw DomainError("iterated logarithms need t >= e^e");
  IteratedLogs L{log_t, log(log_t), PrecReal(log_t.precision())};
  L.l3 = log(L.l2);
  return L;
}

PrecReal growth_value(GrowthVariant v, const IteratedLogs& L) {
  const Bits bits = L.l1.precision();
  switch (v) {
    case GrowthVariant::A1: return L.l1 / (L.l2 * 4.0);
    case GrowthVariant::A2: return sqrt(L.l1 * L.l2) / (PrecReal::pi(bits) * sqrt(PrecReal(2L, bits)));
    case GrowthVariant::A3: return sqrt(L.l1 / L.l2);
  }
  throw ContractError("growth_value: bad variant");
}

PrecReal growth_value(GrowthVariant v, const ScaledDecimal& t, Bits bits) {
  return growth_value(v, IteratedLogs::from_log(t.log(bits)));
}

LogMag peak_magnitude(PeakConjecture p, const IteratedLogs& L) {
  if (p == PeakConjecture::FGH) return LogMag::from_ln(sqrt(L.l1 * L.l2 / 2.0));
  if (!(L.l3 > 0.0)) throw DomainError("peak_magnitude: BS needs log3 t > 0");
  return LogMag::from_ln(sqrt(L.l1 * L.l3 / (L.l2 * 2.0)));
}

LogMag peak_magnitude(PeakConjecture p, const ScaledDecimal& t, Bits bits) {
  return peak_magnitude(p, IteratedLogs::from_log(t.log(bits)));
}

LogMag d1_lower(const LogMag& peak, const PrecReal& M_plus) {
  if (!(M_plus > 0.0)) throw ContractError("d1_lower: M_+ must be positive");
  return peak / LogMag::from(M_plus * PrecReal::two_pi(M_plus.precision()));
}

PrecReal scenario_a(const IteratedLogs& L) {
  if (!(L.l3 > 0.0)) throw DomainError("scenario_a: needs log3 T > 0");
  return L.l3 / L.l2;
}

}  // namespace zwin

#pragma once

namespace sigmacheck::detail {

inline constexpr long kEulerGammaDigitCount = 5000;
extern const char* const kEulerGammaDigits;

}  // namespace sigmacheck::detail

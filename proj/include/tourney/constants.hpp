#pragma once

#include <cmath>

namespace tourney {

// Closed-form constants for the two-block iterated construction, computed in
// extended precision from cube roots. The decimal literals repeat them to 12
// digits as a cross-check against libm drift.
inline long double blowup_alpha_closed() {
  long double c3 = std::cbrtl(3.0L), c9 = std::cbrtl(9.0L);
  return (2.0L * c9 - 2.0L - c3) / 5.0L;
}

inline long double c3plus_limit_closed() {
  long double c3 = std::cbrtl(3.0L), c9 = std::cbrtl(9.0L);
  return (8.0L - 9.0L * c3 + 3.0L * c9) / 8.0L;
}

/// 1 - alpha, the limiting fraction of the random block.
inline long double blowup_low_fraction_closed() {
  long double c3 = std::cbrtl(3.0L), c9 = std::cbrtl(9.0L);
  return (7.0L + c3 - 2.0L * c9) / 5.0L;
}

inline constexpr double kBlowupAlphaLiteral = 0.143583615159;
inline constexpr double kC3PlusLimitLiteral = 0.157500667049;

}  // namespace tourney

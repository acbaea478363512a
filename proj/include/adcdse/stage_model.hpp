#pragma once

#include <algorithm>
#include <cmath>

#include "adcdse/arch.hpp"

namespace adcdse {

// Ideal stage conventions on the normalized range [-1, 1].
//
// 1.5-bit: comparators at -1/4 and +1/4, decision d in {-1,0,+1},
// residue 2u - d, DAC level d/2 against gain 2.
// Full n-bit, first position: 2^n - 1 uniform comparators, gain 2^n,
// residue spans the full range (no redundancy).
// Full n-bit, later position: same comparators, gain 2^(n-1), residue
// spans half range (one bit of overlap for digital correction).
//
// Decisions are lower-sided: an input exactly on a comparator threshold
// takes the code below it, so the ideal trajectory through a conversion
// step is the limit from below. All ideal quantities are dyadic and the
// comparisons below are exact in double precision.

inline int half_decision(double u) {
  return (u > -0.25 ? 1 : 0) + (u > 0.25 ? 1 : 0) - 1;
}

inline int full_code(double u, int bits) {
  double h = 2.0 / static_cast<double>(1 << bits);
  int c = static_cast<int>(std::ceil((u + 1.0) / h)) - 1;
  return std::clamp(c, 0, (1 << bits) - 1);
}

/// Value the stage subtracts, in its own input units (bin center for full
/// stages, d/2 for 1.5-bit ones).
inline double stage_dac_level(StageSpec s, double u) {
  if (s.is_half()) return 0.5 * half_decision(u);
  int bits = s.bits();
  double h = 2.0 / static_cast<double>(1 << bits);
  return -1.0 + (full_code(u, bits) + 0.5) * h;
}

inline double stage_gain(StageSpec s, bool first) {
  if (s.is_half()) return 2.0;
  return static_cast<double>(1 << (first ? s.bits() : s.bits() - 1));
}

/// Ideal residue forwarded to the next stage.
inline double ideal_residue(StageSpec s, bool first, double u) {
  if (s.is_half()) return 2.0 * u - half_decision(u);
  return stage_gain(s, first) * (u - stage_dac_level(s, u));
}

}  // namespace adcdse

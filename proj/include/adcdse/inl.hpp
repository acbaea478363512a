#pragma once

#include <vector>

#include "adcdse/arch.hpp"
#include "adcdse/impair.hpp"

namespace adcdse {

/// Static linearity profile of the full converter. inl[i-1] is the
/// transition-level error between codes i-1 and i, in LSB, for
/// i = 1 .. 2^N - 1; positive means the transition sits above its ideal
/// position. The range edges carry no entry (their error is zero by
/// normalization).
struct InlProfile {
  int resolution = 0;
  double lsb = 0.0;  ///< q = 2 / 2^N in normalized full-scale units
  std::vector<double> inl;

  std::size_t transition_count() const { return inl.size(); }
};

InlProfile ideal_profile(int resolution);

/// Maximum resolution global_inl accepts (2^N - 1 sized arrays).
inline constexpr int kMaxInlResolution = 14;

/// Accumulates every non-final stage's impairment error along the ideal
/// residue trajectory of each transition, referred to the converter input
/// through the cumulative gains and expressed in LSB.
InlProfile global_inl(const Architecture& a, const ImpairmentParams& p);

struct DnlResult {
  std::vector<double> dnl;    ///< dnl[i] = inl[i+1] - inl[i], LSB
  bool non_monotonic = false; ///< any code narrower than empty (dnl < -1)
};

DnlResult dnl_from_inl(const InlProfile& profile);

}  // namespace adcdse

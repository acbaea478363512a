#pragma once

#include <vector>

#include "adcdse/inl.hpp"

namespace adcdse {

/// Mean-square conversion error of one code: lsb^2/12 plus the linear,
/// quadratic and cubic terms contributed by the INL of its two transitions
/// (arguments in LSB, converted to normalized units internally).
double code_mse(double lsb, double inl_hi_lsb, double inl_lo_lsb);

/// Signal-to-noise-and-distortion of a full-scale sine, in dB, from the
/// per-code mean quadratic error; the range edges carry zero INL.
double sndr_from_inl(const InlProfile& profile);

/// Effective number of bits, (SNDR - 1.76)/6.02.
double enob_bits(double sndr_db);

/// How the static profile displaces the transition levels fed to the
/// harmonic expansion. kInlShift perturbs each transition by its accumulated
/// INL — the transfer curve the behavioral simulation actually measures, and
/// the default. kDnlShift perturbs each transition by its code-width error
/// only (the first difference of the INL); that spreads the distortion
/// energy across many harmonics and estimates spur levels much closer to the
/// ideal floor.
enum class SpurModel { kInlShift, kDnlShift };

inline constexpr SpurModel kDefaultSpurModel = SpurModel::kInlShift;

/// Actual transition levels x_1 .. x_{2^N-1} under the given model,
/// clamped to [-1, 1]. *clamped, when supplied, reports whether any level
/// had to be clamped.
std::vector<double> transition_levels(const InlProfile& profile, SpurModel model,
                                      bool* clamped = nullptr);

struct HarmonicSeries {
  std::vector<double> coeff;  ///< signed a_k, k = 1 .. k_max
  bool clamped = false;       ///< some displaced level left [-1, 1]
  bool monotonic = true;      ///< displaced levels still ascend

  int worst_spur() const;     ///< k of the largest |a_k|, k >= 2
  double sfdr_dbc() const;    ///< 20 log10 |a_1 / a_worst|
};

/// Fourier-series coefficients of the quantized full-scale sine whose
/// transition levels are `levels`; output code centers stay ideal.
HarmonicSeries harmonics_from_levels(const std::vector<double>& levels,
                                     int resolution, int k_max);

/// harmonics_from_levels on the profile's displaced transition levels.
HarmonicSeries harmonic_coefficients(const InlProfile& profile, int k_max,
                                     SpurModel model = kDefaultSpurModel);

/// Default harmonic count 2^(N+2): the dominant spur of an ideal N-bit
/// quantizer sits near k = pi * 2^N, above 2^(N+1).
int default_harmonic_count(int resolution);

struct SfdrResult {
  double sfdr_dbc = 0.0;
  int worst_k = 0;
};

SfdrResult sfdr_from_inl(const InlProfile& profile, int k_max,
                         SpurModel model = kDefaultSpurModel);

struct SpectralMetrics {
  double sndr_db = 0.0;
  double enob = 0.0;
  double sfdr_dbc = 0.0;
  int worst_harmonic = 0;
  std::vector<double> harmonics;  ///< signed a_k (empty if not retained)
  bool clamped = false;
  bool monotonic = true;
};

/// Full analytic metrics of a profile. k_max <= 0 selects the default.
SpectralMetrics analyze_profile(const InlProfile& profile, int k_max = 0,
                                SpurModel model = kDefaultSpurModel,
                                bool keep_harmonics = false);

}  // namespace adcdse

#include "adcdse/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adcdse {

double code_mse(double lsb, double inl_hi_lsb, double inl_lo_lsb) {
  if (!(lsb > 0.0)) throw std::invalid_argument("lsb must be positive");
  const double a = inl_hi_lsb * lsb;
  const double b = inl_lo_lsb * lsb;
  return lsb * lsb / 12.0 + 0.25 * lsb * (a - b) + 0.5 * (a * a + b * b) +
         (a * a * a - b * b * b) / (3.0 * lsb);
}

double sndr_from_inl(const InlProfile& profile) {
  const double q = profile.lsb;
  const std::size_t codes = profile.inl.size() + 1;
  double err2 = 0.0;
  for (std::size_t c = 0; c < codes; ++c) {
    const double lo = c == 0 ? 0.0 : profile.inl[c - 1];
    const double hi = c + 1 == codes ? 0.0 : profile.inl[c];
    err2 += code_mse(q, hi, lo);
  }
  const double mean_err2 = err2 / static_cast<double>(codes);
  return 10.0 * std::log10(0.5 / mean_err2);  // full-scale sine, V_ref = 1
}

double enob_bits(double sndr_db) { return (sndr_db - 1.76) / 6.02; }

int default_harmonic_count(int resolution) { return 4 << resolution; }

std::vector<double> transition_levels(const InlProfile& profile, SpurModel model,
                                      bool* clamped) {
  const double q = profile.lsb;
  std::vector<double> levels(profile.inl.size());
  if (clamped) *clamped = false;
  double prev = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double ideal = -1.0 + static_cast<double>(i + 1) * q;
    const double shift = model == SpurModel::kInlShift
                             ? profile.inl[i]
                             : profile.inl[i] - prev;  // code-width error
    prev = profile.inl[i];
    const double level = ideal + shift * q;
    levels[i] = std::clamp(level, -1.0, 1.0);
    if (clamped && levels[i] != level) *clamped = true;
  }
  return levels;
}

int HarmonicSeries::worst_spur() const {
  int worst = 2;
  double mag = -1.0;
  for (std::size_t k = 2; k <= coeff.size(); ++k) {
    const double m = std::abs(coeff[k - 1]);
    if (m > mag) {
      mag = m;
      worst = static_cast<int>(k);
    }
  }
  return worst;
}

double HarmonicSeries::sfdr_dbc() const {
  const double fundamental = std::abs(coeff.front());
  const double spur = std::abs(coeff[worst_spur() - 1]);
  return 20.0 * std::log10(fundamental / spur);
}

HarmonicSeries harmonics_from_levels(const std::vector<double>& levels,
                                     int resolution, int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  const double q = 2.0 / static_cast<double>(1 << resolution);

  HarmonicSeries series;
  series.coeff.assign(static_cast<std::size_t>(k_max), 0.0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0 && levels[i] < levels[i - 1]) series.monotonic = false;
  }

  // a_k = 2/(pi k) * sum_i y_i [sin(k acos x_i) - sin(k acos x_{i+1})] over
  // the sentinel-extended levels. With the output centers y_i ideal and
  // uniform the sum telescopes to q * sum over interior levels of
  // sin(k acos x), and the sentinel terms vanish. sin(k acos x) follows the
  // Chebyshev recurrence s_{k+1} = 2 x s_k - s_{k-1}, evaluated per level in
  // fixed-size blocks whose partial sums are combined in block order, so the
  // result is identical for any thread count.
  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (levels.size() + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks * static_cast<std::size_t>(k_max), 0.0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    double* acc = partial.data() + static_cast<std::size_t>(b) * k_max;
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(lo + kBlock, levels.size());
    for (std::size_t i = lo; i < hi; ++i) {
      const double x = levels[i];
      const double two_x = 2.0 * x;
      double prev = 0.0;                                          // sin(0)
      double cur = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));  // sin(acos x)
      for (int k = 0; k < k_max; ++k) {
        acc[k] += cur;
        const double next = two_x * cur - prev;
        prev = cur;
        cur = next;
      }
    }
  }

  for (std::size_t b = 0; b < blocks; ++b) {
    const double* acc = partial.data() + b * static_cast<std::size_t>(k_max);
    for (int k = 0; k < k_max; ++k) series.coeff[k] += acc[k];
  }
  for (int k = 0; k < k_max; ++k) {
    series.coeff[k] *= 2.0 * q / (std::numbers::pi * (k + 1));
  }
  return series;
}

HarmonicSeries harmonic_coefficients(const InlProfile& profile, int k_max,
                                     SpurModel model) {
  bool clamped = false;
  std::vector<double> levels = transition_levels(profile, model, &clamped);
  HarmonicSeries series = harmonics_from_levels(levels, profile.resolution, k_max);
  series.clamped = clamped;
  return series;
}

SfdrResult sfdr_from_inl(const InlProfile& profile, int k_max, SpurModel model) {
  const HarmonicSeries series = harmonic_coefficients(profile, k_max, model);
  return {series.sfdr_dbc(), series.worst_spur()};
}

SpectralMetrics analyze_profile(const InlProfile& profile, int k_max,
                                SpurModel model, bool keep_harmonics) {
  if (k_max <= 0) k_max = default_harmonic_count(profile.resolution);
  SpectralMetrics m;
  m.sndr_db = sndr_from_inl(profile);
  m.enob = enob_bits(m.sndr_db);
  HarmonicSeries series = harmonic_coefficients(profile, k_max, model);
  m.sfdr_dbc = series.sfdr_dbc();
  m.worst_harmonic = series.worst_spur();
  m.clamped = series.clamped;
  m.monotonic = series.monotonic;
  if (keep_harmonics) m.harmonics = std::move(series.coeff);
  return m;
}

}  // namespace adcdse

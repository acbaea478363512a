#include "adcdse/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "adcdse/stage_model.hpp"

namespace adcdse {
namespace oracle {

int convert(const Architecture& a, const StageGainLedger& ledger,
            const StageErrorEval& eval, double input, std::int64_t* overrange) {
  const auto& stages = a.stages();
  const int n = a.effective_bits();
  double u = input;
  double estimate = 0.0;
  for (std::size_t j = 0; j < stages.size(); ++j) {
    estimate += stage_dac_level(stages[j], u) / ledger.cumulative[j];
    if (j + 1 == stages.size()) break;
    double r = eval.impaired_residue(ideal_residue(stages[j], j == 0, u));
    if (r > 1.0 || r < -1.0) {
      r = std::clamp(r, -1.0, 1.0);
      if (overrange) ++*overrange;
    }
    u = r;
  }
  const double q = 2.0 / static_cast<double>(1 << n);
  const int code = static_cast<int>(std::floor((estimate + 1.0) / q));
  return std::clamp(code, 0, (1 << n) - 1);
}

TransferCurve simulate_transfer(const Architecture& a, const ImpairmentParams& p,
                                std::int64_t points) {
  const int n = a.effective_bits();
  if (n > kMaxInlResolution) {
    throw std::invalid_argument("resolution " + std::to_string(n) +
                                " exceeds the sweep limit of " +
                                std::to_string(kMaxInlResolution) + " bits");
  }
  const std::int64_t min_points = std::int64_t(1) << (n + 4);
  if (points == 0) points = std::int64_t(1) << (n + 6);
  if (points < min_points) {
    throw std::invalid_argument("sweep needs at least 2^(N+4) points");
  }

  const StageGainLedger ledger = gain_ledger(a);
  const StageErrorEval eval(p);

  TransferCurve curve;
  curve.resolution = n;
  const int top_code = (1 << n) - 1;
  curve.transitions.assign(static_cast<std::size_t>(top_code), 1.0);

  const double step = 2.0 / static_cast<double>(points);
  double prev_u = -1.0;
  int prev_code = convert(a, ledger, eval, prev_u, &curve.overrange_events);
  int next_target = 1;
  for (std::int64_t s = 1; s <= points; ++s) {
    const double u = -1.0 + static_cast<double>(s) * step;
    const int code = convert(a, ledger, eval, u, &curve.overrange_events);
    if (code < prev_code) curve.monotonic = false;
    while (next_target <= code && next_target <= top_code) {
      // first crossing of `code >= next_target` inside [prev_u, u]
      double lo = prev_u, hi = u;
      while (hi - lo > 0x1p-46) {
        const double mid = 0.5 * (lo + hi);
        if (convert(a, ledger, eval, mid, nullptr) >= next_target) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      curve.transitions[next_target - 1] = 0.5 * (lo + hi);
      ++next_target;
    }
    prev_u = u;
    prev_code = code;
  }
  return curve;
}

InlProfile measured_inl(const TransferCurve& curve) {
  InlProfile profile = ideal_profile(curve.resolution);
  const double q = profile.lsb;
  for (std::size_t i = 0; i < profile.inl.size(); ++i) {
    const double ideal = -1.0 + static_cast<double>(i + 1) * q;
    profile.inl[i] = (curve.transitions[i] - ideal) / q;
  }
  return profile;
}

SpectralMetrics measure_sine_metrics(const Architecture& a, const ImpairmentParams& p,
                                     std::int64_t samples, int k_max) {
  const int n = a.effective_bits();
  if (n > kMaxInlResolution) {
    throw std::invalid_argument("resolution " + std::to_string(n) +
                                " exceeds the sweep limit of " +
                                std::to_string(kMaxInlResolution) + " bits");
  }
  const std::int64_t min_samples = std::int64_t(1) << (n + 6);
  if (samples == 0) samples = min_samples;
  if (samples < min_samples) {
    throw std::invalid_argument("sine measurement needs at least 2^(N+6) samples");
  }
  if (k_max <= 0) k_max = default_harmonic_count(n);
  if (2 * k_max >= samples) {
    throw std::invalid_argument("k_max must stay below half the sample count");
  }

  const StageGainLedger ledger = gain_ledger(a);
  const StageErrorEval eval(p);
  const double q = 2.0 / static_cast<double>(1 << n);

  // One coherent period, sampled off the lattice points by half a step.
  std::vector<double> wave(static_cast<std::size_t>(samples));
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(samples);
  std::int64_t overrange = 0;
#pragma omp parallel for schedule(static) reduction(+ : overrange)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(samples); ++s) {
    const double x = std::sin((static_cast<double>(s) + 0.5) * dphi);
    const int code = convert(a, ledger, eval, x, &overrange);
    wave[static_cast<std::size_t>(s)] = -1.0 + (code + 0.5) * q;
  }

  double mean = 0.0, power = 0.0;
  for (double y : wave) {
    mean += y;
    power += y * y;
  }
  mean /= static_cast<double>(samples);
  power = power / static_cast<double>(samples) - mean * mean;

  // Per-harmonic projection; each harmonic walks the sample loop with its own
  // phase rotator, so harmonics are independent and the result does not
  // depend on the thread count.
  std::vector<double> amplitude(static_cast<std::size_t>(k_max), 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 1; k <= static_cast<std::ptrdiff_t>(k_max); ++k) {
    const double c = std::cos(static_cast<double>(k) * dphi);
    const double sn = std::sin(static_cast<double>(k) * dphi);
    // phase starts at k * dphi / 2 to match the half-step sample offset
    double re = std::cos(static_cast<double>(k) * dphi * 0.5);
    double im = std::sin(static_cast<double>(k) * dphi * 0.5);
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t s = 0; s < wave.size(); ++s) {
      acc_re += wave[s] * re;
      acc_im += wave[s] * im;
      const double nre = re * c - im * sn;
      im = re * sn + im * c;
      re = nre;
    }
    const double scale = 2.0 / static_cast<double>(samples);
    amplitude[static_cast<std::size_t>(k - 1)] =
        std::hypot(acc_re * scale, acc_im * scale);
  }

  SpectralMetrics m;
  const double fundamental_power = 0.5 * amplitude[0] * amplitude[0];
  const double residual = power - fundamental_power;
  m.sndr_db = 10.0 * std::log10(fundamental_power / residual);
  m.enob = enob_bits(m.sndr_db);
  int worst = 2;
  for (int k = 2; k <= k_max; ++k) {
    if (amplitude[k - 1] > amplitude[worst - 1]) worst = k;
  }
  m.worst_harmonic = worst;
  m.sfdr_dbc = 20.0 * std::log10(amplitude[0] / amplitude[worst - 1]);
  m.harmonics = std::move(amplitude);
  m.clamped = overrange > 0;
  return m;
}

}  // namespace oracle
}  // namespace adcdse

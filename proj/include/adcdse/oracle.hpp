#pragma once

#include <cstdint>
#include <vector>

#include "adcdse/arch.hpp"
#include "adcdse/impair.hpp"
#include "adcdse/inl.hpp"
#include "adcdse/spectral.hpp"

namespace adcdse {
namespace oracle {

/// Measured code transition levels of the simulated pipeline.
struct TransferCurve {
  int resolution = 0;
  std::vector<double> transitions;  ///< t_1 .. t_{2^N-1}, normalized input units
  bool monotonic = true;            ///< output code never decreased during the sweep
  std::int64_t overrange_events = 0;
};

/// One full conversion: ideal sub-ADC decisions, impaired residues, digital
/// recombination of the stage codes, global code from the reconstructed
/// estimate. Residues pushed outside [-1, 1] by the impairments are clamped
/// and counted through *overrange.
int convert(const Architecture& a, const StageGainLedger& ledger,
            const StageErrorEval& eval, double input,
            std::int64_t* overrange = nullptr);

/// Sweeps the input range with `points` samples, brackets every code
/// transition with first-crossing semantics and bisects each bracket to
/// 2^-46. points must be at least 2^(N+4); 0 selects 2^(N+6).
TransferCurve simulate_transfer(const Architecture& a, const ImpairmentParams& p,
                                std::int64_t points = 0);

/// (measured - ideal) / q per transition, in LSB.
InlProfile measured_inl(const TransferCurve& curve);

/// Converts one coherent period of a full-scale sine and measures SNDR from
/// the residual power after removing DC and the fundamental, and SFDR from
/// per-harmonic Fourier projections up to k_max. samples must be at least
/// 2^(N+6); 0 selects that minimum. k_max <= 0 selects the analytic default.
SpectralMetrics measure_sine_metrics(const Architecture& a, const ImpairmentParams& p,
                                     std::int64_t samples = 0, int k_max = 0);

}  // namespace oracle
}  // namespace adcdse

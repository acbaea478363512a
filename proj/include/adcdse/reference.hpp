#pragma once

#include <vector>

#include "adcdse/arch.hpp"
#include "adcdse/impair.hpp"
#include "adcdse/inl.hpp"

namespace adcdse {
namespace reference {

/// Literal evaluation of the harmonic expansion: for every k, the full
/// double sum over the sentinel-extended levels with libm sin/acos and no
/// telescoping. Single-threaded. Kept as the slow reference the fast kernel
/// is tested and benchmarked against.
std::vector<double> harmonic_coefficients(const std::vector<double>& levels,
                                          int resolution, int k_max);

/// Single-threaded transition-by-transition accumulation, same model as
/// global_inl.
InlProfile global_inl(const Architecture& a, const ImpairmentParams& p);

}  // namespace reference
}  // namespace adcdse

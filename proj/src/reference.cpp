#include "adcdse/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "adcdse/stage_model.hpp"

namespace adcdse {
namespace reference {

std::vector<double> harmonic_coefficients(const std::vector<double>& levels,
                                          int resolution, int k_max) {
  const std::size_t codes = levels.size() + 1;
  const double q = 2.0 / static_cast<double>(1 << resolution);

  std::vector<double> theta(codes + 1);
  theta.front() = std::acos(-1.0);
  theta.back() = std::acos(1.0);
  for (std::size_t i = 0; i < levels.size(); ++i) theta[i + 1] = std::acos(levels[i]);

  std::vector<double> out(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < codes; ++i) {
      const double center = -1.0 + (static_cast<double>(i) + 0.5) * q;
      sum += center * (std::sin(k * theta[i]) - std::sin(k * theta[i + 1]));
    }
    out[static_cast<std::size_t>(k - 1)] = 2.0 / (std::numbers::pi * k) * sum;
  }
  return out;
}

InlProfile global_inl(const Architecture& a, const ImpairmentParams& p) {
  const int n = a.effective_bits();
  if (n > kMaxInlResolution) {
    throw std::invalid_argument("resolution " + std::to_string(n) +
                                " exceeds the INL profile limit of " +
                                std::to_string(kMaxInlResolution) + " bits");
  }
  InlProfile profile = ideal_profile(n);
  const double q = profile.lsb;
  const StageGainLedger ledger = gain_ledger(a);
  const StageErrorEval eval(p);
  const auto& stages = a.stages();
  for (std::size_t i = 1; i <= profile.inl.size(); ++i) {
    double u = -1.0 + static_cast<double>(i) * q;
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < stages.size(); ++j) {
      const double r = ideal_residue(stages[j], j == 0, u);
      acc += eval.error(r) / ledger.cumulative[j + 1];
      u = r;
    }
    profile.inl[i - 1] = -acc / q;
  }
  return profile;
}

}  // namespace reference
}  // namespace adcdse

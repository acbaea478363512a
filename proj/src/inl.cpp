#include "adcdse/inl.hpp"

#include <stdexcept>
#include <string>

#include "adcdse/stage_model.hpp"

namespace adcdse {

InlProfile ideal_profile(int resolution) {
  InlProfile p;
  p.resolution = resolution;
  p.lsb = 2.0 / static_cast<double>(1 << resolution);
  p.inl.assign((std::size_t(1) << resolution) - 1, 0.0);
  return p;
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
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(profile.inl.size());

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 1; i <= count; ++i) {
    double u = -1.0 + static_cast<double>(i) * q;
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < stages.size(); ++j) {
      double r = ideal_residue(stages[j], j == 0, u);
      acc += eval.error(r) / ledger.cumulative[j + 1];
      u = r;
    }
    // An error pushing the chain value up trips the deciding comparator
    // early, so the transition level moves down: transition-referred INL is
    // the negated accumulated error.
    profile.inl[i - 1] = -acc / q;
  }
  return profile;
}

DnlResult dnl_from_inl(const InlProfile& profile) {
  DnlResult r;
  if (profile.inl.size() < 2) return r;
  r.dnl.resize(profile.inl.size() - 1);
  for (std::size_t i = 0; i + 1 < profile.inl.size(); ++i) {
    r.dnl[i] = profile.inl[i + 1] - profile.inl[i];
    if (r.dnl[i] < -1.0) r.non_monotonic = true;
  }
  return r;
}

}  // namespace adcdse

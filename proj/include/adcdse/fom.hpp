#pragma once

#include <string>
#include <vector>

#include "adcdse/arch.hpp"
#include "adcdse/impair.hpp"
#include "adcdse/spectral.hpp"

namespace adcdse {

/// Target extrema the converter should meet.
struct FomLimits {
  double sndr_lim_db = 56.0;
  double sfdr_lim_db = 75.0;
  int comp_lim = 60;
};

/// Normalization weights. alpha/beta/gamma divide the desired extrema by the
/// attainable ones; the score is divided by their sum so the ideal corner
/// (SNDR_max, SFDR_max, Comp_min) scores exactly 1.
struct FomWeights {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;       ///< 1 / (alpha + beta + gamma)
  double weight_sum = 0.0;  ///< alpha + beta + gamma as summed
  double sndr_max_db = 0.0;
  double sfdr_max_dbc = 0.0;
  int comp_min = 0;
  std::vector<std::string> warnings;  ///< infeasible limits, reported not fatal
};

/// Weights from explicitly supplied maxima.
FomWeights weights_from_maxima(const FomLimits& limits, double sndr_max_db,
                               double sfdr_max_dbc, int comp_min);

/// Weights for an N-bit exploration: the maxima come from the analytic
/// spectral path on the zero-impairment profile, comp_min from the caller
/// (the enumeration minimum). k_max <= 0 selects the default count.
FomWeights compute_weights(int bits, const FomLimits& limits, int comp_min,
                           int k_max = 0);

/// delta * (alpha*SNDR/SNDR_max + beta*SFDR/SFDR_max + gamma*Comp_min/Comp).
/// Ratios are not clamped; an SFDR above the ideal maximum pushes the score
/// above its nominal share.
double fom_score(double sndr_db, double sfdr_dbc, int comparators,
                 const FomWeights& w);

struct ScoredConfig {
  Architecture architecture;
  int comparators = 0;
  double sndr_db = 0.0;
  double enob = 0.0;
  double sfdr_dbc = 0.0;
  double fom = 0.0;
};

struct ExploreOptions {
  int k_max = 0;           ///< 0 = default_harmonic_count(bits)
  SpurModel spur_model = kDefaultSpurModel;
  int prefilter_k = 64;    ///< harmonic count of the cheap first pass
  bool prefilter = false;  ///< two-phase ranking (cheap pass, rescore top 10%)
  int threads = 0;         ///< 0 = library default
};

/// Prefilter defaults on above 10 bits.
ExploreOptions default_explore_options(int bits);

struct ExploreResult {
  int bits = 0;
  ImpairmentParams params;
  FomLimits limits;
  FomWeights weights;
  int comp_max = 0;
  int k_max = 0;
  bool prefilter = false;
  std::size_t rescored = 0;  ///< rows rescored at full k_max in phase two
  std::vector<ScoredConfig> rows;
};

/// Scores every architecture of the target resolution and sorts by
/// (fom desc, comparators asc, stage string asc). The per-architecture work
/// runs in parallel; the result is identical for any thread count.
ExploreResult explore(int bits, const ImpairmentParams& p, const FomLimits& limits,
                      const ExploreOptions& options);

}  // namespace adcdse

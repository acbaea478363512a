#include "adcdse/fom.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adcdse {

FomWeights weights_from_maxima(const FomLimits& limits, double sndr_max_db,
                               double sfdr_max_dbc, int comp_min) {
  if (limits.sndr_lim_db <= 0 || limits.sfdr_lim_db <= 0 || limits.comp_lim <= 0) {
    throw std::invalid_argument("limits must be positive");
  }
  FomWeights w;
  w.sndr_max_db = sndr_max_db;
  w.sfdr_max_dbc = sfdr_max_dbc;
  w.comp_min = comp_min;
  w.alpha = limits.sndr_lim_db / sndr_max_db;
  w.beta = limits.sfdr_lim_db / sfdr_max_dbc;
  w.gamma = static_cast<double>(comp_min) / static_cast<double>(limits.comp_lim);
  w.weight_sum = w.alpha + w.beta + w.gamma;
  w.delta = 1.0 / w.weight_sum;
  if (w.alpha > 1.0) {
    w.warnings.push_back("sndr_lim exceeds the attainable maximum");
  }
  if (w.beta > 1.0) {
    w.warnings.push_back("sfdr_lim exceeds the attainable maximum");
  }
  if (limits.comp_lim < comp_min) {
    w.warnings.push_back("comp_lim is below the attainable minimum");
  }
  return w;
}

FomWeights compute_weights(int bits, const FomLimits& limits, int comp_min,
                           int k_max) {
  const InlProfile ideal = ideal_profile(bits);
  const double sndr_max = sndr_from_inl(ideal);
  if (k_max <= 0) k_max = default_harmonic_count(bits);
  const double sfdr_max = sfdr_from_inl(ideal, k_max).sfdr_dbc;
  return weights_from_maxima(limits, sndr_max, sfdr_max, comp_min);
}

double fom_score(double sndr_db, double sfdr_dbc, int comparators,
                 const FomWeights& w) {
  const double sum = w.alpha * (sndr_db / w.sndr_max_db) +
                     w.beta * (sfdr_dbc / w.sfdr_max_dbc) +
                     w.gamma * (static_cast<double>(w.comp_min) / comparators);
  // Dividing by the stored sum instead of multiplying by delta keeps the
  // ideal corner at exactly 1.
  return sum / w.weight_sum;
}

ExploreOptions default_explore_options(int bits) {
  ExploreOptions o;
  o.prefilter = bits > 10;
  return o;
}

namespace {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

ScoredConfig score_one(const Architecture& a, const ImpairmentParams& p,
                       const FomWeights& w, int k_max, SpurModel model) {
  const InlProfile profile = global_inl(a, p);
  const double sndr = sndr_from_inl(profile);
  const double sfdr = sfdr_from_inl(profile, k_max, model).sfdr_dbc;
  return ScoredConfig{a, a.comparator_count(), sndr, enob_bits(sndr), sfdr,
                      fom_score(sndr, sfdr, a.comparator_count(), w)};
}

struct RankEntry {
  ScoredConfig row;
  bool full_depth = false;
};

void sort_entries(std::vector<RankEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const RankEntry& x, const RankEntry& y) {
    if (x.row.fom != y.row.fom) return x.row.fom > y.row.fom;
    if (x.row.comparators != y.row.comparators) {
      return x.row.comparators < y.row.comparators;
    }
    return x.row.architecture.to_string() < y.row.architecture.to_string();
  });
}

}  // namespace

ExploreResult explore(int bits, const ImpairmentParams& p, const FomLimits& limits,
                      const ExploreOptions& options) {
  p.validate();
  set_threads(options.threads);

  const std::vector<Architecture> archs = enumerate_architectures(bits);

  ExploreResult result;
  result.bits = bits;
  result.params = p;
  result.limits = limits;
  result.k_max = options.k_max > 0 ? options.k_max : default_harmonic_count(bits);
  result.prefilter = options.prefilter && options.prefilter_k < result.k_max;

  int comp_min = archs.front().comparator_count();
  int comp_max = comp_min;
  for (const auto& a : archs) {
    comp_min = std::min(comp_min, a.comparator_count());
    comp_max = std::max(comp_max, a.comparator_count());
  }
  result.comp_max = comp_max;
  result.weights = compute_weights(bits, limits, comp_min, result.k_max);

  const int pass_one_k = result.prefilter ? options.prefilter_k : result.k_max;
  std::vector<RankEntry> entries;
  entries.reserve(archs.size());
  for (const auto& a : archs) {
    entries.push_back(RankEntry{ScoredConfig{a, a.comparator_count(), 0, 0, 0, 0},
                                !result.prefilter});
  }
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(archs.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto& e = entries[static_cast<std::size_t>(i)];
    e.row = score_one(e.row.architecture, p, result.weights, pass_one_k,
                      options.spur_model);
  }
  sort_entries(entries);

  if (result.prefilter) {
    // Rescore the leading decile at full depth. A shallow-pass SFDR can only
    // be optimistic (fewer harmonics searched), so rows promoted into the
    // decile by a resort get rescored too, until the decile is stable.
    const std::size_t decile = std::max<std::size_t>(1, (archs.size() + 9) / 10);
    while (true) {
      std::vector<std::size_t> todo;
      for (std::size_t i = 0; i < decile && i < entries.size(); ++i) {
        if (!entries[i].full_depth) todo.push_back(i);
      }
      if (todo.empty()) break;
      const std::ptrdiff_t n_todo = static_cast<std::ptrdiff_t>(todo.size());
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t t = 0; t < n_todo; ++t) {
        auto& e = entries[todo[static_cast<std::size_t>(t)]];
        e.row = score_one(e.row.architecture, p, result.weights, result.k_max,
                          options.spur_model);
        e.full_depth = true;
      }
      result.rescored += todo.size();
      sort_entries(entries);
    }
  }

  result.rows.reserve(entries.size());
  for (auto& e : entries) result.rows.push_back(std::move(e.row));
  return result;
}

}  // namespace adcdse

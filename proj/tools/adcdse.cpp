// Command-line front end: exhaustive exploration, single-configuration
// evaluation, analytic-vs-behavioral verification, enumeration counting.
//
// Exit codes: 0 success, 1 bad usage or validation, 2 verification outside
// tolerance, 3 output I/O failure.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "adcdse/arch.hpp"
#include "adcdse/fom.hpp"
#include "adcdse/impair.hpp"
#include "adcdse/inl.hpp"
#include "adcdse/oracle.hpp"
#include "adcdse/report.hpp"
#include "adcdse/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTolerance = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  int bits = 10;
  double eps_gain = -0.015;
  double alpha_nl = 0.2;
  double sndr_lim_db = 56.0;
  double sfdr_lim_db = 75.0;
  int comp_lim = 60;
  std::size_t top_k = 0;
  std::string format = "table";
  std::string out_path;
  int harmonics = 0;
  bool no_prefilter = false;
  std::string spur_model = "inl";
  int threads = 0;
};

adcdse::SpurModel parse_spur_model(const std::string& name) {
  if (name == "dnl") return adcdse::SpurModel::kDnlShift;
  if (name == "inl") return adcdse::SpurModel::kInlShift;
  throw CLI::ValidationError("--spur-model", "use 'dnl' or 'inl'");
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  file << text;
  file.flush();
  if (!file) {
    std::cerr << "error: writing '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_explore(const CommonOptions& opt) {
  adcdse::ImpairmentParams params{opt.eps_gain, opt.alpha_nl};
  adcdse::FomLimits limits{opt.sndr_lim_db, opt.sfdr_lim_db, opt.comp_lim};
  adcdse::ExploreOptions options = adcdse::default_explore_options(opt.bits);
  options.k_max = opt.harmonics;
  options.threads = opt.threads;
  options.spur_model = parse_spur_model(opt.spur_model);
  if (opt.no_prefilter) options.prefilter = false;

  const adcdse::ExploreResult result =
      adcdse::explore(opt.bits, params, limits, options);
  return write_output(
      adcdse::render_report(result, adcdse::parse_report_format(opt.format), opt.top_k),
      opt.out_path);
}

int cmd_eval(const std::string& config, const CommonOptions& opt) {
  const adcdse::Architecture arch = adcdse::Architecture::parse(config);
  const int bits = arch.effective_bits();
  adcdse::ImpairmentParams params{opt.eps_gain, opt.alpha_nl};
  params.validate();
  const adcdse::SpurModel model = parse_spur_model(opt.spur_model);
  const int k_max =
      opt.harmonics > 0 ? opt.harmonics : adcdse::default_harmonic_count(bits);

  int comp_min = arch.comparator_count();
  for (const auto& a : adcdse::enumerate_architectures(bits)) {
    comp_min = std::min(comp_min, a.comparator_count());
  }
  const adcdse::FomWeights weights = adcdse::compute_weights(
      bits, {opt.sndr_lim_db, opt.sfdr_lim_db, opt.comp_lim}, comp_min, k_max);

  const adcdse::InlProfile profile = adcdse::global_inl(arch, params);
  const adcdse::SpectralMetrics m = adcdse::analyze_profile(profile, k_max, model);
  const double fom =
      adcdse::fom_score(m.sndr_db, m.sfdr_dbc, arch.comparator_count(), weights);

  std::printf("config       %s\n", arch.to_string().c_str());
  std::printf("bits         %d\n", bits);
  std::printf("comparators  %d\n", arch.comparator_count());
  std::printf("sndr_db      %.1f\n", m.sndr_db);
  std::printf("enob_bits    %.2f\n", m.enob);
  std::printf("sfdr_dbc     %.1f (worst harmonic k=%d)\n", m.sfdr_dbc,
              m.worst_harmonic);
  std::printf("fom          %.2f\n", fom);
  for (const auto& w : weights.warnings) std::printf("warning      %s\n", w.c_str());
  if (!m.monotonic) std::printf("warning      transfer curve is not monotonic\n");
  if (m.clamped) std::printf("warning      transition levels were clamped\n");
  return kExitOk;
}

int cmd_verify(const std::string& config, const CommonOptions& opt) {
  const adcdse::Architecture arch = adcdse::Architecture::parse(config);
  const int bits = arch.effective_bits();
  if (bits > 10) {
    std::cerr << "error: verify sweeps are limited to 10-bit architectures\n";
    return kExitUsage;
  }
  adcdse::ImpairmentParams params{opt.eps_gain, opt.alpha_nl};
  params.validate();
  const int k_max =
      opt.harmonics > 0 ? opt.harmonics : adcdse::default_harmonic_count(bits);
  const adcdse::SpurModel model = parse_spur_model(opt.spur_model);

  const adcdse::InlProfile analytic = adcdse::global_inl(arch, params);
  const double analytic_sndr = adcdse::sndr_from_inl(analytic);
  const double analytic_sfdr = adcdse::sfdr_from_inl(analytic, k_max, model).sfdr_dbc;

  const adcdse::oracle::TransferCurve curve = adcdse::oracle::simulate_transfer(arch, params);
  const adcdse::InlProfile measured = adcdse::oracle::measured_inl(curve);
  const adcdse::SpectralMetrics sine =
      adcdse::oracle::measure_sine_metrics(arch, params, 0, k_max);

  double inl_dev = 0.0;
  for (std::size_t i = 0; i < analytic.inl.size(); ++i) {
    inl_dev = std::max(inl_dev, std::abs(analytic.inl[i] - measured.inl[i]));
  }
  const double sndr_dev = std::abs(analytic_sndr - sine.sndr_db);
  const double sfdr_dev = std::abs(analytic_sfdr - sine.sfdr_dbc);

  constexpr double kInlTol = 0.25, kSndrTol = 1.0, kSfdrTol = 3.0;
  std::printf("config            %s (N=%d)\n", arch.to_string().c_str(), bits);
  std::printf("inl max |delta|   %.4f LSB (tolerance %.2f)\n", inl_dev, kInlTol);
  std::printf("sndr delta        %.3f dB (analytic %.2f, measured %.2f, tolerance %.1f)\n",
              sndr_dev, analytic_sndr, sine.sndr_db, kSndrTol);
  std::printf("sfdr delta        %.3f dB (analytic %.2f, measured %.2f, tolerance %.1f)\n",
              sfdr_dev, analytic_sfdr, sine.sfdr_dbc, kSfdrTol);
  if (curve.overrange_events > 0) {
    std::printf("note              %lld residue overrange events clamped\n",
                static_cast<long long>(curve.overrange_events));
  }
  if (!curve.monotonic) std::printf("note              transfer curve not monotonic\n");

  const bool pass = inl_dev <= kInlTol && sndr_dev <= kSndrTol && sfdr_dev <= kSfdrTol;
  std::printf("verdict           %s\n", pass ? "agree" : "DISAGREE");
  return pass ? kExitOk : kExitTolerance;
}

int cmd_count(int bits) {
  std::printf("%llu\n",
              static_cast<unsigned long long>(adcdse::count_architectures(bits)));
  return kExitOk;
}

void add_impairment_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--eps-gain", opt.eps_gain, "relative residue gain error");
  cmd->add_option("--alpha-nl", opt.alpha_nl, "tanh nonlinearity coefficient");
}

void add_fom_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--sndr-lim-db", opt.sndr_lim_db, "desired minimum SNDR (dB)");
  cmd->add_option("--sfdr-lim-db", opt.sfdr_lim_db, "desired minimum SFDR (dBc)");
  cmd->add_option("--comp-lim", opt.comp_lim, "desired maximum comparator count");
}

void add_spectral_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--harmonics", opt.harmonics,
                  "harmonic count (0 = 4*2^bits, covers the spur near pi*2^bits)");
  cmd->add_option("--spur-model", opt.spur_model,
                  "threshold displacement feeding the harmonic series: 'inl' "
                  "(accumulated errors, matches the simulation) or 'dnl' (code-width errors)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pipeline ADC design-space exploration"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string config;
  int count_bits = 10;

  CLI::App* explore = app.add_subcommand("explore", "rank every stage decomposition");
  explore->add_option("--bits", opt.bits, "target resolution")->check(CLI::Range(3, 16));
  add_impairment_flags(explore, opt);
  add_fom_flags(explore, opt);
  add_spectral_flags(explore, opt);
  explore->add_option("--top", opt.top_k, "keep only the best K rows (0 = all)");
  explore->add_option("--format", opt.format, "table, csv or json");
  explore->add_option("--out", opt.out_path, "output file (default stdout)");
  explore->add_flag("--no-prefilter", opt.no_prefilter,
                    "force single-phase ranking at full harmonic depth");
  explore->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

  CLI::App* eval = app.add_subcommand("eval", "score one stage decomposition");
  eval->add_option("config", config, "stage string, e.g. 3/1.5/1.5/2")->required();
  add_impairment_flags(eval, opt);
  add_fom_flags(eval, opt);
  add_spectral_flags(eval, opt);

  CLI::App* verify = app.add_subcommand(
      "verify", "compare the analytic path against the behavioral simulation");
  verify->add_option("config", config, "stage string")->required();
  add_impairment_flags(verify, opt);
  add_spectral_flags(verify, opt);

  CLI::App* count = app.add_subcommand("count", "count stage decompositions");
  count->add_option("--bits", count_bits, "target resolution")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(explore)) return cmd_explore(opt);
    if (app.got_subcommand(eval)) return cmd_eval(config, opt);
    if (app.got_subcommand(verify)) return cmd_verify(config, opt);
    if (app.got_subcommand(count)) return cmd_count(count_bits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

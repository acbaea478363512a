#include "adcdse/report.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace adcdse {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown format '" + name + "' (use table, csv or json)");
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string header_lines(const ExploreResult& r, const char* prefix) {
  std::string out;
  const auto& w = r.weights;
  out += std::string(prefix) + "pipeline ADC design-space report\n";
  out += std::string(prefix) + "bits=" + std::to_string(r.bits) +
         " eps_gain=" + format_double(r.params.eps_gain) +
         " alpha_nl=" + format_double(r.params.alpha_nl) +
         " sndr_lim_db=" + format_double(r.limits.sndr_lim_db) +
         " sfdr_lim_db=" + format_double(r.limits.sfdr_lim_db) +
         " comp_lim=" + std::to_string(r.limits.comp_lim) +
         " harmonics=" + std::to_string(r.k_max) +
         " prefilter=" + (r.prefilter ? "on" : "off") + "\n";
  out += std::string(prefix) + "alpha=" + fixed(w.alpha, 4) +
         " beta=" + fixed(w.beta, 4) + " gamma=" + fixed(w.gamma, 4) +
         " delta=" + fixed(w.delta, 4) + "\n";
  out += std::string(prefix) + "sndr_max_db=" + format_double(w.sndr_max_db) +
         " sfdr_max_dbc=" + format_double(w.sfdr_max_dbc) +
         " comp_min=" + std::to_string(w.comp_min) +
         " comp_max=" + std::to_string(r.comp_max) + "\n";
  out += std::string(prefix) +
         "ratios are unclamped: a config beating the ideal SFDR can score above "
         "its nominal share\n";
  for (const auto& warning : w.warnings) {
    out += std::string(prefix) + "warning: " + warning + "\n";
  }
  return out;
}

std::size_t row_cap(const ExploreResult& r, std::size_t top_k) {
  return top_k == 0 ? r.rows.size() : std::min(top_k, r.rows.size());
}

std::string render_table(const ExploreResult& r, std::size_t top_k) {
  std::string out = header_lines(r, "");
  out += "\n";
  std::size_t config_width = 6;
  const std::size_t n = row_cap(r, top_k);
  for (std::size_t i = 0; i < n; ++i) {
    config_width = std::max(config_width, r.rows[i].architecture.to_string().size());
  }
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s %6s %8s %6s %9s %5s\n",
                static_cast<int>(config_width), "config", "comp", "sndr_dB",
                "enob", "sfdr_dBc", "fom");
  out += line;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = r.rows[i];
    std::snprintf(line, sizeof(line), "%-*s %6d %8.1f %6.2f %9.1f %5.2f\n",
                  static_cast<int>(config_width),
                  row.architecture.to_string().c_str(), row.comparators,
                  row.sndr_db, row.enob, row.sfdr_dbc, row.fom);
    out += line;
  }
  return out;
}

std::string render_csv(const ExploreResult& r, std::size_t top_k) {
  std::string out = header_lines(r, "# ");
  out += "config,comparators,sndr_db,enob_bits,sfdr_dbc,fom\n";
  const std::size_t n = row_cap(r, top_k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = r.rows[i];
    out += row.architecture.to_string();
    out += ',' + std::to_string(row.comparators);
    out += ',' + format_double(row.sndr_db);
    out += ',' + format_double(row.enob);
    out += ',' + format_double(row.sfdr_dbc);
    out += ',' + format_double(row.fom);
    out += '\n';
  }
  return out;
}

std::string render_json(const ExploreResult& r, std::size_t top_k) {
  nlohmann::json doc;
  doc["params"] = {{"bits", r.bits},
                   {"eps_gain", r.params.eps_gain},
                   {"alpha_nl", r.params.alpha_nl},
                   {"sndr_lim_db", r.limits.sndr_lim_db},
                   {"sfdr_lim_db", r.limits.sfdr_lim_db},
                   {"comp_lim", r.limits.comp_lim},
                   {"harmonics", r.k_max},
                   {"prefilter", r.prefilter}};
  doc["weights"] = {{"alpha", r.weights.alpha},
                    {"beta", r.weights.beta},
                    {"gamma", r.weights.gamma},
                    {"delta", r.weights.delta},
                    {"sndr_max_db", r.weights.sndr_max_db},
                    {"sfdr_max_dbc", r.weights.sfdr_max_dbc},
                    {"comp_min", r.weights.comp_min},
                    {"comp_max", r.comp_max}};
  doc["warnings"] = r.weights.warnings;
  doc["rows"] = nlohmann::json::array();
  const std::size_t n = row_cap(r, top_k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = r.rows[i];
    doc["rows"].push_back({{"config", row.architecture.to_string()},
                           {"comparators", row.comparators},
                           {"sndr_db", row.sndr_db},
                           {"enob_bits", row.enob},
                           {"sfdr_dbc", row.sfdr_dbc},
                           {"fom", row.fom}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_report(const ExploreResult& result, ReportFormat format,
                          std::size_t top_k) {
  switch (format) {
    case ReportFormat::kTable:
      return render_table(result, top_k);
    case ReportFormat::kCsv:
      return render_csv(result, top_k);
    case ReportFormat::kJson:
      return render_json(result, top_k);
  }
  return {};
}

}  // namespace adcdse

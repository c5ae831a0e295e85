#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cesaro/cli.hpp"

namespace cesaro::cli {
namespace {

Json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double parse_real(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v))
    throw UsageError(std::string(what) + ": not a number: '" + s + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw UsageError("format must be json or csv");
}

Json bound_to_json(const Bound& b) {
  if (b.is_exact()) return number_or_null(b.lo);
  return Json::array({number_or_null(b.lo), number_or_null(b.hi)});
}

Json verdict_to_json(const TheoremVerdict& v) {
  Json j;
  j["theorem_id"] = to_string(v.theorem_id);
  j["alpha"] = v.alpha;
  j["theoretical"] = bound_to_json(v.theoretical);
  j["computed"] = number_or_null(v.computed);
  j["tolerance"] = v.tolerance;
  j["passed"] = v.passed;
  j["divergent"] = v.divergent;
  j["notes"] = v.notes;
  return j;
}

Json report_to_json(const RunReport& r, bool timestamp) {
  Json j;
  j["command"] = r.command;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = verdicts;
  j["artifacts"] = r.artifacts;
  j["wall_time"] = timestamp ? r.wall_time : 0.0;
  if (timestamp) j["timestamp"] = utc_now();
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report_to_csv(const RunReport& r) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << csv_field(fields[i]);
    }
    os << "\r\n";
  };
  line(r.csv_header);
  for (const auto& row : r.csv_rows) line(row);
  return os.str();
}

std::string format_number(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_alpha_list(std::string_view text) {
  if (text.empty()) throw UsageError("alpha list is empty");
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part, "alpha"));
  return out;
}

std::vector<double> parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid must be start:stop:step, got '" + std::string(text) + "'");
  const double start = parse_real(parts[0], "grid start");
  const double stop = parse_real(parts[1], "grid stop");
  const double step = parse_real(parts[2], "grid step");
  if (!(step > 0.0)) throw UsageError("grid step must be positive");
  std::vector<double> out;
  const double end = stop + 0.5 * step;
  for (long i = 0;; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (!(v < end)) break;
    // Strip accumulated binary noise so 0.1:0.5:0.1 yields 0.3, not 0.30000000000000004.
    v = std::round(v * 1e12) / 1e12;
    out.push_back(v);
    if (out.size() > 100000) throw UsageError("grid has too many points");
  }
  if (out.empty()) throw UsageError("grid '" + std::string(text) + "' is empty");
  return out;
}

void emit(CommandResult& result, Format format, const std::string& output, bool timestamp) {
  if (!output.empty()) result.report.artifacts.push_back(output);
  const std::string text = format == Format::kJson
                               ? report_to_json(result.report, timestamp).dump(2) + "\n"
                               : report_to_csv(result.report);
  if (output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + output + "'");
  out << text;
}

}  // namespace cesaro::cli

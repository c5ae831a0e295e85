#pragma once

// Report model and subcommands behind the cesaro_cli binary.  Each command
// returns a RunReport plus the process exit code; rendering to JSON or CSV
// happens once at the end.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cesaro/empirical.hpp"
#include "cesaro/theorems.hpp"

namespace cesaro::cli {

using Json = nlohmann::ordered_json;

/// Bad flags or parameters; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { kJson, kCsv };
Format parse_format(std::string_view text);

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<TheoremVerdict> verdicts;
  std::vector<std::string> artifacts;
  double wall_time = 0.0;
  /// Command-specific payload ("rows", "estimate", ...), appended after the
  /// common keys.
  Json extra = Json::object();
  /// Tabular view used for CSV output.
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

struct CommandResult {
  RunReport report;
  int exit_code = 0;
};

/// A number when exact, otherwise [lo, hi] with null for an infinite end.
Json bound_to_json(const Bound& b);
Json verdict_to_json(const TheoremVerdict& v);
/// Without a timestamp, wall_time is written as 0 so identical runs give
/// identical bytes.
Json report_to_json(const RunReport& r, bool timestamp);

/// RFC-4180 field quoting.
std::string csv_field(std::string_view text);
std::string report_to_csv(const RunReport& r);
/// "%.17g"; empty for NaN, "inf"/"-inf" for infinities.
std::string format_number(double v);

/// Comma-separated reals.  UsageError on empty or malformed input.
std::vector<double> parse_alpha_list(std::string_view text);
/// "start:stop:step", inclusive of start and exclusive of stop + step/2.
std::vector<double> parse_grid(std::string_view text);

struct VerifyArgs {
  std::string theorem;
  std::vector<double> alphas;
  double tol = 0.0;
  std::optional<SampleConfig> empirical;
};
CommandResult cmd_verify(const VerifyArgs& args);

CommandResult cmd_table(std::string_view grid);

struct EmpiricalArgs {
  std::string source;
  std::string target;
  double alpha = 0.5;
  SampleConfig sampling;
};
CommandResult cmd_empirical(const EmpiricalArgs& args);

struct DumpArgs {
  std::string theorem;
  double alpha = 0.5;
  std::vector<double> radii;
  int t_points = 201;
  double t_max = 20.0;
};
CommandResult cmd_dump_integrand(const DumpArgs& args);

/// Renders `result` to `output` (stdout when empty) and records the path as an
/// artifact.
void emit(CommandResult& result, Format format, const std::string& output, bool timestamp);

}  // namespace cesaro::cli

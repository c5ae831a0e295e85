#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "cesaro/cli.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/parallel.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro::cli {
namespace {

constexpr double kSoundnessSlack = 1e-3;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += short_number(xs[i]);
  }
  return out;
}

Json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

TheoremId require_theorem(std::string_view text) {
  const auto id = parse_theorem_id(text);
  if (!id) throw UsageError("unknown theorem '" + std::string(text) + "'");
  return *id;
}

std::string range_text(TheoremId id) {
  switch (id) {
    case TheoremId::kKorenblumExact:
      return "0 < alpha <= 0.5";
    case TheoremId::kLogToPlain:
    case TheoremId::kLogToLog:
      return "0 < alpha < 1";
    case TheoremId::kBlochUpper:
    case TheoremId::kBlochLower:
      return "alpha > 1";
    case TheoremId::kHardyToBloch:
      return "alpha > 0";
  }
  return "";
}

struct PairStatement {
  TheoremId id;
  Bound bound;
  bool divergent = false;
  std::string note;
};

PairStatement pair_statement(const SpaceSpec& source, const SpaceSpec& target) {
  using Kind = SpaceSpec::Kind;
  const double a = target.alpha();
  if (source.kind() == Kind::kKorenblum) {
    if (a <= 0.5) return {TheoremId::kKorenblumExact, Bound::exact(1.0 / a), false, "norm 1/alpha"};
    return {TheoremId::kKorenblumExact, Bound::at_least(1.0 / a), false,
            "no upper bound stated for alpha > 1/2"};
  }
  if (source.kind() == Kind::kKorenblumLog && target.kind() == Kind::kKorenblum) {
    const SupEstimate s = log_to_plain_norm(a);
    return {TheoremId::kLogToPlain, Bound::exact(s.value), false,
            "norm from the sup-integral; stated lower bound " +
                short_number(1.0 / (1.0 / a + std::numbers::ln2))};
  }
  if (source.kind() == Kind::kKorenblumLog) {
    const SupEstimate s = log_to_log_norm(a);
    const double v = std::max(s.value, s.extrapolated_limit.value_or(0.0));
    return {TheoremId::kLogToLog, Bound::exact(v), false, "norm from the sup-integral"};
  }
  if (source.kind() == Kind::kBlochAlpha)
    return {TheoremId::kBlochUpper, Bound{bloch_lower_bound(), bloch_upper_bound(a)}, false,
            "stated bounds [3/2, upper]"};
  const HardyToBlochBounds b = hardy_to_bloch_bounds(a);
  if (b.divergent)
    return {TheoremId::kHardyToBloch, Bound::at_least(std::numeric_limits<double>::infinity()), true,
            "operator unbounded for alpha < 1"};
  return {TheoremId::kHardyToBloch, *b.bounds, false, "stated bounds"};
}

}  // namespace

CommandResult cmd_verify(const VerifyArgs& args) {
  const Stopwatch clock;
  const TheoremId id = require_theorem(args.theorem);
  if (args.alphas.empty()) throw UsageError("verify: no alpha given");
  if (args.tol < 0.0) throw UsageError("verify: tolerance must be non-negative");
  for (double a : args.alphas) {
    if (!theorem_accepts_alpha(id, a))
      throw UsageError("verify: " + to_string(id) + " requires " + range_text(id) + ", got alpha = " +
                       short_number(a));
  }
  if (args.empirical && args.empirical->count <= 0) throw UsageError("verify: sample count must be positive");

  VerifyOptions opts;
  opts.tol = args.tol;
  opts.empirical = args.empirical;

  std::vector<std::optional<TheoremVerdict>> slots(args.alphas.size());
  parallel_for(slots.size(), [&](std::size_t i) { slots[i] = verify_theorem(id, args.alphas[i], opts); });

  CommandResult out;
  RunReport& r = out.report;
  r.command = "verify";
  r.parameters = {{"theorem", to_string(id)},
                  {"alpha", join(args.alphas)},
                  {"tol", args.tol > 0.0 ? short_number(args.tol) : "default"}};
  if (args.empirical) {
    r.parameters.emplace_back("samples", std::to_string(args.empirical->count));
    r.parameters.emplace_back("seed", std::to_string(args.empirical->seed));
  }
  r.csv_header = {"theorem_id", "alpha",  "theoretical_lo", "theoretical_hi", "computed",
                  "tolerance",  "passed", "divergent",      "notes"};
  bool all = true;
  for (auto& v : slots) {
    all = all && v->passed;
    r.csv_rows.push_back({to_string(v->theorem_id), short_number(v->alpha), format_number(v->theoretical.lo),
                          format_number(v->theoretical.hi), format_number(v->computed),
                          format_number(v->tolerance), v->passed ? "true" : "false",
                          v->divergent ? "true" : "false", v->notes});
    r.verdicts.push_back(std::move(*v));
  }
  out.exit_code = all ? 0 : 1;
  r.wall_time = clock.seconds();
  return out;
}

CommandResult cmd_table(std::string_view grid) {
  const Stopwatch clock;
  const std::vector<double> alphas = parse_grid(grid);
  for (double a : alphas)
    if (!(a > 0.0)) throw UsageError("table: alpha values must be positive");

  struct Row {
    double alpha;
    double t31 = NAN, t41_sup = NAN, t41_lower = NAN, t51_sup = NAN, t51_limit = NAN;
    double t62_upper = NAN, t63_lower = NAN, t71_lo = NAN, t71_hi = NAN;
    bool t71_divergent = false;
  };
  std::vector<Row> rows(alphas.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    Row& row = rows[i];
    const double a = alphas[i];
    row.alpha = a;
    if (a <= 0.5) row.t31 = korenblum_norm_exact(a);
    if (a < 1.0) {
      row.t41_sup = log_to_plain_norm(a).value;
      row.t41_lower = 1.0 / (1.0 / a + std::numbers::ln2);
      row.t51_sup = log_to_log_norm(a).value;
      row.t51_limit = 1.0 / a;
    }
    if (a > 1.0) {
      row.t62_upper = bloch_upper_bound(a);
      row.t63_lower = bloch_lower_bound();
    }
    const HardyToBlochBounds b = hardy_to_bloch_bounds(a);
    row.t71_divergent = b.divergent;
    if (b.bounds) {
      row.t71_lo = b.bounds->lo;
      row.t71_hi = b.bounds->hi;
    }
  });

  CommandResult out;
  RunReport& r = out.report;
  r.command = "table";
  r.parameters = {{"alpha_grid", std::string(grid)}};
  r.csv_header = {"alpha",        "T3.1_exact", "T4.1_sup", "T4.1_lower", "T5.1_sup",  "T5.1_inv_alpha",
                  "T6.2_upper",   "T6.3_lower", "T7.1_lo",  "T7.1_hi",    "T7.1_divergent"};
  Json table = Json::array();
  for (const Row& row : rows) {
    const std::vector<double> nums = {row.alpha,    row.t31,       row.t41_sup,   row.t41_lower,
                                      row.t51_sup,  row.t51_limit, row.t62_upper, row.t63_lower,
                                      row.t71_lo,   row.t71_hi};
    std::vector<std::string> fields;
    Json obj;
    for (std::size_t c = 0; c < nums.size(); ++c) {
      fields.push_back(c == 0 ? short_number(nums[c]) : format_number(nums[c]));
      obj[r.csv_header[c]] = number_or_null(nums[c]);
    }
    fields.emplace_back(row.t71_divergent ? "true" : "false");
    obj["T7.1_divergent"] = row.t71_divergent;
    r.csv_rows.push_back(std::move(fields));
    table.push_back(std::move(obj));
  }
  r.extra["rows"] = std::move(table);
  r.wall_time = clock.seconds();
  return out;
}

CommandResult cmd_empirical(const EmpiricalArgs& args) {
  const Stopwatch clock;
  if (args.sampling.count <= 0) throw UsageError("empirical: sample count must be positive");
  if (args.sampling.max_degree < 1) throw UsageError("empirical: max degree must be at least 1");
  SpaceSpec source = SpaceSpec::hardy_inf();
  SpaceSpec target = SpaceSpec::hardy_inf();
  try {
    source = SpaceSpec::parse(args.source, args.alpha);
    target = SpaceSpec::parse(args.target, args.alpha);
  } catch (const std::exception& e) {
    throw UsageError(std::string("empirical: ") + e.what());
  }
  if (!is_studied_pair(source, target))
    throw UsageError("empirical: unsupported pair " + source.name() + " -> " + target.name());

  const PairStatement stmt = pair_statement(source, target);
  const EmpiricalBound emp = operator_norm_lower_bound(source, target, args.sampling);

  TheoremVerdict v{stmt.id, args.alpha, stmt.bound, emp.estimate.value, kSoundnessSlack, false,
                   stmt.divergent, {}};
  std::size_t violations = 0;
  if (!stmt.divergent) {
    for (std::size_t i = 0; i < emp.ratios.size(); ++i)
      if (emp.sample_diverged[i] || emp.ratios[i] > stmt.bound.hi + kSoundnessSlack) ++violations;
  }
  if (stmt.divergent) {
    v.passed = emp.diverged;
    v.notes = emp.diverged ? "unbounded, divergence confirmed near r = " + short_number(emp.divergence_radius)
                           : "expected divergence not observed";
  } else {
    v.passed = violations == 0;
    v.notes = "lower bound " + short_number(emp.estimate.value) + " from sample " +
              std::to_string(emp.best_sample) + " of " + std::to_string(emp.samples) + "; " + stmt.note +
              "; violations: " + std::to_string(violations);
  }

  CommandResult out;
  RunReport& r = out.report;
  r.command = "empirical";
  r.parameters = {{"source", source.name()},
                  {"target", target.name()},
                  {"alpha", short_number(args.alpha)},
                  {"samples", std::to_string(args.sampling.count)},
                  {"seed", std::to_string(args.sampling.seed)},
                  {"max_degree", std::to_string(args.sampling.max_degree)},
                  {"decay", short_number(args.sampling.decay_exponent)}};
  r.verdicts.push_back(v);

  Json est;
  est["lower_bound"] = number_or_null(emp.estimate.value);
  est["best_sample"] = emp.best_sample;
  est["witness_ratio"] = number_or_null(emp.ratios.back());
  est["argmax_radius"] = emp.estimate.argmax_radius;
  est["argmax_angle"] = emp.estimate.argmax_angle;
  est["refinement_residual"] = emp.estimate.refinement_residual;
  est["boundary_limit"] = emp.estimate.boundary_limit ? Json(*emp.estimate.boundary_limit) : Json(nullptr);
  est["diverged"] = emp.diverged;
  est["divergence_radius"] = emp.diverged ? Json(emp.divergence_radius) : Json(nullptr);
  est["violations"] = violations;
  Json ratios = Json::array();
  for (double x : emp.ratios) ratios.push_back(number_or_null(x));
  est["ratios"] = std::move(ratios);
  r.extra["estimate"] = std::move(est);

  r.csv_header = {"sample", "witness", "ratio", "diverged"};
  for (std::size_t i = 0; i < emp.ratios.size(); ++i) {
    r.csv_rows.push_back({std::to_string(i), i + 1 == emp.ratios.size() ? "true" : "false",
                          format_number(emp.ratios[i]), emp.sample_diverged[i] ? "true" : "false"});
  }
  out.exit_code = v.passed ? 0 : 1;
  r.wall_time = clock.seconds();
  return out;
}

CommandResult cmd_dump_integrand(const DumpArgs& args) {
  const Stopwatch clock;
  const TheoremId id = require_theorem(args.theorem);
  if (id != TheoremId::kKorenblumExact && id != TheoremId::kLogToPlain && id != TheoremId::kLogToLog)
    throw UsageError("dump-integrand: only T3.1, T4.1 and T5.1 have a t-integrand");
  if (!(args.alpha > 0.0 && args.alpha < 1.0)) throw UsageError("dump-integrand: alpha must lie in (0,1)");
  if (args.radii.empty()) throw UsageError("dump-integrand: no radius given");
  for (double r : args.radii)
    if (!(r >= 0.0 && r < 1.0)) throw UsageError("dump-integrand: radii must lie in [0,1)");
  if (args.t_points < 2) throw UsageError("dump-integrand: need at least 2 t points");
  if (!(args.t_max > 0.0) || !std::isfinite(args.t_max)) throw UsageError("dump-integrand: t-max must be positive");

  CommandResult out;
  RunReport& r = out.report;
  r.command = "dump-integrand";
  r.parameters = {{"theorem", to_string(id)},
                  {"alpha", short_number(args.alpha)},
                  {"radii", join(args.radii)},
                  {"t_points", std::to_string(args.t_points)},
                  {"t_max", short_number(args.t_max)}};
  switch (id) {
    case TheoremId::kLogToPlain:
      r.csv_header = {"r", "t", "F", "log_factor", "integrand"};
      break;
    case TheoremId::kLogToLog:
      r.csv_header = {"r", "t", "F", "log_ratio", "integrand"};
      break;
    default:
      r.csv_header = {"r", "t", "integrand"};
  }
  Json rows = Json::array();
  for (double rad : args.radii) {
    for (int i = 0; i < args.t_points; ++i) {
      const double t = args.t_max * i / (args.t_points - 1);
      const double f = integrand_F(rad, t, args.alpha);
      std::vector<double> nums;
      switch (id) {
        case TheoremId::kLogToPlain: {
          const double lf = log_factor_at_image(rad, t, args.alpha);
          nums = {rad, t, f, lf, f / lf};
          break;
        }
        case TheoremId::kLogToLog: {
          const double lr = log_ratio(rad, t, args.alpha);
          nums = {rad, t, f, lr, f * lr};
          break;
        }
        default:
          nums = {rad, t, f};
      }
      std::vector<std::string> fields;
      Json row = Json::array();
      for (std::size_t c = 0; c < nums.size(); ++c) {
        const double x = nums[c];
        fields.push_back(c < 2 ? short_number(x) : format_number(x));
        row.push_back(number_or_null(x));
      }
      r.csv_rows.push_back(std::move(fields));
      rows.push_back(std::move(row));
    }
  }
  r.extra["columns"] = r.csv_header;
  r.extra["rows"] = std::move(rows);
  r.wall_time = clock.seconds();
  return out;
}

}  // namespace cesaro::cli

// cesaro_cli: verify the norm results for the Cesaro operator, print tables,
// run empirical lower bounds and dump integrand slices.
//
// Exit codes: 0 all verdicts passed, 1 a verdict failed, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "cesaro/cli.hpp"
#include "cesaro/errors.hpp"

namespace cli = cesaro::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cesaro operator norm verification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  bool no_timestamp = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", output, "write the report here instead of stdout");
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp and zero wall_time");
  };

  std::string theorem;
  std::string alpha_text;
  double tol = 0.0;
  int verify_samples = 0;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "check a theorem at one or more alpha values");
  verify->add_option("--theorem", theorem, "T3.1, T4.1, T5.1, T6.2, T6.3 or T7.1")->required();
  verify->add_option("--alpha", alpha_text, "comma-separated alpha values")->required();
  verify->add_option("--tol", tol, "comparison tolerance (default depends on the theorem)");
  verify->add_option("--samples", verify_samples, "T6.2/T6.3: also sample this many functions");
  verify->add_option("--seed", verify_seed, "seed for --samples");
  add_common(verify);

  std::string grid;
  auto* table = app.add_subcommand("table", "tabulate norms and bounds over an alpha grid");
  table->add_option("--alpha-grid", grid, "start:stop:step")->required();
  add_common(table);

  cli::EmpiricalArgs emp;
  auto* empirical = app.add_subcommand("empirical", "sampled lower bound on an operator norm");
  empirical->add_option("--source", emp.source, "hardy, korenblum, korenblum-log or bloch")->required();
  empirical->add_option("--target", emp.target, "hardy, korenblum, korenblum-log or bloch")->required();
  empirical->add_option("--alpha", emp.alpha, "space parameter")->required();
  empirical->add_option("--samples", emp.sampling.count, "number of random functions");
  empirical->add_option("--seed", emp.sampling.seed, "random seed");
  empirical->add_option("--max-degree", emp.sampling.max_degree, "maximum polynomial degree");
  empirical->add_option("--decay", emp.sampling.decay_exponent, "coefficient decay exponent");
  add_common(empirical);

  cli::DumpArgs dump;
  std::string radii_text;
  auto* dump_cmd = app.add_subcommand("dump-integrand", "write integrand values on a t grid");
  dump_cmd->add_option("--theorem", dump.theorem, "T3.1, T4.1 or T5.1")->required();
  dump_cmd->add_option("--alpha", dump.alpha, "alpha in (0,1)")->required();
  dump_cmd->add_option("--radii", radii_text, "comma-separated radii in [0,1)")->required();
  dump_cmd->add_option("--t-points", dump.t_points, "number of t samples");
  dump_cmd->add_option("--t-max", dump.t_max, "upper end of the t grid");
  add_common(dump_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::CommandResult result;
    if (*verify) {
      cli::VerifyArgs args;
      args.theorem = theorem;
      args.alphas = cli::parse_alpha_list(alpha_text);
      args.tol = tol;
      if (verify_samples > 0) {
        cesaro::SampleConfig cfg;
        cfg.count = verify_samples;
        cfg.seed = verify_seed;
        args.empirical = cfg;
      }
      result = cli::cmd_verify(args);
    } else if (*table) {
      result = cli::cmd_table(grid);
    } else if (*empirical) {
      result = cli::cmd_empirical(emp);
    } else {
      dump.radii = cli::parse_alpha_list(radii_text);
      result = cli::cmd_dump_integrand(dump);
    }
    cli::emit(result, cli::parse_format(format), output, !no_timestamp);
    return result.exit_code;
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cesaro::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const cesaro::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << '\n';
    return 1;
  }
}

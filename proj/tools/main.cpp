#include <cstddef>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "spindeg/cli.hpp"

namespace {

const char* kFooter = R"(output schemas:
  scaling / gpc CSV columns: family,p,a,eta,eta_lower,eta_upper,floor_flag
    One row per grid point. A failed point leaves the numeric cells empty and
    records error:<message> in the final column. The table ends with a
    summary row fit,<slope>,<intercept>,<residual>,<points>,, fitted to
    ln eta vs ln p over the usable points.
  capacity CSV columns: p,ic,eta_optimal,delta_optimal,lower_optimal,
    eta_generic15,delta_generic15,lower_generic15
  JSON output carries the same numbers as {config, records, summary}.

notes:
  Floats print with 17 significant digits; a given configuration reproduces
  identical bytes on every run. The diamond command evaluates at p = --p-min
  (0 and 1 included) and prints the distance to the identity alongside the
  entangled probe lower bound and the entrywise Choi upper bound.

exit codes:
  0 success, 1 verification failure, 2 invalid configuration,
  3 solver failure (scaling and gpc: only when every grid point fails))";

}  // namespace

int main(int argc, char** argv) {
  spindeg::RunConfig cfg;
  std::string command = "verify";
  std::string a_flag = "optimal";
  std::string format = "csv";

  CLI::App app{"spindeg: degradability and capacity bounds for spin mixture and generalized Pauli channels"};
  app.add_option("--command", command,
                 "operation to run: verify | scaling | capacity | diamond | gpc (default verify)")
      ->check(CLI::IsMember({"verify", "scaling", "capacity", "diamond", "gpc"}));
  app.add_option("--j", cfg.j, "spin quantum number, positive half-integer (default 1)");
  CLI::Option* d_opt =
      app.add_option("--d", cfg.d, "qudit dimension >= 2 for pauli families (default 2)");
  app.add_option("--p-min", cfg.p_min,
                 "lower grid bound; also the diamond evaluation point (default 1e-3)");
  app.add_option("--p-max", cfg.p_max, "upper grid bound (default 1e-1)");
  app.add_option("--points", cfg.points, "number of grid points (default 9)");
  app.add_option("--log-grid", cfg.log_grid,
                 "log-spaced grid when true, linear when false (default true)");
  app.add_option("--a", a_flag,
                 "degrading perturbation weight: optimal | zero | <number> (default optimal)");
  app.add_option("--format", format, "table format: csv | json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "write the table to this path instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for randomized verification checks (default 12345)");
  app.add_option("--inject-fault", cfg.inject_fault)->group("");
  app.footer(kFooter);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? spindeg::kExitOk : spindeg::kExitInvalidConfig;
  }

  cfg.d_given = d_opt->count() > 0;

  if (command == "verify") cfg.command = spindeg::Command::verify;
  else if (command == "scaling") cfg.command = spindeg::Command::scaling;
  else if (command == "capacity") cfg.command = spindeg::Command::capacity;
  else if (command == "diamond") cfg.command = spindeg::Command::diamond;
  else cfg.command = spindeg::Command::gpc;

  if (a_flag == "optimal") {
    cfg.a_mode = spindeg::AFlagMode::optimal;
  } else if (a_flag == "zero") {
    cfg.a_mode = spindeg::AFlagMode::zero;
  } else {
    try {
      std::size_t used = 0;
      cfg.a_value = std::stod(a_flag, &used);
      if (used != a_flag.size()) throw std::invalid_argument(a_flag);
      cfg.a_mode = spindeg::AFlagMode::explicit_value;
    } catch (const std::exception&) {
      std::cerr << "error: --a expects optimal, zero, or a number\n";
      return spindeg::kExitInvalidConfig;
    }
  }

  cfg.format = format == "json" ? spindeg::Format::json : spindeg::Format::csv;
  return spindeg::run_command(cfg, std::cout);
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spindeg {

enum class Command { verify, scaling, capacity, diamond, gpc };
enum class Format { csv, json };
enum class AFlagMode { optimal, zero, explicit_value };

struct RunConfig {
  Command command = Command::verify;
  double j = 1.0;   // spin families
  int d = 2;        // pauli families
  bool d_given = false;  // diamond switches to the pauli family when --d appears
  double p_min = 1e-3;
  double p_max = 1e-1;
  int points = 9;
  bool log_grid = true;
  AFlagMode a_mode = AFlagMode::optimal;
  double a_value = 0.0;  // explicit_value only
  Format format = Format::csv;
  std::string out;  // output path; empty writes the table to the report stream
  std::uint64_t seed = 12345;
  std::string inject_fault;  // verification test hook, normally empty
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitSolverFailed = 3;

// The p grid described by the config: `points` values spanning
// [p_min, p_max], log- or linearly spaced; a single point collapses to p_min.
// Bounds must satisfy 0 < p_min <= p_max < 1.
std::vector<double> build_grid(const RunConfig& cfg);

// Runs the invariant suites and prints one pass/fail line per suite plus
// per-check defects. Returns kExitVerifyFailed when any suite fails.
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Sweeps eta over the grid (spin family for `scaling`, pauli family for
// `gpc`), appends the fitted slope, and writes CSV or JSON. Returns
// kExitSolverFailed only when every grid point failed.
int cmd_scaling(const RunConfig& cfg, std::ostream& out);

// Writes the channel-capacity table with both perturbation modes side by
// side.
int cmd_capacity(const RunConfig& cfg, std::ostream& out);

// Reports the diamond distance to the identity together with the entangled
// probe lower bound and the entrywise Choi upper bound, evaluated at
// p = p_min (which may be 0 or 1 here).
int cmd_diamond(const RunConfig& cfg, std::ostream& out);

// Dispatches on cfg.command and maps exceptions to exit codes: domain errors
// give kExitInvalidConfig, solver errors give kExitSolverFailed, with the
// message printed as "error: ...".
int run_command(const RunConfig& cfg, std::ostream& out);

}  // namespace spindeg

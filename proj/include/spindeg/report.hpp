#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spindeg/capacity.hpp"
#include "spindeg/degrade.hpp"

namespace spindeg {

// Shortest round-trip-exact decimal form shared by every writer below, so a
// value prints identically in CSV and JSON output.
std::string format_g17(double v);

struct RunMeta {
  std::string command;
  std::string family;
  std::string a_mode;  // "optimal", "zero", or "explicit"
  double a = 0.0;
  bool has_a = false;
  std::uint64_t seed = 0;
};

// CSV column layout (LF line endings, header row first):
//   family,p,a,eta,eta_lower,eta_upper,floor_flag
// floor_flag is 0 or 1; a failed grid point leaves the numeric cells empty
// and stores the sanitized message in the floor_flag column as
// "error:<message>". The trailing summary row reuses the columns as
//   fit,<slope>,<intercept>,<residual>,<points>,,
// and degrades to "fit,,,,," plus an in-row error when no fit was possible.
std::string scaling_table_csv(const std::vector<ScalingRecord>& records, const SlopeFit* fit,
                              const std::string& fit_error);

// JSON document {config, records, summary}; record objects carry either the
// numeric fields or an "error" string, and summary is the fit or its error.
std::string scaling_json(const RunMeta& meta, const std::vector<ScalingRecord>& records,
                         const SlopeFit* fit, const std::string& fit_error);

// CSV column layout (both a-modes side by side, matched by grid point):
//   p,ic,eta_optimal,delta_optimal,lower_optimal,
//   eta_generic15,delta_generic15,lower_generic15
std::string capacity_table_csv(const std::vector<CapacityPoint>& optimal,
                               const std::vector<CapacityPoint>& generic15);

std::string capacity_json(const RunMeta& meta, const std::vector<CapacityPoint>& optimal,
                          const std::vector<CapacityPoint>& generic15);

}  // namespace spindeg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spindeg {

struct VerifySuiteResult {
  std::string name;
  bool passed = true;
  double max_defect = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> lines;  // per-check detail, stable order
};

// Runs the three invariant suites (spin-algebra, channel-structure,
// sdp-oracle). inject_fault names a suite whose input data gets perturbed by
// 1e-6 before checking; it must then fail, which exercises the reporting
// path end to end.
std::vector<VerifySuiteResult> run_verify_suites(std::uint64_t seed,
                                                 const std::string& inject_fault);

}  // namespace spindeg

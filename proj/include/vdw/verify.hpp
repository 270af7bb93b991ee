#ifndef VDW_VERIFY_HPP
#define VDW_VERIFY_HPP

#include <string>
#include <vector>

namespace vdw {

struct CheckResult {
  std::string name;
  int criterion = 0;  // 1..8 for the headline acceptance criteria, else 0
  double tolerance = 0.0;
  double observed = 0.0;
  bool pass = false;
  std::string detail;
};

// Runs the full verification suite. Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(unsigned seed = 12345);

}  // namespace vdw

#endif

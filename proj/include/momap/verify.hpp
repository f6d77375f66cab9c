#ifndef MOMAP_VERIFY_HPP
#define MOMAP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace momap {

/// One named property check: the law it tests, the worst residual observed,
/// and the tolerance it is held to.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string law;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Runs the named suite ("exterior", "poincare", "charges", "centers" or
/// "all") with reproducible seeding.  Affine-geometry checks run under
/// "poincare"; matter-model checks under "charges".
std::vector<CheckResult> run_verification(const std::string& suite, std::uint64_t seed);

/// Deliberately broken inputs: each check is expected to FAIL its law,
/// demonstrating that the detectors bite.  pass=false is the good outcome.
std::vector<CheckResult> negative_controls();

}  // namespace momap

#endif

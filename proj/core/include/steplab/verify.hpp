#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steplab {

/// One verified claim: the estimate must land within tolerance (an absolute
/// band, already including any 3-sigma widening) of the target.
struct VerifyCheck {
  std::string name;
  double estimate = 0.0;
  double target = 0.0;
  double tolerance = 0.0;   // absolute band applied
  double std_error = 0.0;   // 0 when the check is deterministic
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerifyCheck> checks;
  double seconds = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  double seconds = 0.0;
  bool pass = false;
};

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite (eq1, amplification, l1, rrc, scale_invariance,
/// snr, gradcheck, lionar_norms). Throws std::invalid_argument for an
/// unknown name.
SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed);

/// Runs the requested suites (all of them when the list is empty).
VerifyReport run_verify(const std::vector<std::string>& suites, std::uint64_t seed);

std::string verify_report_json(const VerifyReport& report);

}  // namespace steplab

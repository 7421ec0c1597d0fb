#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nk::verify {

struct SweepOptions {
  bool quick = false;        // reduced pools, < 30 s total
  std::uint64_t seed = 20240809;  // drives the random block tuples
  int threads = 0;           // 0: NIELSEN_KIT_THREADS or hardware
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string details;
  std::vector<std::string> failures;  // truncated to the first few
};

/// Criteria 1..9.  Each runs self-contained and returns a structured
/// verdict; nothing throws for mathematical failures (they land in
/// `failures`), only for internal errors.
CriterionResult run_criterion(int number, const SweepOptions& opts = {});

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
  double seconds = 0.0;
  bool quick = false;
  std::uint64_t seed = 0;
  int threads = 0;
};

VerifyReport run_all(const SweepOptions& opts = {});

}  // namespace nk::verify

// Acceptance suite: runs every verification criterion at full scale and
// prints one pass/fail line per criterion, enforcing the stated runtime
// budgets.  Criterion 10 launches the CLI binary (path in NIELSENKIT_CLI)
// and checks that `verify-all` exits 0 within its budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "nk/verify.hpp"

namespace {

struct Budget {
  int criterion;
  double seconds;
};

// stated runtime limits; criteria without one get the overall 5-minute cap
constexpr Budget kBudgets[] = {
    {1, 10.0}, {2, 60.0}, {4, 300.0}, {9, 10.0},
};

double budget_for(int criterion) {
  for (const auto& b : kBudgets)
    if (b.criterion == criterion) return b.seconds;
  return 300.0;
}

bool run_cli_verify_all(double& seconds, int& exit_code) {
  const char* cli = std::getenv("NIELSENKIT_CLI");
  if (!cli) return false;
  std::string cmd = std::string(cli) + " verify-all > /dev/null 2>&1";
  auto t0 = std::chrono::steady_clock::now();
  int status = std::system(cmd.c_str());
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return true;
}

}  // namespace

int main() {
  nk::verify::SweepOptions opts;  // full scale, fixed default seed
  bool all_pass = true;

  for (int n = 1; n <= 9; ++n) {
    auto r = nk::verify::run_criterion(n, opts);
    bool within_budget = r.seconds <= budget_for(n);
    bool ok = r.pass && within_budget;
    all_pass = all_pass && ok;
    std::printf("[%s] criterion %d: %s (%s; %.2fs%s)\n", ok ? "PASS" : "FAIL", n,
                r.name.c_str(), r.details.c_str(), r.seconds,
                within_budget ? "" : ", OVER BUDGET");
    for (const auto& f : r.failures) std::printf("        %s\n", f.c_str());
  }

  double cli_seconds = 0.0;
  int cli_exit = -1;
  if (run_cli_verify_all(cli_seconds, cli_exit)) {
    bool ok = (cli_exit == 0) && (cli_seconds <= 300.0);
    all_pass = all_pass && ok;
    std::printf("[%s] criterion 10: verify-all exit %d in %.2fs (budget 300s)\n",
                ok ? "PASS" : "FAIL", cli_exit, cli_seconds);
  } else {
    all_pass = false;
    std::printf("[FAIL] criterion 10: NIELSENKIT_CLI not set; cannot launch the CLI\n");
  }

  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}

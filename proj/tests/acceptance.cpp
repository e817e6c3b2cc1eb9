// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <cstdio>

#include "ym/suite.hpp"

int main() {
  ym::SuiteConfig cfg{7, 2, false};
  auto reports = ym::run_all(cfg);
  std::fputs(ym::report_text(reports).c_str(), stdout);
  int failures = 0;
  for (const auto& r : reports)
    if (!r.pass) ++failures;
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

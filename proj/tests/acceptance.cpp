// Acceptance run: one PASS/FAIL line per criterion, full ranges.
// Exit status 0 only if all ten pass.

#include <cstdio>

#include "hyperell/checks.hpp"

int main() {
  const auto results = hyperell::run_checks(hyperell::CheckLevel::full);
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::printf("%s %zu. %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL", i + 1, r.name.c_str(), r.seconds,
                r.passed ? "" : ": ", r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed), results.size());
  return failed == 0 ? 0 : 1;
}

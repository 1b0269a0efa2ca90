#include <gtest/gtest.h>

#include "hyperell/checks.hpp"

using namespace hyperell;

TEST(Checks, QuickSuitePasses) {
  const auto results = run_checks(CheckLevel::quick);
  ASSERT_EQ(results.size(), 10u);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

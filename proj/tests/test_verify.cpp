// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "stemsize/verify.hpp"

using namespace stemsize;

namespace {

std::string text_of(const VerifyReport& r) {
  std::ostringstream os;
  r.write(os);
  return os.str();
}

}  // namespace

TEST(Verify, SeriesSuitePasses) {
  const auto r = run_verify("series");
  EXPECT_TRUE(r.ok()) << text_of(r);
  EXPECT_GT(r.checks.size(), 5u);
}

TEST(Verify, Deterministic) {
  EXPECT_EQ(text_of(run_verify("algebra", 7)), text_of(run_verify("algebra", 7)));
}

TEST(Verify, StreamsAreIndependent) {
  detail::Rng a(1, "x");
  detail::Rng b(1, "y");
  detail::Rng c(1, "x");
  bool differ = false;
  for (int i = 0; i < 8; ++i) {
    const auto va = a.range(0, 1'000'000);
    EXPECT_EQ(va, c.range(0, 1'000'000));
    differ = differ || va != b.range(0, 1'000'000);
  }
  EXPECT_TRUE(differ);
}

TEST(Verify, ReportFormat) {
  VerifyReport r;
  r.checks.push_back({"s", "a", true, ""});
  r.checks.push_back({"s", "b", false, "why"});
  r.notes.push_back("s.n observed");
  EXPECT_EQ(text_of(r), "PASS s.a\nFAIL s.b  why\nNOTE s.n observed\npassed 1 of 2\n");
  EXPECT_FALSE(r.ok());
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_verify("nope"), validation_error);
}

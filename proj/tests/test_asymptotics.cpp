// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "stemsize/asymptotics.hpp"

using namespace stemsize;

TEST(Constants, Values) {
  const auto c = constants(2);
  const double l2 = std::log(2.0) * std::log(2.0);
  EXPECT_NEAR(c.k1 * l2, 2.0 / 75.0, 1e-15);
  EXPECT_NEAR(c.k3, 0.3468948, 1e-7);
  EXPECT_LT(c.k1, c.k2);
  EXPECT_LT(c.k2, c.k3);
  EXPECT_NEAR(constants(3).k3 * std::log(3.0) * std::log(3.0), 1.0 / 6.0, 1e-15);
  EXPECT_THROW(constants(1), validation_error);
}

TEST(Profile, ConstantSpecIsZero) {
  const std::vector<std::int64_t> pts{4, 16};
  const auto prof = ratio_profile(parse_spec("p = 2\n"), 3, pts);
  ASSERT_EQ(prof.rows.size(), 2u);
  EXPECT_DOUBLE_EQ(prof.rows[1].ratio, 0.0);
}

TEST(Profile, SingleGenerator) {
  // one generator in degree 1: cumrank(n) = n + 1.
  const std::vector<std::int64_t> pts{8, 100};
  const auto prof = ratio_profile(parse_spec("p = 2\ngen poly deg = 1\n"), 2, pts);
  EXPECT_NEAR(prof.rows[0].log_rank, std::log(9.0), 1e-12);
  EXPECT_NEAR(prof.rows[1].ratio, std::log(101.0) / std::pow(std::log(100.0), 2), 1e-12);
  std::ostringstream os;
  write_csv(os, prof);
  EXPECT_EQ(os.str().substr(0, 28), "n,log_rank,log_n_pow_k,ratio");
  const auto j = to_json(prof);
  EXPECT_EQ(j["exponent"], 2);
  EXPECT_EQ(j["rows"][1]["n"], 100);
}

TEST(Profile, RejectsBadPoints) {
  const auto spec = parse_spec("p = 2\n");
  const std::vector<std::int64_t> desc{8, 4};
  const std::vector<std::int64_t> small{1};
  const std::vector<std::int64_t> ok{4};
  EXPECT_THROW(ratio_profile(spec, 3, desc), validation_error);
  EXPECT_THROW(ratio_profile(spec, 3, small), validation_error);
  EXPECT_THROW(ratio_profile(spec, 4, ok), validation_error);
  EXPECT_THROW(ratio_profile(spec, 3, std::vector<std::int64_t>{}), validation_error);
}

TEST(Bracket, MayModelExamples) {
  const auto m2 = bracketing_check(2, 2, BracketModel::may_model);
  EXPECT_TRUE(m2.ok);
  ASSERT_EQ(m2.details.size(), 2u);
  EXPECT_EQ(m2.details[0].lhs, "2");
  EXPECT_EQ(m2.details[0].rhs, "2");

  const auto m4 = bracketing_check(2, 4, BracketModel::may_model, {.lower = false});
  ASSERT_EQ(m4.details.size(), 1u);
  EXPECT_EQ(m4.details[0].lhs, "64");
  EXPECT_EQ(m4.details[0].rhs, "1024");
}

TEST(Bracket, LowerSkipAndGuard) {
  const BracketOptions tight{.max_truncation = 100};
  const auto r = bracketing_check(2, 5, BracketModel::may_model, tight);
  EXPECT_TRUE(r.ok);
  ASSERT_EQ(r.details.size(), 2u);
  EXPECT_TRUE(r.details[1].skipped);
  EXPECT_THROW(bracketing_check(2, 5, BracketModel::may_model,
                                {.upper = false, .max_truncation = 100}),
               resource_error);
  EXPECT_THROW(bracketing_check(2, 8, BracketModel::may_model, tight), resource_error);
  EXPECT_THROW(bracketing_check(2, 0, BracketModel::may_model), validation_error);
}

TEST(Bracket, PartitionModels) {
  EXPECT_TRUE(bracketing_check(2, 5, BracketModel::r_h_e2).ok);
  EXPECT_TRUE(bracketing_check(3, 3, BracketModel::r_h_e2).ok);
  EXPECT_TRUE(bracketing_check(2, 8, BracketModel::r_h_einf).ok);
  EXPECT_TRUE(bracketing_check(3, 4, BracketModel::r_h_einf).ok);
}

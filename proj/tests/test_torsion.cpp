// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "stemsize/torsion.hpp"

using namespace stemsize;

TEST(AnE2, Exponents) {
  EXPECT_FALSE(an_e2_exponent(2, 0).has_value());
  EXPECT_EQ(an_e2_exponent(2, 1), 1);
  EXPECT_EQ(an_e2_exponent(2, 4), 4);
  EXPECT_EQ(an_e2_exponent(3, 1), 0);
  EXPECT_EQ(an_e2_exponent(3, 6), 2);
  EXPECT_EQ(an_e2_exponent(5, 4), 1);
}

TEST(Counting, FrozenValues) {
  const auto a = counting_lemma(2, 0, 8);
  EXPECT_EQ(a.exact, 15);
  EXPECT_DOUBLE_EQ(a.bound, 19.0);
  const auto b = counting_lemma(3, 5, 27);
  EXPECT_EQ(b.exact, 34);
  EXPECT_NEAR(b.bound, 36.0, 1e-12);
  EXPECT_THROW(counting_lemma(2, 3, 3), validation_error);
}

TEST(Stable, LinearCurve) {
  const auto r = stable_torsion_bound(2, 16, VanishingCurve::linear());
  EXPECT_EQ(r.g, 16);
  // by hand: i = 9..16 of 1 + v_2(i) + [i even]
  std::int64_t s = 0;
  for (std::int64_t i = 9; i <= 16; ++i) {
    int v = 0;
    for (std::int64_t x = i; x % 2 == 0; x /= 2) ++v;
    s += 1 + v + (i % 2 == 0);
  }
  EXPECT_EQ(r.exact_sum, s);
  EXPECT_EQ(r.exact_sum, 20);
  EXPECT_DOUBLE_EQ(r.closed_form, 26.0);
  EXPECT_EQ(r.curve, "linear");

  const auto t = stable_torsion_bound(3, 48, VanishingCurve::linear());
  EXPECT_EQ(t.exact_sum, 17);
  EXPECT_NEAR(t.closed_form, 22.52371901428583, 1e-12);
}

TEST(Stable, SqrtCurve) {
  const auto a = stable_torsion_bound(5, 100, VanishingCurve::sqrt());
  EXPECT_EQ(a.g, 10);
  EXPECT_EQ(a.exact_sum, 1);
  EXPECT_NEAR(a.closed_form, 5.423853116146787, 1e-12);
  const auto b = stable_torsion_bound(2, 100, VanishingCurve::sqrt());
  EXPECT_EQ(b.exact_sum, 10);
  EXPECT_NEAR(b.closed_form, 21.143856189774723, 1e-12);
  EXPECT_EQ(b.curve, "power_law(exponent=0.5,coefficient=1)");
}

TEST(Curves, Models) {
  const auto sq = VanishingCurve::sqrt();
  EXPECT_EQ(sq(16), 4);
  EXPECT_EQ(sq(17), 5);
  EXPECT_EQ(sq(1), 1);
  EXPECT_THROW(sq(0), validation_error);
  EXPECT_THROW(VanishingCurve::power_law(1.5, 1.0), validation_error);
  EXPECT_THROW(VanishingCurve::power_law(0.5, 0.0), validation_error);
  // coefficient 3 overshoots n at small n
  EXPECT_THROW(VanishingCurve::power_law(0.5, 3.0)(2), validation_error);

  std::istringstream in("1\n2\n\n2\n3\n");
  const auto tab = VanishingCurve::read_table(in);
  EXPECT_EQ(tab(3), 2);
  EXPECT_EQ(tab(4), 3);
  EXPECT_THROW(tab(5), validation_error);
  EXPECT_EQ(tab.describe(), "table(4 values)");
  EXPECT_THROW(VanishingCurve::table({2, 1}), validation_error);
  EXPECT_THROW(VanishingCurve::table({2})(1), validation_error);
  std::istringstream bad("1\nx\n");
  EXPECT_THROW(VanishingCurve::read_table(bad), validation_error);
}

TEST(ImJ, Values) {
  EXPECT_EQ(im_j_lower(3, 3), 1);
  EXPECT_EQ(im_j_lower(3, 11), 2);
  EXPECT_EQ(im_j_lower(3, 5), 0);
  EXPECT_EQ(im_j_lower(5, 39), 2);
  EXPECT_THROW(im_j_lower(2, 7), validation_error);
}

TEST(Integral, FrozenDefaultModel) {
  EXPECT_NEAR(integral_log_bound(5), 83.44388423978751, 1e-9);
  const auto one = [](std::int64_t, std::int64_t) { return bigint(1); };
  // primes 2, 3, 5, 7: 10 * ln(210)
  EXPECT_NEAR(integral_log_bound(10, one), 10.0 * std::log(210.0), 1e-9);
}

TEST(Unstable, Barratt) {
  EXPECT_EQ(barratt_bound(1, 1, 8, 2, false), 3);
  EXPECT_EQ(barratt_bound(1, 1, 1, 2, false), 0);
  EXPECT_EQ(barratt_bound(1, 1, 8, 2, true), 3);
  EXPECT_EQ(barratt_bound(2, 3, 6, 3, true), 3);
  EXPECT_THROW(barratt_bound(0, 1, 1, 2, false), validation_error);
}

TEST(Unstable, GoodwillieAndNorm) {
  const auto g = goodwillie_bound(1, 1, 4, 2);
  EXPECT_EQ(g.exact, 4);
  EXPECT_DOUBLE_EQ(g.linear, 8.0);
  EXPECT_EQ(goodwillie_bound(3, 2, 30, 3).exact, 22);
  EXPECT_EQ(goodwillie_bound(5, 1, 5, 2).exact, 0);
  EXPECT_EQ(norm_torsion_order(3, 2, 9), 4);
  EXPECT_EQ(norm_torsion_order(2, 1, 6), 2);
}

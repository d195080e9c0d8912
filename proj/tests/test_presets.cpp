// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include <gtest/gtest.h>

#include "stemsize/presets.hpp"

using namespace stemsize;

namespace {

std::vector<std::int64_t> degrees(const PresetId& id, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& g : instantiate(preset(id), n)) {
    for (std::int64_t k = 0; k < g.multiplicity; ++k) out.push_back(g.degree);
  }
  return out;
}

}  // namespace

TEST(Presets, Names) {
  for (auto n : kAllPresets) EXPECT_EQ(preset_from_string(to_string(n)), n);
  EXPECT_THROW(preset_from_string("nope"), validation_error);
}

TEST(Presets, DualSteenrod) {
  EXPECT_EQ(hilbert(preset({.name = PresetName::dual_steenrod, .p = 2}), 7),
            (TruncatedSeries{1, 1, 1, 2, 2, 2, 3, 4}));
  // p = 3: tau_0 (1), xi_1 (4), tau_1 (5), xi_2 (16), tau_2 (17)
  EXPECT_EQ(degrees({.name = PresetName::dual_steenrod, .p = 3}, 20),
            (std::vector<std::int64_t>{1, 4, 5, 16, 17}));
}

TEST(Presets, DslExport) {
  EXPECT_EQ(print_spec(preset({.name = PresetName::dual_steenrod, .p = 2})),
            "# dual_steenrod p=2\np = 2\ngen poly deg = 2^n - 1 for n = 1..inf\n");
  EXPECT_EQ(print_spec(preset({.name = PresetName::r_h_einf, .p = 2, .h = 3})),
            "# r_h_einf p=2 h=3\np = 2\ngen poly deg = p^(3 + k) mult = k for k = 1..2\n");
}

TEST(Presets, Validation) {
  EXPECT_THROW(preset({.name = PresetName::may_e1, .p = 2}), validation_error);
  EXPECT_THROW(preset({.name = PresetName::q_poly, .p = 3}), validation_error);
  EXPECT_THROW(preset({.name = PresetName::may_e1, .p = 2, .drop_q0 = true, .simplify_odd = true}),
               validation_error);
  EXPECT_THROW(preset({.name = PresetName::dual_steenrod, .p = 3, .simplify_odd = true}),
               validation_error);
  EXPECT_THROW(preset({.name = PresetName::r_h_e2, .p = 2}), validation_error);
  EXPECT_THROW(preset({.name = PresetName::r_h_e2, .p = 2, .h = 0}), validation_error);
  EXPECT_THROW(preset({.name = PresetName::dual_steenrod, .p = 9}), validation_error);
  EXPECT_NO_THROW(preset({.name = PresetName::s_k, .p = 2, .h = 0}));
}

TEST(Presets, MayModelAndPartitionModels) {
  // n generators in degree 2^n: 1 at 2, 2 at 4, 3 at 8.
  EXPECT_EQ(degrees({.name = PresetName::may_model, .p = 2}, 15),
            (std::vector<std::int64_t>{2, 4, 4, 8, 8, 8}));
  EXPECT_EQ(hilbert_cumulative(preset({.name = PresetName::may_model, .p = 2}), 15)[15], 64);
  EXPECT_EQ(degrees({.name = PresetName::s_k, .p = 3, .h = 1}, 100),
            (std::vector<std::int64_t>{3, 9, 27, 81}));
  // min(h, n - h + 1) generators in degree p^n, h = 3: 1, 2, 3, 3, ...
  EXPECT_EQ(degrees({.name = PresetName::r_h_e2, .p = 2, .h = 3}, 64),
            (std::vector<std::int64_t>{8, 16, 16, 32, 32, 32, 64, 64, 64}));
  EXPECT_EQ(degrees({.name = PresetName::r_h_einf, .p = 2, .h = 3}, 1000),
            (std::vector<std::int64_t>{16, 32, 32}));
  EXPECT_TRUE(degrees({.name = PresetName::r_h_einf, .p = 2, .h = 1}, 1000).empty());
}

TEST(Presets, HeightModels) {
  // y(1) lifted, p = 2: 12*2^(1+i) - 10*2^i - 6 for i >= 2.
  EXPECT_EQ(degrees({.name = PresetName::y_h_lifted, .p = 2, .h = 1}, 400),
            (std::vector<std::int64_t>{50, 106, 218}));
  // mrs model, p = 3, h = 1: q_2 at 16, h_{2,0} at 15, b_{2,0} at 46.
  EXPECT_EQ(degrees({.name = PresetName::mrs_e2_model, .p = 3, .h = 1}, 50),
            (std::vector<std::int64_t>{15, 16, 46}));
  // yn_conj, p = 2, h = 2: v_2, v_3, v_4 at 6, 14, 30 and one class at 12*2^4.
  EXPECT_EQ(degrees({.name = PresetName::yn_conj, .p = 2, .h = 2}, 200),
            (std::vector<std::int64_t>{6, 14, 30, 192}));
  EXPECT_EQ(degrees({.name = PresetName::q_poly, .p = 2, .drop_q0 = true}, 40),
            (std::vector<std::int64_t>{2, 6, 14, 30}));
}

TEST(Presets, SimplifyOddAtThree) {
  EXPECT_EQ(degrees({.name = PresetName::may_e1, .p = 3, .drop_q0 = true, .simplify_odd = true}, 20),
            (std::vector<std::int64_t>{3, 4, 11, 15, 16}));
}

TEST(MaxOverH, Examples) {
  // Cumulative ranks at N = 16 by h (independent count): 36, 16, 5, 2, 1.
  const auto mx = max_over_h(PresetName::r_h_e2, 2, 16);
  EXPECT_EQ(mx.series, (TruncatedSeries{1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14, 14, 20, 20, 26, 26, 36}));
  EXPECT_EQ(mx.argmax, std::vector<std::int64_t>(17, 1));
  EXPECT_EQ(max_h_for(2, 16), 5);
  const auto e = max_over_h(PresetName::r_h_einf, 2, 7);
  EXPECT_EQ(e.series, TruncatedSeries::ones(7));
  EXPECT_THROW(max_over_h(PresetName::may_model, 2, 7), validation_error);
}

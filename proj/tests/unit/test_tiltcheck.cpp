/*
 *   Copyright 2026 The tiltlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tiltlab/modrep/transpose.hpp"
#include "tiltlab/tiltcheck/tiltcheck.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

namespace {

template <class S>
class TiltcheckTyped : public ::testing::Test {};

using Scalars = ::testing::Types<Fp, Rational>;
TYPED_TEST_SUITE(TiltcheckTyped, Scalars);

constexpr Index kBound = 30;

template <class S>
Rep<S> c_module(const AlgebraPtr<S>& a3) {
  return direct_sum<S>({projective(a3, 0), projective(a3, 2), simple(a3, 2)}).module;
}

/// Indecomposable-ish building blocks: simples, projectives, injectives and
/// their AR translates.
template <class S>
std::vector<Rep<S>> catalog_blocks(const AlgebraPtr<S>& a) {
  std::vector<Rep<S>> out;
  for (int v = 0; v < a->num_vertices(); ++v) {
    for (const Rep<S>& m : {simple(a, v), projective(a, v), injective(a, v)}) {
      out.push_back(m);
      const Rep<S> tau = ar_translate(m);
      if (!tau.is_zero()) out.push_back(tau);
      const Rep<S> tau_inv = ar_translate_inverse(m);
      if (!tau_inv.is_zero()) out.push_back(tau_inv);
    }
  }
  return out;
}

template <class S>
Rep<S> random_sum(const std::vector<Rep<S>>& blocks, Rng& rng, int max_parts) {
  std::vector<Rep<S>> parts;
  const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_parts));
  for (int i = 0; i < count; ++i) parts.push_back(blocks[rng() % blocks.size()]);
  return direct_sum(parts).module;
}

}  // namespace

TYPED_TEST(TiltcheckTyped, CoresolutionExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const Rep<S> c = c_module(a3);
  const Rep<S> r = regular_module(a3);

  const auto inside = add_coresolution(projective(a3, 2), c, 3);
  EXPECT_TRUE(inside.success);
  EXPECT_EQ(inside.length, 0);
  const auto reg = add_coresolution(r, c, 3);
  EXPECT_TRUE(reg.success);
  EXPECT_LE(reg.length, 1);
  EXPECT_EQ(reg.outcome, Outcome::verified);
  for (const auto& term : reg.chain) EXPECT_TRUE(AddCategory<S>(c).contains(term));
  const auto bad = add_coresolution(r, simple(a3, 1), 3);
  EXPECT_FALSE(bad.success);
  EXPECT_EQ(bad.outcome, Outcome::refuted);

  const auto pre_inside = add_precover_resolution(c, simple(a3, 2), 3);
  EXPECT_TRUE(pre_inside.success);
  EXPECT_EQ(pre_inside.length, 0);
  const auto pre = add_precover_resolution(c, dual_regular(a3), 3);
  EXPECT_TRUE(pre.success);
  EXPECT_LE(pre.length, 1);
  const auto pre_bad = add_precover_resolution(projective(a3, 0), dual_regular(a3), 3);
  EXPECT_FALSE(pre_bad.success);
  EXPECT_EQ(pre_bad.outcome, Outcome::refuted);
}

TYPED_TEST(TiltcheckTyped, TiltingAndWakamatsuExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const Rep<S> c = c_module(a3);
  EXPECT_TRUE(check_tilting(regular_module(a3), 0, kBound).is_tilting());
  const auto tc = check_tilting(c, 1, kBound);
  EXPECT_TRUE(tc.is_tilting());
  EXPECT_EQ(tc.pd.value, 1);
  const auto ts = check_tilting(simple(a3, 2), 1, kBound);
  EXPECT_EQ(ts.outcome, Outcome::refuted);
  EXPECT_EQ(ts.coresolution.outcome, Outcome::refuted);
  // pd C = 1 exceeds n = 0.
  EXPECT_EQ(check_tilting(c, 0, kBound).outcome, Outcome::refuted);

  EXPECT_TRUE(check_wakamatsu(regular_module(a3), kBound).is_wakamatsu());
  const auto wc = check_wakamatsu(c, kBound);
  EXPECT_TRUE(wc.is_wakamatsu());
  EXPECT_EQ(wc.left_endomorphism_dim, 6);
  const auto ws = check_wakamatsu(direct_sum<S>({simple(a3, 0), simple(a3, 1)}).module, kBound);
  EXPECT_EQ(ws.outcome, Outcome::refuted);
  EXPECT_FALSE(ws.homothety_iso);
  EXPECT_THROW(check_wakamatsu(zero_rep(a3), kBound), ZeroModule);
}

TYPED_TEST(TiltcheckTyped, CotiltingExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const auto dr = check_cotilting(dual_regular(a3), kBound);
  EXPECT_TRUE(dr.is_cotilting());
  EXPECT_EQ(dr.id_right.value, 0);
  EXPECT_EQ(dr.over_dual_regular.length, 0);

  const auto cc = check_cotilting(c_module(a3), kBound);
  EXPECT_EQ(cc.variant_a, Outcome::verified);
  EXPECT_EQ(cc.variant_b, Outcome::verified);
  EXPECT_EQ(cc.variant_c, Outcome::verified);
  EXPECT_EQ(cc.variant_d, Outcome::verified);
  EXPECT_TRUE(cc.agreement);
  EXPECT_GT(cc.sample_size, 0);

  const auto p1 = check_cotilting(projective(a3, 0), kBound);
  EXPECT_FALSE(p1.is_cotilting());
  EXPECT_EQ(p1.variant_c, Outcome::refuted);
  EXPECT_EQ(p1.over_dual_regular.outcome, Outcome::refuted);
  EXPECT_TRUE(p1.agreement);
  EXPECT_THROW(check_cotilting(zero_rep(a3), kBound), ZeroModule);

  auto x2 = truncated_polynomial<S>(2);
  EXPECT_TRUE(check_cotilting(regular_module(x2), kBound).is_cotilting());
  const auto k = check_cotilting(simple(x2, 0), kBound);
  EXPECT_EQ(k.variant_a, Outcome::refuted);
  EXPECT_TRUE(k.agreement);
}

TYPED_TEST(TiltcheckTyped, TensorlyFaithfulExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  EXPECT_TRUE(check_tensorly_faithful(regular_bimodule(a3)).value);
  const auto c = check_tensorly_faithful(endo_algebra(c_module(a3)).bimodule);
  EXPECT_FALSE(c.value);
  EXPECT_FALSE(c.witness.empty());
  EXPECT_TRUE(check_tensorly_faithful(regular_bimodule(truncated_polynomial<S>(2))).value);
}

/// @brief N (x) T = 0 exactly when every simple in top(N) kills T.
template <class S>
void check_simple_reduction(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  int killed = 0;
  for (int it = 0; it < 10; ++it) {
    const auto a = random_algebra<S>(rng, f);
    const Rep<S> t = random_module(a, rng);
    if (t.is_zero()) continue;
    const EndoAlgebra<S> e = endo_algebra(t);
    for (int trial = 0; trial < 4; ++trial) {
      const Rep<S> n = random_module(e.algebra, rng);
      const bool zero = tensor_over(n, e.bimodule).module.is_zero();
      const Rep<S> top_n = top(n).module;
      bool all_kill = true;
      for (int v = 0; v < e.algebra->num_vertices(); ++v) {
        if (top_n.dims[v] > 0 && !tensor_over(simple(e.algebra, v), e.bimodule).module.is_zero()) all_kill = false;
      }
      ASSERT_EQ(zero, all_kill) << "iteration " << it;
      killed += zero && !n.is_zero();
    }
  }
  ::testing::Test::RecordProperty("killed", killed);
}

TEST(TiltcheckProperties, SimpleReductionF2) { check_simple_reduction<Fp>(kF2, 501); }
TEST(TiltcheckProperties, SimpleReductionQ) { check_simple_reduction<Rational>(kQ, 502); }

/// @brief On random sums of catalog modules the cotilting variants agree,
/// and the finite forms of the supporting lemmas hold for every cotilting
/// module found.
template <class S>
void check_cotilting_consistency(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  int cotilting = 0;
  for (int it = 0; it < 16; ++it) {
    const auto a = random_algebra<S>(rng, f);
    const auto blocks = catalog_blocks(a);
    const Rep<S> c = it % 4 == 0 ? dual_regular(a) : random_sum(blocks, rng, a->num_vertices() + 1);
    const auto r = check_cotilting(c, kBound);
    ASSERT_TRUE(r.agreement) << "iteration " << it;
    if (r.variant_a == Outcome::verified) ASSERT_EQ(r.variant_b, Outcome::verified) << "iteration " << it;
    if (!r.is_cotilting()) continue;
    ++cotilting;
    ASSERT_TRUE(r.id_left && r.id_left->certified_finite());
    ASSERT_LE(r.id_left->value, r.over_dual_regular.length);
    ASSERT_TRUE(r.wakamatsu.left_selforth && r.wakamatsu.left_selforth->certified_true());
    ASSERT_TRUE(r.wakamatsu.homothety_iso);
    const auto pre = add_precover_resolution(c, dual_regular(a), kBound);
    ASSERT_TRUE(pre.success);
    ASSERT_LE(pre.length, r.id_left->value);
  }
  EXPECT_GT(cotilting, 0);
}

TEST(TiltcheckProperties, CotiltingConsistencyF2) { check_cotilting_consistency<Fp>(kF2, 511); }
TEST(TiltcheckProperties, CotiltingConsistencyF3) { check_cotilting_consistency<Fp>(kF3, 512); }
TEST(TiltcheckProperties, CotiltingConsistencyQ) { check_cotilting_consistency<Rational>(kQ, 513); }

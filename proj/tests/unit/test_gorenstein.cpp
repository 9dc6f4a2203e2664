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
#include "tiltlab/gorenstein/gorenstein.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

namespace {

template <class S>
class GorensteinTyped : public ::testing::Test {};

using Scalars = ::testing::Types<Fp, Rational>;
TYPED_TEST_SUITE(GorensteinTyped, Scalars);

constexpr Index kBound = 30;

/// k<x, y>/(x, y)^2, which is not Gorenstein.
template <class S>
AlgebraPtr<S> radical_square_zero_two_loops(const FieldSpec& f = default_field<S>()) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {Arrow{"x", 0, 0}, Arrow{"y", 0, 0}};
  std::vector<Relation<S>> rels;
  for (const auto& p : {std::vector<int>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
    Relation<S> r;
    r.terms.emplace_back(scalar<S>(f, 1), Path{0, 0, p});
    rels.push_back(r);
  }
  return build_path_algebra<S>(q, rels, f);
}

/// Simples, projectives, injectives and a few syzygies and cosyzygies.
template <class S>
std::vector<Rep<S>> small_catalog(const AlgebraPtr<S>& a) {
  std::vector<Rep<S>> out;
  for (int v = 0; v < a->num_vertices(); ++v) {
    for (const Rep<S>& m : {simple(a, v), projective(a, v), injective(a, v)}) {
      out.push_back(m);
      for (Index d = 1; d <= 2; ++d) {
        const Rep<S> om = syzygy(m, d);
        if (!om.is_zero()) out.push_back(om);
        const Rep<S> co = cosyzygy(m, d);
        if (!co.is_zero()) out.push_back(co);
      }
    }
  }
  return out;
}

}  // namespace

TYPED_TEST(GorensteinTyped, DetectExamples) {
  using S = TypeParam;
  const auto a3 = detect_gorenstein(linear_algebra<S>(3), kBound);
  EXPECT_TRUE(a3.is_gorenstein);
  EXPECT_EQ(a3.right_selfinj_dim.str(), "1");
  EXPECT_EQ(a3.left_selfinj_dim.str(), "1");
  const auto x2 = detect_gorenstein(truncated_polynomial<S>(2), kBound);
  EXPECT_TRUE(x2.is_gorenstein);
  EXPECT_EQ(x2.dimension(), 0);
  const auto gamma = detect_gorenstein(gamma_a2<S>(), kBound);
  EXPECT_TRUE(gamma.is_gorenstein);
  EXPECT_TRUE(gamma.right_selfinj_dim.certified_finite());
  EXPECT_TRUE(gamma.left_selfinj_dim.certified_finite());
  EXPECT_EQ(gamma.dimension(), 1);

  const auto loops = detect_gorenstein(radical_square_zero_two_loops<S>(), 4);
  EXPECT_FALSE(loops.is_gorenstein);
  EXPECT_EQ(loops.right_selfinj_dim.str(), "AtLeast(4)");
}

TYPED_TEST(GorensteinTyped, GorensteinProjectiveExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const auto pa3 = detect_gorenstein(a3, kBound);
  for (int v = 0; v < 3; ++v) EXPECT_TRUE(is_gorenstein_projective(projective(a3, v), pa3, kBound).certified_true());
  const Verdict s2 = is_gorenstein_projective(simple(a3, 1), pa3, kBound);
  EXPECT_TRUE(s2.certified_false());
  EXPECT_EQ(s2.witness, "Ext^1(M, A) != 0");

  auto x2 = truncated_polynomial<S>(2);
  const auto px2 = detect_gorenstein(x2, kBound);
  EXPECT_TRUE(is_gorenstein_projective(simple(x2, 0), px2, kBound).certified_true());
  const auto tail = gp_right_tail(simple(x2, 0), 4);
  EXPECT_EQ(tail.chain.size(), 5u);
  for (const auto& t : tail.chain) EXPECT_EQ(t.dims, std::vector<Index>{2});

  auto loops = radical_square_zero_two_loops<S>();
  const auto pl = detect_gorenstein(loops, 4);
  EXPECT_TRUE(is_gorenstein_projective(simple(loops, 0), pl, 4).certified_false());
  EXPECT_TRUE(is_gorenstein_projective(regular_module(loops), pl, 4).certified_true());
}

TYPED_TEST(GorensteinTyped, DimensionExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(gpd(projective(a3, v), kBound).str(), "0");
    EXPECT_EQ(gid(injective(a3, v), kBound).str(), "0");
  }
  const DimResult s3 = gpd(simple(a3, 2), kBound);
  EXPECT_TRUE(s3.certified_finite());
  EXPECT_EQ(s3.value, 1);
  EXPECT_EQ(s3.value, proj_dim(simple(a3, 2), kBound).value);

  auto x2 = truncated_polynomial<S>(2);
  const auto px2 = detect_gorenstein(x2, kBound);
  for (const Rep<S>& m : {simple(x2, 0), regular_module(x2), power(simple(x2, 0), 2)}) {
    const DimResult g = gpd(m, px2, kBound);
    EXPECT_TRUE(g.certified_finite());
    EXPECT_EQ(g.value, 0);
    EXPECT_EQ(gfd(m, px2, kBound).value, 0);
  }
  const DimResult bounded = gpd(simple(radical_square_zero_two_loops<S>(), 0), 3);
  EXPECT_FALSE(bounded.finite);
  EXPECT_EQ(bounded.str(), "AtLeast(3)");
}

/// @brief Gpd against pd, the Gorenstein bound, and gid computed two ways.
template <class S>
void check_gorenstein_dimensions(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<AlgebraPtr<S>> algebras = {gamma_a2<S>(f), truncated_polynomial<S>(3, f)};
  for (int i = 0; i < 4; ++i) algebras.push_back(random_algebra<S>(rng, f));
  for (const auto& a : algebras) {
    const Index bound = default_bound(*a);
    const auto profile = detect_gorenstein(a, bound);
    ASSERT_TRUE(profile.is_gorenstein);
    auto modules = small_catalog(a);
    for (int i = 0; i < 4; ++i) modules.push_back(random_module(a, rng));
    for (const auto& m : modules) {
      const DimResult g = gpd(m, profile, bound);
      ASSERT_TRUE(g.certified_finite());
      ASSERT_LE(g.value, profile.dimension());
      const DimResult p = proj_dim(m, bound);
      if (p.certified_finite()) ASSERT_EQ(g.value, p.value);
      const DimResult gi = gid(m, profile, bound);
      ASSERT_EQ(gi.str(), gid_direct(m, profile, bound).str());
      ASSERT_EQ(gi.status, gid_direct(m, profile, bound).status);
    }
  }
}

TEST(GorensteinProperties, DimensionsF2) { check_gorenstein_dimensions<Fp>(kF2, 601); }
TEST(GorensteinProperties, DimensionsF3) { check_gorenstein_dimensions<Fp>(kF3, 602); }
TEST(GorensteinProperties, DimensionsQ) { check_gorenstein_dimensions<Rational>(kQ, 603); }

/// @brief Gorenstein projectives are closed under extensions and kernels of
/// epimorphisms, checked on 0 -> K -> X -> X/K -> 0.
template <class S>
void check_resolving(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<AlgebraPtr<S>> algebras = {gamma_a2<S>(f), truncated_polynomial<S>(2, f), linear_algebra<S>(3, f)};
  int nontrivial = 0;
  for (const auto& a : algebras) {
    const Index bound = default_bound(*a);
    const auto profile = detect_gorenstein(a, bound);
    for (int it = 0; it < 12; ++it) {
      const Rep<S> x = random_module(a, rng);
      if (x.is_zero()) continue;
      int v = static_cast<int>(rng() % a->num_vertices());
      while (x.dims[v] == 0) v = (v + 1) % a->num_vertices();
      Vec<S> g(x.dims[v]);
      for (Index j = 0; j < g.size(); ++j) g(j) = ScalarTraits<S>::random(f, rng);
      const auto span = generated_span(x, {Element<S>{v, g}});
      const Rep<S> k = submodule(x, span).module;
      const Rep<S> y = quotient(x, span).module;
      const bool gk = is_gorenstein_projective(k, profile, bound).certified_true();
      const bool gx = is_gorenstein_projective(x, profile, bound).certified_true();
      const bool gy = is_gorenstein_projective(y, profile, bound).certified_true();
      if (gx && gy) ASSERT_TRUE(gk);
      if (gk && gy) ASSERT_TRUE(gx);
      nontrivial += gx && gy;
    }
  }
  EXPECT_GT(nontrivial, 0);
}

TEST(GorensteinProperties, ResolvingF2) { check_resolving<Fp>(kF2, 611); }
TEST(GorensteinProperties, ResolvingQ) { check_resolving<Rational>(kQ, 612); }

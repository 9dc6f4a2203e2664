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
#include "tiltlab/modrep/bimodule.hpp"
#include "tiltlab/modrep/transpose.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

namespace {

using Dims = std::vector<Index>;

template <class S>
class BimoduleTyped : public ::testing::Test {};

using Scalars = ::testing::Types<Fp, Rational>;
TYPED_TEST_SUITE(BimoduleTyped, Scalars);

template <class S>
Rep<S> c_module(const AlgebraPtr<S>& a3) {
  return direct_sum<S>({projective(a3, 0), projective(a3, 2), simple(a3, 2)}).module;
}

TYPED_TEST(BimoduleTyped, EndomorphismAlgebras) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  // Hom-sum oracle: sum over i, j of dim Hom(P(i), P(j)).
  Index expected = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) expected += hom_dim(projective(a3, i), projective(a3, j));
  }
  const EndoAlgebra<S> reg = endo_algebra(regular_module(a3));
  EXPECT_EQ(reg.algebra->dim(), expected);
  EXPECT_EQ(reg.algebra->dim(), 6);
  EXPECT_TRUE(reg.algebra->is_associative());
  EXPECT_TRUE(reg.algebra->idempotents_ok());
  validate_bimodule(reg.bimodule);

  const EndoAlgebra<S> two = endo_algebra(direct_sum<S>({simple(a3, 0), simple(a3, 1)}).module);
  EXPECT_EQ(two.algebra->dim(), 2);
  EXPECT_EQ(two.algebra->num_vertices(), 2);
  EXPECT_TRUE(two.algebra->is_commutative());
  EXPECT_EQ(endo_algebra(simple(a3, 1)).algebra->dim(), 1);
  EXPECT_THROW(endo_algebra(zero_rep(a3)), ZeroModule);

  const EndoAlgebra<S> rep = endo_algebra(power(simple(a3, 0), 2));
  EXPECT_EQ(rep.algebra->dim(), 4);
  EXPECT_EQ(rep.algebra->class_representatives().size(), 1u);
  EXPECT_TRUE(rep.algebra->is_associative());
  EXPECT_EQ(simple(rep.algebra, 0).dims, (Dims{1, 1}));
  validate_bimodule(rep.bimodule);
}

TYPED_TEST(BimoduleTyped, TensorAndHomExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const EndoAlgebra<S> e = endo_algebra(c_module(a3));
  const Bimodule<S>& t = e.bimodule;
  validate_bimodule(t);
  const AlgebraPtr<S>& s = e.algebra;

  EXPECT_TRUE(isomorphic(tensor_over(regular_module(s), t).module, t.right));
  EXPECT_TRUE(tensor_over(zero_rep(s), t).module.is_zero());
  for (int v = 0; v < s->num_vertices(); ++v) {
    // e_v S (x) T = e_v T, the image of the idempotent.
    const Rep<S> ev_t = submodule(t.right, hom_from_total(t.right, t.right, t.left_total[s->idempotent(v)]).blocks).module;
    EXPECT_TRUE(isomorphic(tensor_over(projective(s, v), t).module, ev_t));
  }
  EXPECT_TRUE(isomorphic(hom_module(t, t.right).module(), regular_module(s)));
  EXPECT_TRUE(hom_module(t, zero_rep(a3)).module().is_zero());
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(hom_module(t, injective(a3, i)).module().total_dim(), hom_dim(t.right, injective(a3, i)));
  }

  EXPECT_TRUE(theta_map(regular_module(s), t).is_isomorphism);
  EXPECT_TRUE(nu_map(t.right, t).is_isomorphism);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(nu_map(injective(a3, i), t).is_isomorphism);

  const Bimodule<S> fl = flip(t);
  validate_bimodule(fl);
  EXPECT_EQ(fl.left, a3->opposite());
  EXPECT_EQ(fl.right.algebra, s->opposite());
  EXPECT_EQ(dual_left(t).algebra, s);
  EXPECT_EQ(dual_left(t).total_dim(), t.right.total_dim());
}

TYPED_TEST(BimoduleTyped, RegularBimodule) {
  using S = TypeParam;
  for (auto a : {linear_algebra<S>(3), truncated_polynomial<S>(2), gamma_a2<S>()}) {
    const Bimodule<S> r = regular_bimodule(a);
    validate_bimodule(r);
    validate_bimodule(flip(r));
    EXPECT_TRUE(isomorphic(tensor_over(simple(a, 0), r).module, simple(a, 0)));
    EXPECT_TRUE(theta_map(simple(a, 0), r).is_isomorphism);
    EXPECT_TRUE(nu_map(dual_regular(a), r).is_isomorphism);
  }
}

/// @brief Tensor-Hom adjunction dimensions on random modules.
template <class S>
void check_adjunction(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 6; ++trial) {
    auto r = random_algebra<S>(rng, f);
    const Rep<S> tm = direct_sum<S>({random_module(r, rng), random_module(r, rng)}).module;
    if (tm.is_zero()) continue;
    const EndoAlgebra<S> e = endo_algebra(tm, seed);
    validate_bimodule(e.bimodule);
    for (int k = 0; k < 3; ++k) {
      const Rep<S> n = random_module(e.algebra, rng);
      const Rep<S> m = random_module(r, rng);
      EXPECT_EQ(hom_dim(tensor_over(n, e.bimodule).module, m), hom_dim(n, hom_module(e.bimodule, m).module()));
    }
  }
}

TEST(BimoduleProperties, AdjunctionOverF2) { check_adjunction<Fp>(kF2, 301); }
TEST(BimoduleProperties, AdjunctionOverF3) { check_adjunction<Fp>(kF3, 302); }
TEST(BimoduleProperties, AdjunctionOverQ) { check_adjunction<Rational>(kQ, 303); }

TYPED_TEST(BimoduleTyped, TransposeOnA3) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(transpose(projective(a3, i)).is_zero());
  const Rep<S> tau = ar_translate(simple(a3, 2));
  EXPECT_FALSE(tau.is_zero());
  EXPECT_EQ(tau.algebra, a3);
  // Non-projective indecomposables: S(2), I(2), S(3).
  for (const Rep<S>& m : {simple(a3, 1), injective(a3, 1), simple(a3, 2)}) {
    const Rep<S> tt = transpose(transpose(m));
    EXPECT_EQ(tt.algebra, a3);
    EXPECT_TRUE(isomorphic(tt, m));
    EXPECT_TRUE(isomorphic(ar_translate_inverse(ar_translate(m)), m));
  }
  // tau S(3) = S(2) on the linear quiver with this orientation.
  EXPECT_TRUE(isomorphic(tau, simple(a3, 1)));
}

TYPED_TEST(BimoduleTyped, LiftToPathAlgebra) {
  using S = TypeParam;
  const Quiver q = linear_quiver(3);
  auto point = point_algebra<S>();
  auto kq = build_tensor_algebra<S>(*point, q);
  const Rep<S> lifted = lift_to_path_algebra(kq, regular_module(point), q);
  EXPECT_TRUE(isomorphic(lifted, regular_module(kq)));

  auto base = truncated_polynomial<S>(2);
  auto rq = build_tensor_algebra<S>(*base, q);
  const Rep<S> lifted2 = lift_to_path_algebra(rq, regular_module(base), q);
  EXPECT_EQ(lifted2.total_dim(), rq->dim());
  EXPECT_TRUE(isomorphic(lifted2, regular_module(rq)));
}

}  // namespace

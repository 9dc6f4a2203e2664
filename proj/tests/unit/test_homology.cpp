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
#include "tiltlab/homology/homology.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

namespace {

using Dims = std::vector<Index>;

template <class S>
class HomologyTyped : public ::testing::Test {};

using Scalars = ::testing::Types<Fp, Rational>;
TYPED_TEST_SUITE(HomologyTyped, Scalars);

/// Non-minimal free resolution: every Hom(P(v), M) basis map is a generator.
template <class S>
struct NaiveResolution {
  std::vector<Rep<S>> terms;
  /// maps[0]: P_0 -> M, maps[i]: P_i -> P_{i-1}.
  std::vector<Hom<S>> maps;
};

template <class S>
NaiveResolution<S> naive_resolution(const Rep<S>& m, int length) {
  NaiveResolution<S> r;
  Rep<S> current = m;
  Hom<S> inclusion;
  for (int i = 0; i <= length; ++i) {
    std::vector<Rep<S>> parts;
    std::vector<Hom<S>> gens;
    for (int v = 0; v < m.alg().num_vertices(); ++v) {
      const Rep<S> p = projective(m.algebra, v);
      for (const Hom<S>& g : hom_space(p, current).basis) {
        parts.push_back(p);
        gens.push_back(g);
      }
    }
    if (parts.empty()) parts.push_back(zero_rep(m.algebra));
    const DirectSum<S> sum = direct_sum(parts);
    Hom<S> cover = zero_hom(sum.module, current);
    for (std::size_t j = 0; j < gens.size(); ++j) cover = cover + compose(gens[j], sum.projections[j]);
    r.maps.push_back(i == 0 ? cover : compose(inclusion, cover));
    r.terms.push_back(sum.module);
    const Sub<S> k = kernel(sum.module, current, cover);
    current = k.module;
    inclusion = k.inclusion;
  }
  return r;
}

/// Rank of f -> f o d from Hom(b, n) to Hom(a, n) for d: a -> b.
template <class S>
Index pullback_rank(const Rep<S>& a, const Rep<S>& b, const Hom<S>& d, const Rep<S>& n) {
  const HomSpace<S> from = hom_space(b, n);
  const HomSpace<S> to = hom_space(a, n);
  if (from.dim() == 0 || to.dim() == 0) return 0;
  Mat<S> m = zeros<S>(to.dim(), from.dim());
  for (Index j = 0; j < from.dim(); ++j) m.col(j) = to.coordinates(compose(from.basis[j], d));
  return rank<S>(m);
}

/// dim Ext^i(M, N) from the naive resolution and generic Hom spaces.
template <class S>
Index oracle_ext(const Rep<S>& m, const Rep<S>& n, int i) {
  const NaiveResolution<S> r = naive_resolution(m, i + 1);
  const Index c = hom_dim(r.terms[i], n);
  const Index out = pullback_rank(r.terms[i + 1], r.terms[i], r.maps[i + 1], n);
  const Index in = i == 0 ? 0 : pullback_rank(r.terms[i], r.terms[i - 1], r.maps[i], n);
  return c - out - in;
}

template <class S>
Rep<S> c_module(const AlgebraPtr<S>& a3) {
  return direct_sum<S>({projective(a3, 0), projective(a3, 2), simple(a3, 2)}).module;
}

/// k as a bimodule over k[x]/(x^2) on both sides.
template <class S>
Bimodule<S> residue_bimodule(const AlgebraPtr<S>& a) {
  Bimodule<S> t{a, simple(a, 0), {}};
  for (Index b = 0; b < a->dim(); ++b) {
    t.left_total.push_back(a->in_radical(b) ? Mat<S>(zeros<S>(1, 1)) : identity<S>(a->field(), 1));
  }
  return t;
}

}  // namespace

TYPED_TEST(HomologyTyped, ResolutionExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  for (int v = 0; v < 3; ++v) {
    const Resolution<S> r = min_proj_resolution(projective(a3, v), 4);
    EXPECT_TRUE(r.terminated);
    EXPECT_EQ(r.length, 0);
    EXPECT_TRUE(verify_resolution(r));
    EXPECT_TRUE(is_projective(projective(a3, v)));
    EXPECT_TRUE(is_injective_module(injective(a3, v)));
  }
  const Resolution<S> s3 = min_proj_resolution(simple(a3, 2), 4);
  EXPECT_TRUE(s3.terminated);
  EXPECT_EQ(s3.length, 1);
  ASSERT_EQ(s3.terms.size(), 2u);
  EXPECT_EQ(s3.vertices[0], std::vector<int>{2});
  EXPECT_EQ(s3.vertices[1], std::vector<int>{1});
  EXPECT_EQ(s3.terms[1].dims, (Dims{1, 1, 0}));
  EXPECT_TRUE(s3.minimal);
  EXPECT_TRUE(verify_resolution(s3));
  EXPECT_FALSE(is_projective(simple(a3, 2)));

  auto x2 = truncated_polynomial<S>(2);
  const Resolution<S> per = min_proj_resolution(simple(x2, 0), 5);
  EXPECT_FALSE(per.terminated);
  EXPECT_EQ(per.terms.size(), 6u);
  for (const auto& t : per.terms) EXPECT_EQ(t.dims, Dims{2});
  EXPECT_TRUE(per.minimal);
  EXPECT_TRUE(verify_resolution(per));
  EXPECT_TRUE(verify_resolution(min_inj_coresolution(simple(x2, 0), 3)));
  EXPECT_TRUE(verify_resolution(min_inj_coresolution(simple(a3, 0), 3)));
  EXPECT_TRUE(isomorphic(syzygy(simple(x2, 0), 3), simple(x2, 0)));
  EXPECT_TRUE(syzygy(simple(a3, 2), 2).is_zero());
  EXPECT_TRUE(isomorphic(cosyzygy(simple(a3, 0), 1), injective(a3, 1)));
}

TYPED_TEST(HomologyTyped, ExtExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  EXPECT_EQ(ext_dim(simple(a3, 2), simple(a3, 1), 1), 1);
  EXPECT_EQ(ext_dim(simple(a3, 2), simple(a3, 0), 1), 0);
  EXPECT_EQ(ext_dim(simple(a3, 2), simple(a3, 1), 2), 0);
  const Rep<S> c = c_module(a3);
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(ext_dim(projective(a3, v), c, 0), hom_dim(projective(a3, v), c));
    EXPECT_EQ(ext_dim(simple(a3, v), c, 0), hom_dim(simple(a3, v), c));
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(ext_dim(projective(a3, v), simple(a3, 1), i), 0);
  }

  const Verdict p = ext_vanishes_all(projective(a3, 1), simple(a3, 0), 30);
  EXPECT_TRUE(p.certified_true());
  const Verdict cc = ext_vanishes_all(c, c, 30);
  EXPECT_TRUE(cc.certified_true());

  auto x2 = truncated_polynomial<S>(2);
  const Verdict kk = ext_vanishes_all(simple(x2, 0), simple(x2, 0), 30);
  EXPECT_TRUE(kk.certified_false());
  EXPECT_EQ(kk.witness, "Ext^1 != 0");
  // Infinite pd on the left, the regular module is injective on the right.
  const Verdict free = ext_vanishes_all(simple(x2, 0), regular_module(x2), 6);
  EXPECT_TRUE(free.certified_true());
  EXPECT_EQ(free.witness, "id of the second argument is 0");

  // Two blocks k[x]/(x^2) x k[y]/(y^2): infinite pd and id, Ext vanishes.
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {Arrow{"x", 0, 0}, Arrow{"y", 1, 1}};
  const FieldSpec& f = default_field<S>();
  Relation<S> rx, ry;
  rx.terms.emplace_back(scalar<S>(f, 1), Path{0, 0, {0, 0}});
  ry.terms.emplace_back(scalar<S>(f, 1), Path{1, 1, {1, 1}});
  auto blocks = build_path_algebra<S>(q, {rx, ry}, f);
  const Verdict bounded = ext_vanishes_all(simple(blocks, 0), simple(blocks, 1), 6);
  EXPECT_TRUE(bounded.value);
  EXPECT_EQ(bounded.status, Status::up_to_bound(6));
  EXPECT_EQ(bounded.status.str(), "up_to_bound:6");
}

TYPED_TEST(HomologyTyped, TorExamples) {
  using S = TypeParam;
  auto x2 = truncated_polynomial<S>(2);
  const Bimodule<S> k = residue_bimodule(x2);
  validate_bimodule(k);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(tor_dim(simple(x2, 0), k, i), 1);
  EXPECT_EQ(tor_dim(regular_module(x2), k, 0), 1);
  EXPECT_EQ(tor_dim(regular_module(x2), k, 1), 0);

  auto a3 = linear_algebra<S>(3);
  const EndoAlgebra<S> e = endo_algebra(c_module(a3));
  const AlgebraPtr<S>& s = e.algebra;
  for (int v = 0; v < s->num_vertices(); ++v) {
    EXPECT_EQ(tor_dim(simple(s, v), e.bimodule, 0), tensor_over(simple(s, v), e.bimodule).module.total_dim());
    EXPECT_EQ(tor_dim(projective(s, v), e.bimodule, 1), 0);
    EXPECT_EQ(tor_dim(projective(s, v), e.bimodule, 2), 0);
  }
}

TYPED_TEST(HomologyTyped, DimensionExamples) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(proj_dim(projective(a3, v), 30).str(), "0");
    EXPECT_EQ(inj_dim(injective(a3, v), 30).str(), "0");
  }
  const DimResult s3 = proj_dim(simple(a3, 2), 30);
  EXPECT_TRUE(s3.certified_finite());
  EXPECT_EQ(s3.value, 1);
  EXPECT_EQ(inj_dim(simple(a3, 0), 30).value, 1);
  EXPECT_EQ(flat_dim(simple(a3, 2), 30).value, 1);
  EXPECT_EQ(proj_dim(zero_rep(a3), 30).str(), "0");

  auto x2 = truncated_polynomial<S>(2);
  const Index b = default_bound(*x2);
  EXPECT_EQ(b, 30);
  const DimResult per = proj_dim(simple(x2, 0), b);
  EXPECT_FALSE(per.finite);
  EXPECT_EQ(per.status, Status::up_to_bound(30));
  EXPECT_EQ(per.str(), "AtLeast(30)");
}

/// @brief Minimal-resolution Ext against the naive oracle, plus dimension
/// shift, duality and resolution checks on random modules.
template <class S>
void check_ext_properties(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int it = 0; it < 12; ++it) {
    const auto a = random_algebra<S>(rng, f);
    const Rep<S> m = random_module(a, rng);
    const Rep<S> n = random_module(a, rng);
    const Resolution<S> r = min_proj_resolution(m, 3);
    ASSERT_TRUE(verify_resolution(r)) << "iteration " << it;
    ASSERT_TRUE(r.minimal);
    ASSERT_TRUE(verify_resolution(min_inj_coresolution(n, 3)));
    const Rep<S> omega = syzygy(m, 1);
    for (int i = 0; i <= 2; ++i) {
      const Index e = ext_dim(r, n, i);
      ASSERT_EQ(e, ext_dim(m, n, i));
      if (i <= 1) ASSERT_EQ(e, oracle_ext(m, n, i)) << "iteration " << it << " degree " << i;
      ASSERT_EQ(e, ext_dim(dual(n), dual(m), i));
      if (i >= 1) ASSERT_EQ(ext_dim(m, n, i + 1), ext_dim(omega, n, i));
    }
    const DimResult pd = proj_dim(m, default_bound(*a));
    // Acyclic quivers have finite global dimension.
    ASSERT_TRUE(pd.certified_finite());
    const Verdict v = ext_vanishes_all(m, n, default_bound(*a));
    ASSERT_TRUE(v.status.certified);
    bool all_zero = true;
    for (Index i = 1; i <= pd.value; ++i) all_zero = all_zero && ext_dim(m, n, i) == 0;
    ASSERT_EQ(v.value, all_zero);
  }
}

TEST(HomologyProperties, ExtOverF2) { check_ext_properties<Fp>(kF2, 401); }
TEST(HomologyProperties, ExtOverF3) { check_ext_properties<Fp>(kF3, 402); }
TEST(HomologyProperties, ExtOverQ) { check_ext_properties<Rational>(kQ, 403); }

/// @brief Tor_i(N, T) = Ext^i(N, D T) with T a random module over its
/// endomorphism algebra.
template <class S>
void check_tor_ext_duality(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  int checked = 0;
  for (int it = 0; it < 10; ++it) {
    const auto a = random_algebra<S>(rng, f);
    const Rep<S> m = random_module(a, rng);
    if (m.is_zero()) continue;
    const EndoAlgebra<S> e = endo_algebra(m);
    const Rep<S> dt = dual_left(e.bimodule);
    for (int trial = 0; trial < 2; ++trial) {
      const Rep<S> n = random_module(e.algebra, rng);
      const Resolution<S> r = min_proj_resolution(n, 3);
      for (int i = 0; i <= 2; ++i) ASSERT_EQ(tor_dim(r, e.bimodule, i), ext_dim(r, dt, i)) << "iteration " << it;
      ASSERT_EQ(tor_dim(r, e.bimodule, 0), tensor_over(n, e.bimodule).module.total_dim());
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(HomologyProperties, TorExtDualityF2) { check_tor_ext_duality<Fp>(kF2, 411); }
TEST(HomologyProperties, TorExtDualityQ) { check_tor_ext_duality<Rational>(kQ, 412); }

/// @brief Tor_i(M, D N) = Ext^i(M, N) through the (A, k)-bimodule D N.
template <class S>
void check_dual_bimodule(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int it = 0; it < 10; ++it) {
    const auto a = random_algebra<S>(rng, f);
    const Rep<S> m = random_module(a, rng);
    const Rep<S> n = random_module(a, rng);
    const Bimodule<S> dn = dual_bimodule(n);
    const Resolution<S> r = min_proj_resolution(m, 4);
    for (int i = 0; i <= 3; ++i) ASSERT_EQ(tor_dim(r, dn, i), ext_dim(r, n, i)) << "iteration " << it;
  }
}

TEST(HomologyProperties, DualBimoduleF3) { check_dual_bimodule<Fp>(kF3, 413); }
TEST(HomologyProperties, DualBimoduleQ) { check_dual_bimodule<Rational>(kQ, 414); }

/// @brief Modules of projective dimension zero split into indecomposable
/// projectives.
template <class S>
void check_pd_zero(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  int projectives = 0;
  for (int it = 0; it < 20; ++it) {
    const auto a = random_algebra<S>(rng, f);
    const Rep<S> m = random_module(a, rng);
    if (m.is_zero() || proj_dim(m, default_bound(*a)).value != 0) continue;
    ++projectives;
    for (const auto& summand : decompose(m).summands) {
      bool found = false;
      for (int v = 0; v < a->num_vertices() && !found; ++v) found = isomorphic(summand.module, projective(a, v));
      ASSERT_TRUE(found) << "iteration " << it;
    }
  }
  EXPECT_GT(projectives, 0);
}

TEST(HomologyProperties, ProjectiveDimensionZeroF2) { check_pd_zero<Fp>(kF2, 421); }
TEST(HomologyProperties, ProjectiveDimensionZeroQ) { check_pd_zero<Rational>(kQ, 422); }

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

#include <sstream>

#include "test_support.hpp"
#include "tiltlab/foxby/foxby.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

namespace {

template <class S>
class FoxbyTyped : public ::testing::Test {};

using Scalars = ::testing::Types<Fp, Rational>;
TYPED_TEST_SUITE(FoxbyTyped, Scalars);

constexpr Index kBound = 12;

template <class S>
Rep<S> c_module(const AlgebraPtr<S>& a3) {
  return direct_sum<S>({projective(a3, 0), projective(a3, 2), simple(a3, 2)}).module;
}

std::string describe(const HarnessReport& r) {
  std::ostringstream out;
  out << r.theorem << " on " << r.setup << " (" << r.catalog_size << " items)";
  for (const auto& h : r.hypotheses) out << "\n  hypothesis " << h.label << " = " << h.verdict.value << " " << h.verdict.status.str();
  for (const auto& m : r.mismatches) out << "\n  mismatch " << m;
  for (const auto& m : r.exploratory_mismatches) out << "\n  exploratory " << m;
  for (const auto& m : r.inconclusive) out << "\n  inconclusive " << m;
  return out.str();
}

}  // namespace

TYPED_TEST(FoxbyTyped, MembershipExamples) {
  using S = TypeParam;
  auto local = truncated_polynomial<S>(2);
  const Bimodule<S> reg = regular_bimodule(local);
  const auto s_member = auslander_member(regular_module(local), reg, kBound);
  EXPECT_TRUE(s_member.member.certified_true()) << s_member.member.witness;
  EXPECT_TRUE(s_member.natural_map.is_isomorphism);

  auto a3 = linear_algebra<S>(3);
  const Setup<S> setup = make_setup("C", c_module(a3));
  for (int v = 0; v < 3; ++v) {
    const auto r = bass_member(injective(a3, v), setup.bimodule(), kBound);
    EXPECT_TRUE(r.member.certified_true()) << "I(" << v + 1 << "): " << r.member.witness;
  }
  EXPECT_TRUE(bass_member(dual_regular(a3), setup.bimodule(), kBound).member.certified_true());
  EXPECT_TRUE(bass_member(setup.module, setup.bimodule(), kBound).member.certified_true());
  // Regular S is always an Auslander member.
  EXPECT_TRUE(auslander_member(regular_module(setup.left()), setup.bimodule(), kBound).member.certified_true());
}

TYPED_TEST(FoxbyTyped, GammaRegularEverythingIsMember) {
  using S = TypeParam;
  auto g = gamma_a2<S>();
  const Bimodule<S> t = regular_bimodule(g);
  const Catalog<S> cat = build_catalog(g, CatalogSpec{2, 3, 7});
  ASSERT_FALSE(cat.indecomposables.empty());
  for (const auto& m : cat.modules()) {
    const auto a = auslander_member(m, t, kBound);
    const auto b = bass_member(m, t, kBound);
    EXPECT_TRUE(a.member.certified_true()) << dims_string(m.dims) << ": " << a.member.witness;
    EXPECT_TRUE(b.member.certified_true()) << dims_string(m.dims) << ": " << b.member.witness;
  }
}

TYPED_TEST(FoxbyTyped, Roundtrip) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const Setup<S> setup = make_setup("C", c_module(a3));
  const Rep<S> s = regular_module(setup.left());
  const auto r = foxby_roundtrip(s, setup.bimodule(), FoxbyDirection::auslander, kBound);
  EXPECT_TRUE(r.is_isomorphism);
  EXPECT_TRUE(isomorphic(r.module, s));
  EXPECT_TRUE(is_isomorphism(s, r.module, r.map));
  for (int v = 0; v < 3; ++v) {
    const Rep<S> i = injective(a3, v);
    const auto back = foxby_roundtrip(i, setup.bimodule(), FoxbyDirection::bass, kBound);
    EXPECT_TRUE(isomorphic(back.module, i));
    EXPECT_TRUE(is_isomorphism(back.module, i, back.map));
  }
  // C is not tensorly faithful: some simple S-module is killed by - (x) T.
  bool found = false;
  for (int v : setup.left()->class_representatives()) {
    const Rep<S> n = simple(setup.left(), v);
    if (!tensor_over(n, setup.bimodule()).module.is_zero()) continue;
    found = true;
    EXPECT_THROW(foxby_roundtrip(n, setup.bimodule(), FoxbyDirection::auslander, kBound), NotAMember);
  }
  EXPECT_TRUE(found);
}

TYPED_TEST(FoxbyTyped, TwoOfThree) {
  using S = TypeParam;
  auto g = gamma_a2<S>();
  const Bimodule<S> t = regular_bimodule(g);
  for (int v = 0; v < 2; ++v) {
    const Rep<S> m = simple(g, v);
    const auto cover = projective_cover(m);
    const auto k = kernel(cover.module, m, cover.map);
    const ShortExact<S> seq{k.module, cover.module, m, k.inclusion, cover.map};
    const auto r = two_of_three_check(seq, t, FoxbyDirection::auslander, kBound);
    EXPECT_TRUE(r.in_hypothesis);
    EXPECT_EQ(r.outcome, Outcome::verified) << r.note;
    for (const auto& member : r.members) EXPECT_TRUE(member.certified_true());
  }

  auto a3 = linear_algebra<S>(3);
  const Setup<S> setup = make_setup("C", c_module(a3));
  const DirectSum<S> d = direct_sum<S>({injective(a3, 0), injective(a3, 1)});
  const ShortExact<S> split{injective(a3, 0), d.module, injective(a3, 1), d.injections[0], d.projections[1]};
  const auto gated = two_of_three_check(split, setup.bimodule(), FoxbyDirection::bass, kBound);
  EXPECT_FALSE(gated.in_hypothesis);
  EXPECT_EQ(gated.outcome, Outcome::verified);
  EXPECT_NE(gated.note.find("out of hypothesis"), std::string::npos);

  const ShortExact<S> broken{injective(a3, 0), d.module, injective(a3, 1), d.injections[0], d.projections[0]};
  EXPECT_THROW(require_exact(broken), NotExact);
}

TYPED_TEST(FoxbyTyped, RandomExtensions) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  Rng rng(5);
  for (int u = 0; u < 3; ++u) {
    for (int w = 0; w < 3; ++w) {
      const ShortExact<S> s = random_extension(simple(a3, u), simple(a3, w), rng);
      EXPECT_NO_THROW(require_exact(s));
      // Ext^1(S(u), S(w)) = 0 forces a split middle term.
      if (ext_dim(simple(a3, u), simple(a3, w), 1) == 0) {
        EXPECT_TRUE(isomorphic(s.x, direct_sum<S>({simple(a3, w), simple(a3, u)}).module));
      }
    }
  }
}

TEST(CatalogSpecTest, ParseAndPrint) {
  const CatalogSpec s = CatalogSpec::parse("depth=2,extensions=10,seed=9");
  EXPECT_EQ(s.depth, 2);
  EXPECT_EQ(s.extensions, 10);
  EXPECT_EQ(s.seed, 9u);
  EXPECT_EQ(CatalogSpec::parse(s.str()).str(), s.str());
  EXPECT_EQ(CatalogSpec::parse("").str(), CatalogSpec{}.str());
  EXPECT_THROW(CatalogSpec::parse("depth"), BadSetup);
  EXPECT_THROW(CatalogSpec::parse("width=3"), BadSetup);
  EXPECT_THROW(CatalogSpec::parse("depth=x"), BadSetup);
}

TYPED_TEST(FoxbyTyped, CatalogOfA3) {
  using S = TypeParam;
  auto a3 = linear_algebra<S>(3);
  const Catalog<S> cat = build_catalog(a3, CatalogSpec{4, 4, 3});
  // kA_3 has six indecomposables, all reached from simples.
  EXPECT_EQ(cat.indecomposables.size(), 6u);
  for (std::size_t i = 0; i < cat.indecomposables.size(); ++i) {
    EXPECT_TRUE(is_indecomposable(cat.indecomposables[i]));
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(isomorphic(cat.indecomposables[i], cat.indecomposables[j]));
  }
  EXPECT_EQ(cat.extensions.size(), 4u);
  EXPECT_EQ(cat.modules().size(), 10u);
  for (const auto& e : cat.extensions) EXPECT_NO_THROW(require_exact(e));
  const Catalog<S> again = build_catalog(a3, CatalogSpec{4, 4, 3});
  for (std::size_t i = 0; i < cat.extensions.size(); ++i) EXPECT_EQ(again.extensions[i].x.act, cat.extensions[i].x.act);
}

TYPED_TEST(FoxbyTyped, HarnessExamples) {
  using S = TypeParam;
  auto local = truncated_polynomial<S>(2);
  const Setup<S> reg = make_setup("R", regular_module(local));
  const HarnessReport t35 = verify_theorem("T3.5", reg, CatalogSpec{}, kBound);
  EXPECT_TRUE(t35.all_consistent()) << describe(t35);
  EXPECT_FALSE(t35.exploratory) << describe(t35);
  EXPECT_TRUE(t35.inconclusive.empty()) << describe(t35);
  for (const auto& e : t35.entries) {
    for (const auto& v : e.verdicts) EXPECT_TRUE(v.verdict.certified_true()) << e.module << " " << v.label;
  }

  auto a3 = linear_algebra<S>(3);
  const Setup<S> c = make_setup("C", c_module(a3));
  const HarnessReport t56 = verify_theorem("T5.6", c, CatalogSpec{}, kBound);
  EXPECT_TRUE(t56.all_consistent()) << describe(t56);
  ASSERT_FALSE(t56.entries.empty());
  EXPECT_EQ(t56.entries.front().module.rfind("setup module", 0), 0u);
  for (const auto& v : t56.entries.front().verdicts) EXPECT_TRUE(v.verdict.certified_true()) << v.label;

  auto g = gamma_a2<S>();
  const Setup<S> gr = make_setup("R", regular_module(g));
  const HarnessReport l38 = verify_theorem("L3.8", gr, CatalogSpec{}, kBound);
  EXPECT_TRUE(l38.all_consistent()) << describe(l38);
  EXPECT_FALSE(l38.exploratory);

  EXPECT_THROW(verify_theorem("T9.9", gr, CatalogSpec{}, kBound), BadSetup);
  EXPECT_THROW(make_setup("zero", zero_rep(g)), BadSetup);
}

/// Every identifier on every fixture setup: no certified mismatch.
template <class S>
void check_all_theorems(const Setup<S>& setup, const CatalogSpec& spec) {
  for (const auto& id : theorem_ids()) {
    const HarnessReport r = verify_theorem(id, setup, spec, kBound);
    EXPECT_TRUE(r.all_consistent()) << describe(r);
    EXPECT_EQ(r.theorem, id);
  }
}

TYPED_TEST(FoxbyTyped, AllTheoremsOnFixtures) {
  using S = TypeParam;
  const CatalogSpec spec{3, 4, 11};
  check_all_theorems(make_setup("x^2 regular", regular_module(truncated_polynomial<S>(2))), spec);
  check_all_theorems(make_setup("gamma regular", regular_module(gamma_a2<S>())), spec);
  auto a3 = linear_algebra<S>(3);
  check_all_theorems(make_setup("C", c_module(a3)), spec);
  check_all_theorems(make_setup("A3 regular", regular_module(a3)), spec);
}

TYPED_TEST(FoxbyTyped, TriangularLiftIsCotilting) {
  using S = TypeParam;
  const Quiver q = linear_quiver(3);
  for (const auto& base : {point_algebra<S>(), truncated_polynomial<S>(2)}) {
    auto tensor = build_tensor_algebra<S>(*base, q);
    const Rep<S> c = lift_to_path_algebra(tensor, regular_module(base), q);
    const auto r = check_cotilting(c, kBound);
    EXPECT_TRUE(r.is_cotilting());
    EXPECT_TRUE(r.id_right.certified_finite());
    EXPECT_EQ(r.id_right.value, 1);
  }
}

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

#include "tiltlab/tiltcheck/tiltcheck.hpp"

namespace tiltlab {

template <class Scalar>
CoresolutionResult<Scalar> add_coresolution(const Rep<Scalar>& x, const Rep<Scalar>& t, Index maxlen,
                                            std::uint64_t seed) {
  require_same_algebra(x.alg(), t.alg(), "add_coresolution");
  const AddCategory<Scalar> cat(t, seed);
  CoresolutionResult<Scalar> r;
  Rep<Scalar> current = x;
  Hom<Scalar> projection;
  for (Index i = 0; i <= maxlen; ++i) {
    AddMap<Scalar> ap = cat.left_approximation(current);
    if (!is_injective(current, ap.map)) {
      r.outcome = Outcome::refuted;
      r.reason = "left add-approximation at stage " + std::to_string(i) + " is not injective";
      return r;
    }
    r.differentials.push_back(i == 0 ? ap.map : compose(ap.map, projection));
    Quot<Scalar> q = cokernel(current, ap.object, ap.map);
    r.chain.push_back(std::move(ap.object));
    r.cokernels.push_back(q.module);
    if (q.module.is_zero()) {
      r.success = true;
      r.length = i;
      r.outcome = Outcome::verified;
      return r;
    }
    if (ext_dim(q.module, t, 1) != 0) {
      r.reason = "Ext^1(cokernel " + std::to_string(i + 1) + ", T) != 0";
      return r;
    }
    current = std::move(q.module);
    projection = std::move(q.projection);
  }
  r.reason = "no zero cokernel within length " + std::to_string(maxlen);
  return r;
}

template <class Scalar>
CoresolutionResult<Scalar> add_precover_resolution(const Rep<Scalar>& t, const Rep<Scalar>& x, Index maxlen,
                                                   std::uint64_t seed) {
  require_same_algebra(x.alg(), t.alg(), "add_precover_resolution");
  const AddCategory<Scalar> cat(t, seed);
  CoresolutionResult<Scalar> r;
  Rep<Scalar> current = x;
  Hom<Scalar> inclusion;
  for (Index i = 0; i <= maxlen; ++i) {
    AddMap<Scalar> ap = cat.right_approximation(current);
    if (!is_surjective(current, ap.map)) {
      r.outcome = Outcome::refuted;
      r.reason = "right add-approximation at stage " + std::to_string(i) + " is not surjective";
      return r;
    }
    r.differentials.push_back(i == 0 ? ap.map : compose(inclusion, ap.map));
    Sub<Scalar> k = kernel(ap.object, current, ap.map);
    r.chain.push_back(std::move(ap.object));
    r.cokernels.push_back(k.module);
    if (k.module.is_zero()) {
      r.success = true;
      r.length = i;
      r.outcome = Outcome::verified;
      return r;
    }
    if (ext_dim(t, k.module, 1) != 0) {
      r.reason = "Ext^1(T, kernel " + std::to_string(i + 1) + ") != 0";
      return r;
    }
    current = std::move(k.module);
    inclusion = std::move(k.inclusion);
  }
  r.reason = "no zero kernel within length " + std::to_string(maxlen);
  return r;
}

template <class Scalar>
TiltingReport<Scalar> check_tilting(const Rep<Scalar>& t, Index n, Index bound, std::uint64_t seed) {
  TiltingReport<Scalar> r;
  r.n = n;
  // pd(t) > bound is certified, so a bound of at least n decides pd <= n.
  const Index b = std::max(bound, n);
  r.pd = proj_dim(t, b);
  const Outcome pd_ok = r.pd.finite && r.pd.value <= n ? Outcome::verified : Outcome::refuted;
  r.selforth = ext_vanishes_all(t, t, b);
  r.coresolution = add_coresolution(regular_module(t.algebra), t, n, seed);
  r.outcome = combine(combine(pd_ok, outcome_of(r.selforth)), r.coresolution.outcome);
  return r;
}

template <class Scalar>
WakamatsuReport<Scalar> check_wakamatsu(const Rep<Scalar>& t, Index bound, std::uint64_t seed) {
  if (t.is_zero()) throw ZeroModule("check_wakamatsu needs a nonzero module");
  WakamatsuReport<Scalar> r;
  r.endo = endo_algebra(t, seed);
  const Rep<Scalar> left = left_module_op(r.endo.bimodule).module;
  r.right_selforth = ext_vanishes_all(t, t, bound);
  // The homothety R -> End(_S T) lands in End(_S T); compare ranks.
  const Algebra<Scalar>& a = t.alg();
  const Index n = t.total_dim();
  Mat<Scalar> columns = zeros<Scalar>(n * n, a.dim());
  for (Index b = 0; b < a.dim(); ++b) {
    const Mat<Scalar> act = t.total_action(b);
    for (Index j = 0; j < n; ++j) columns.block(j * n, b, n, 1) = act.col(j);
  }
  r.homothety_rank = rank<Scalar>(columns);
  r.algebra_dim = a.dim();
  r.left_endomorphism_dim = hom_dim(left, left);
  r.homothety_iso = r.homothety_rank == r.algebra_dim && r.left_endomorphism_dim == r.algebra_dim;
  const Outcome chi = r.homothety_iso ? Outcome::verified : Outcome::refuted;
  r.outcome = combine(chi, outcome_of(r.right_selforth));
  if (r.outcome != Outcome::refuted) {
    r.left_selforth = ext_vanishes_all(left, left, bound);
    r.outcome = combine(r.outcome, outcome_of(*r.left_selforth));
  }
  return r;
}

template <class Scalar>
std::vector<Rep<Scalar>> perpendicular_sample(const Rep<Scalar>& c, Index bound) {
  const AlgebraPtr<Scalar>& a = c.algebra;
  std::vector<Rep<Scalar>> seeds;
  for (int v : a->class_representatives()) {
    seeds.push_back(simple(a, v));
    seeds.push_back(projective(a, v));
    seeds.push_back(injective(a, v));
  }
  std::vector<Rep<Scalar>> candidates;
  for (const auto& s : seeds) {
    candidates.push_back(s);
    for (Index d = 1; d <= 4; ++d) {
      candidates.push_back(syzygy(s, d));
      candidates.push_back(cosyzygy(s, d));
    }
  }
  std::vector<Rep<Scalar>> out;
  for (auto& x : candidates) {
    if (x.is_zero()) continue;
    bool seen = false;
    for (const auto& y : out) {
      if (y.dims == x.dims && isomorphic(x, y)) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    if (ext_vanishes_all(x, c, bound).certified_true()) out.push_back(std::move(x));
  }
  return out;
}

template <class Scalar>
CotiltingReport<Scalar> check_cotilting(const Rep<Scalar>& c, Index bound, std::uint64_t seed) {
  if (c.is_zero()) throw ZeroModule("check_cotilting needs a nonzero module");
  const AlgebraPtr<Scalar>& a = c.algebra;
  CotiltingReport<Scalar> r;
  r.id_right = inj_dim(c, bound);
  r.selforth = ext_vanishes_all(c, c, bound);
  const Outcome base = combine(finite_outcome(r.id_right), outcome_of(r.selforth));

  std::vector<Rep<Scalar>> injectives;
  for (int v : a->class_representatives()) injectives.push_back(injective(a, v));
  r.over_cogenerator = add_precover_resolution(c, direct_sum(injectives).module, bound, seed);
  r.over_dual_regular = add_precover_resolution(c, dual_regular(a), bound, seed);
  r.variant_a = combine(base, r.over_cogenerator.outcome);
  r.variant_c = combine(base, r.over_dual_regular.outcome);

  r.wakamatsu = check_wakamatsu(c, bound, seed);
  r.variant_d = combine(finite_outcome(r.id_right), r.wakamatsu.outcome);
  if (r.variant_d == Outcome::verified) {
    r.id_left = inj_dim(left_module_op(r.wakamatsu.endo.bimodule).module, bound);
    r.variant_d = finite_outcome(*r.id_left);
  }

  Outcome sampled = Outcome::verified;
  const AddCategory<Scalar> cat(c, seed);
  const std::vector<Rep<Scalar>> sample = perpendicular_sample(c, bound);
  r.sample_size = static_cast<Index>(sample.size());
  for (std::size_t k = 0; k < sample.size() && sampled == Outcome::verified; ++k) {
    const Rep<Scalar>& x = sample[k];
    const AddMap<Scalar> ap = cat.left_approximation(x);
    if (!is_injective(x, ap.map)) {
      sampled = Outcome::refuted;
      r.sample_failure = "sample " + std::to_string(k) + " " + dims_string(x.dims) + " has no add(C)-monomorphism";
      break;
    }
    const Rep<Scalar> quotient_module = cokernel(x, ap.object, ap.map).module;
    const Outcome o = outcome_of(ext_vanishes_all(quotient_module, c, bound));
    if (o != Outcome::verified) {
      sampled = o;
      r.sample_failure = "sample " + std::to_string(k) + " " + dims_string(x.dims) + " has cokernel outside the left perpendicular class";
    }
  }
  r.variant_b = combine(base, sampled);
  r.agreement = r.variant_a == r.variant_c && r.variant_c == r.variant_d;
  return r;
}

template <class Scalar>
FaithfulReport check_tensorly_faithful(const Bimodule<Scalar>& t) {
  const Algebra<Scalar>& s = *t.left;
  for (int v : s.class_representatives()) {
    if (tensor_over(simple(t.left, v), t).module.is_zero()) {
      return FaithfulReport{false, "simple right module S(" + s.vertex_name(v) + ") over the left algebra"};
    }
  }
  const Bimodule<Scalar> f = flip(t);
  const Algebra<Scalar>& r = t.right.alg();
  for (int v : r.class_representatives()) {
    if (tensor_over(simple(f.left, v), f).module.is_zero()) {
      return FaithfulReport{false, "simple left module S(" + r.vertex_name(v) + ") over the right algebra"};
    }
  }
  return FaithfulReport{true, ""};
}

#define TILTLAB_INSTANTIATE(S)                                                                              \
  template CoresolutionResult<S> add_coresolution<S>(const Rep<S>&, const Rep<S>&, Index, std::uint64_t);     \
  template CoresolutionResult<S> add_precover_resolution<S>(const Rep<S>&, const Rep<S>&, Index, std::uint64_t); \
  template TiltingReport<S> check_tilting<S>(const Rep<S>&, Index, Index, std::uint64_t);                     \
  template WakamatsuReport<S> check_wakamatsu<S>(const Rep<S>&, Index, std::uint64_t);                        \
  template std::vector<Rep<S>> perpendicular_sample<S>(const Rep<S>&, Index);                                 \
  template CotiltingReport<S> check_cotilting<S>(const Rep<S>&, Index, std::uint64_t);                        \
  template FaithfulReport check_tensorly_faithful<S>(const Bimodule<S>&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab

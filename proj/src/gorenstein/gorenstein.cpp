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

#include "tiltlab/gorenstein/gorenstein.hpp"

namespace tiltlab {

template <class Scalar>
GorensteinProfile detect_gorenstein(const AlgebraPtr<Scalar>& a, Index bound) {
  GorensteinProfile p;
  p.right_selfinj_dim = inj_dim(regular_module(a), bound);
  p.left_selfinj_dim = inj_dim(regular_module(a->opposite()), bound);
  p.is_gorenstein = p.right_selfinj_dim.certified_finite() && p.left_selfinj_dim.certified_finite();
  return p;
}

namespace {

/// First degree 1 <= i <= top with Ext^i(x, y) != 0. The resolution of x is
/// extended by doubling so that an early nonzero degree stays cheap.
template <class Scalar>
std::optional<Index> first_nonzero(const Rep<Scalar>& x, const Rep<Scalar>& y, Index top) {
  Index checked = 0;
  for (Index length = 2; checked < top; length *= 2) {
    const Resolution<Scalar> res = min_proj_resolution(x, std::min(length, top + 1));
    const Index reach = res.terminated ? std::min(top, res.length) : std::min(top, std::min(length, top + 1) - 1);
    for (Index i = checked + 1; i <= reach; ++i) {
      if (ext_dim(res, y, i) != 0) return i;
    }
    if (res.terminated) return std::nullopt;
    checked = reach;
  }
  return std::nullopt;
}

}  // namespace

template <class Scalar>
Verdict is_gorenstein_projective(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound) {
  if (is_projective(m)) return Verdict{true, Status::certified_status(), "projective"};
  const Index top = profile.is_gorenstein ? profile.right_selfinj_dim.value : bound;
  if (auto i = first_nonzero(m, regular_module(m.algebra), top)) {
    return Verdict{false, Status::certified_status(), "Ext^" + std::to_string(*i) + "(M, A) != 0"};
  }
  const std::string range = "Ext^i(M, A) = 0 for 1 <= i <= " + std::to_string(top);
  if (profile.is_gorenstein) return Verdict{true, Status::certified_status(), range};
  return Verdict{true, Status::up_to_bound(bound), range};
}

template <class Scalar>
Verdict is_gorenstein_injective(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound) {
  if (is_injective_module(m)) return Verdict{true, Status::certified_status(), "injective"};
  const Index top = profile.is_gorenstein ? profile.left_selfinj_dim.value : bound;
  if (auto i = first_nonzero(dual_regular(m.algebra), m, top)) {
    return Verdict{false, Status::certified_status(), "Ext^" + std::to_string(*i) + "(DA, M) != 0"};
  }
  const std::string range = "Ext^i(DA, M) = 0 for 1 <= i <= " + std::to_string(top);
  if (profile.is_gorenstein) return Verdict{true, Status::certified_status(), range};
  return Verdict{true, Status::up_to_bound(bound), range};
}

template <class Scalar>
CoresolutionResult<Scalar> gp_right_tail(const Rep<Scalar>& m, Index stages) {
  return add_coresolution(m, regular_module(m.algebra), stages);
}

namespace {

/// Least d whose d-th module in the sequence passes test.
template <class Scalar, class Next, class Test>
DimResult least_passing(Rep<Scalar> current, Index top, Index bound, Next next, Test test, const char* name) {
  bool below_certified = true;
  for (Index d = 0; d <= top; ++d) {
    const Verdict v = test(current);
    if (v.value) {
      const std::string witness = std::string(name) + "^" + std::to_string(d) + ": " + v.witness;
      DimResult r = DimResult::exact(d, witness);
      if (!(v.status.certified && below_certified)) r.status = weakest(v.status, Status::up_to_bound(bound));
      return r;
    }
    below_certified = below_certified && v.status.certified;
    current = next(current);
  }
  return DimResult::at_least(top, std::string("no ") + name + "^d passes for d <= " + std::to_string(top));
}

}  // namespace

template <class Scalar>
DimResult gpd(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound) {
  const Index top = profile.is_gorenstein ? profile.dimension() : bound;
  DimResult r = least_passing<Scalar>(
      m, top, bound, [](const Rep<Scalar>& x) { return syzygy(x, 1); },
      [&](const Rep<Scalar>& x) { return is_gorenstein_projective(x, profile, bound); }, "Omega");
  if (r.finite && profile.is_gorenstein) {
    const Index stages = profile.dimension() + 1;
    const CoresolutionResult<Scalar> tail = gp_right_tail(syzygy(m, r.value), stages);
    const bool complete = tail.success || static_cast<Index>(tail.chain.size()) == stages + 1;
    r.witness += complete ? "; right tail of " + std::to_string(tail.chain.size()) + " injective stages"
                          : "; right tail fails: " + tail.reason;
  }
  return r;
}

template <class Scalar>
DimResult gpd(const Rep<Scalar>& m, Index bound) {
  return gpd(m, detect_gorenstein(m.algebra, bound), bound);
}

template <class Scalar>
DimResult gid(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound) {
  return gpd(dual(m), profile.opposite(), bound);
}

template <class Scalar>
DimResult gid(const Rep<Scalar>& m, Index bound) {
  return gid(m, detect_gorenstein(m.algebra, bound), bound);
}

template <class Scalar>
DimResult gid_direct(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound) {
  const Index top = profile.is_gorenstein ? profile.dimension() : bound;
  return least_passing<Scalar>(
      m, top, bound, [](const Rep<Scalar>& x) { return cosyzygy(x, 1); },
      [&](const Rep<Scalar>& x) { return is_gorenstein_injective(x, profile, bound); }, "Sigma");
}

#define TILTLAB_INSTANTIATE(S)                                                                  \
  template GorensteinProfile detect_gorenstein<S>(const AlgebraPtr<S>&, Index);                  \
  template Verdict is_gorenstein_projective<S>(const Rep<S>&, const GorensteinProfile&, Index);  \
  template Verdict is_gorenstein_injective<S>(const Rep<S>&, const GorensteinProfile&, Index);   \
  template DimResult gpd<S>(const Rep<S>&, const GorensteinProfile&, Index);                     \
  template DimResult gpd<S>(const Rep<S>&, Index);                                               \
  template DimResult gid<S>(const Rep<S>&, const GorensteinProfile&, Index);                     \
  template DimResult gid<S>(const Rep<S>&, Index);                                               \
  template DimResult gid_direct<S>(const Rep<S>&, const GorensteinProfile&, Index);              \
  template CoresolutionResult<S> gp_right_tail<S>(const Rep<S>&, Index);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab

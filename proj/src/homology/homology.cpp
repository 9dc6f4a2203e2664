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

#include "tiltlab/homology/homology.hpp"

#include <algorithm>
#include <optional>

namespace tiltlab {

template <class Scalar>
Resolution<Scalar> min_proj_resolution(const Rep<Scalar>& m, Index length) {
  Resolution<Scalar> r;
  r.kind = ResolutionKind::projective;
  r.target = m;
  r.syzygies.push_back(m);
  if (m.is_zero()) {
    r.terminated = true;
    return r;
  }
  Rep<Scalar> omega = m;
  Hom<Scalar> inclusion;
  for (Index i = 0; i <= length; ++i) {
    Approximation<Scalar> cover = projective_cover(omega);
    if (i == 0) {
      r.differentials.push_back(cover.map);
      r.free_maps.push_back(FreeMap<Scalar>{m.algebra, cover.vertices, {}, {}});
    } else {
      Hom<Scalar> d = compose(inclusion, cover.map);
      FreeMap<Scalar> fm = extract(m.algebra, cover.vertices, r.vertices.back(), d);
      r.minimal = r.minimal && is_radical(fm);
      r.differentials.push_back(std::move(d));
      r.free_maps.push_back(std::move(fm));
    }
    Sub<Scalar> k = kernel(cover.module, omega, cover.map);
    r.terms.push_back(std::move(cover.module));
    r.vertices.push_back(std::move(cover.vertices));
    r.syzygies.push_back(k.module);
    if (k.module.is_zero()) {
      r.terminated = true;
      r.length = i;
      return r;
    }
    omega = std::move(k.module);
    inclusion = std::move(k.inclusion);
  }
  r.length = length;
  return r;
}

template <class Scalar>
Resolution<Scalar> min_inj_coresolution(const Rep<Scalar>& m, Index length) {
  const Resolution<Scalar> p = min_proj_resolution(dual(m), length);
  Resolution<Scalar> r;
  r.kind = ResolutionKind::injective;
  r.target = m;
  for (const auto& t : p.terms) r.terms.push_back(dual(t));
  r.vertices = p.vertices;
  for (const auto& d : p.differentials) r.differentials.push_back(dual(d));
  for (const auto& s : p.syzygies) r.syzygies.push_back(dual(s));
  r.terminated = p.terminated;
  r.length = p.length;
  r.minimal = p.minimal;
  return r;
}

template <class Scalar>
Rep<Scalar> syzygy(const Rep<Scalar>& m, Index i) {
  if (i == 0) return m;
  const Resolution<Scalar> r = min_proj_resolution(m, i - 1);
  if (static_cast<Index>(r.syzygies.size()) > i) return r.syzygies[i];
  return zero_rep(m.algebra);
}

template <class Scalar>
Rep<Scalar> cosyzygy(const Rep<Scalar>& m, Index i) {
  return dual(syzygy(dual(m), i));
}

template <class Scalar>
bool is_projective(const Rep<Scalar>& m) {
  const Approximation<Scalar> c = projective_cover(m);
  return c.module.total_dim() == m.total_dim();
}

template <class Scalar>
bool is_injective_module(const Rep<Scalar>& m) {
  return is_projective(dual(m));
}

template <class Scalar>
bool verify_resolution(const Resolution<Scalar>& r) {
  const std::size_t n = r.terms.size();
  if (n == 0) return r.target.is_zero();
  const bool proj = r.kind == ResolutionKind::projective;
  // Modules along the complex: target, then the terms.
  auto module_at = [&](std::size_t i) -> const Rep<Scalar>& { return i == 0 ? r.target : r.terms[i - 1]; };
  for (std::size_t i = 0; i < n; ++i) {
    const Rep<Scalar>& a = proj ? r.terms[i] : module_at(i);
    const Rep<Scalar>& b = proj ? module_at(i) : r.terms[i];
    if (!is_hom(a, b, r.differentials[i])) return false;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const Hom<Scalar> dd = proj ? compose(r.differentials[i - 1], r.differentials[i])
                                : compose(r.differentials[i], r.differentials[i - 1]);
    if (!is_zero(dd)) return false;
  }
  // Exactness at the target and at every term followed by a computed map.
  if (rank(r.differentials[0]) != r.target.total_dim()) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (rank(r.differentials[i]) + rank(r.differentials[i + 1]) != r.terms[i].total_dim()) return false;
  }
  if (r.terminated && n >= 2 && rank(r.differentials[n - 1]) != r.terms[n - 1].total_dim()) return false;
  if (r.terminated && n == 1 && r.terms[0].total_dim() != r.target.total_dim()) return false;
  if (proj) {
    for (std::size_t i = 1; i < r.free_maps.size(); ++i) {
      if (!is_radical(r.free_maps[i])) return false;
    }
  }
  return true;
}

namespace {

/// Hom(P_j, N) as the stacked components N_{v_k}.
template <class Scalar>
Index cochain_dim(const Resolution<Scalar>& res, const Rep<Scalar>& n, std::size_t j) {
  if (j >= res.terms.size()) return 0;
  Index d = 0;
  for (int v : res.vertices[j]) d += n.dims[v];
  return d;
}

/// delta^j : Hom(P_{j-1}, N) -> Hom(P_j, N), j >= 1.
template <class Scalar>
Mat<Scalar> cochain_differential(const Resolution<Scalar>& res, const Rep<Scalar>& n, std::size_t j) {
  const Index rows = cochain_dim(res, n, j), cols = cochain_dim(res, n, j - 1);
  Mat<Scalar> out = zeros<Scalar>(rows, cols);
  if (rows == 0 || cols == 0) return out;
  const FreeMap<Scalar>& fm = res.free_maps[j];
  Index r0 = 0;
  for (std::size_t k = 0; k < fm.from.size(); ++k) {
    Index c0 = 0;
    for (std::size_t l = 0; l < fm.to.size(); ++l) {
      const int v = fm.from[k], w = fm.to[l];
      out.block(r0, c0, n.dims[v], n.dims[w]) = n.homogeneous_action(fm.elem[l][k], v, w);
      c0 += n.dims[w];
    }
    r0 += n.dims[fm.from[k]];
  }
  return out;
}

template <class Scalar>
void require_degree(const Resolution<Scalar>& res, Index top) {
  if (!res.terminated && static_cast<Index>(res.terms.size()) <= top) {
    throw DimensionMismatch("resolution does not reach degree " + std::to_string(top));
  }
}

}  // namespace

template <class Scalar>
Index ext_dim(const Resolution<Scalar>& res, const Rep<Scalar>& n, Index i) {
  require_same_algebra(res.target.alg(), n.alg(), "ext_dim");
  if (res.kind != ResolutionKind::projective) throw DimensionMismatch("ext_dim needs a projective resolution");
  require_degree(res, i + 1);
  const std::size_t j = static_cast<std::size_t>(i);
  if (j >= res.terms.size()) return 0;
  const Index c = cochain_dim(res, n, j);
  const Index out_rank = j + 1 < res.terms.size() ? rank<Scalar>(cochain_differential(res, n, j + 1)) : 0;
  const Index in_rank = j >= 1 ? rank<Scalar>(cochain_differential(res, n, j)) : 0;
  return c - out_rank - in_rank;
}

template <class Scalar>
Index ext_dim(const Rep<Scalar>& m, const Rep<Scalar>& n, Index i) {
  return ext_dim(min_proj_resolution(m, i + 1), n, i);
}

template <class Scalar>
Verdict ext_vanishes_all(const Rep<Scalar>& m, const Rep<Scalar>& n, Index bound) {
  // Both resolutions grow by doubling so that a nonzero degree or a short
  // resolution is found before long syzygies are built.
  Index checked = 0;
  std::optional<Index> injective_length;
  for (Index length = 2;; length *= 2) {
    const Index reach_length = std::min(length, bound + 1);
    const Resolution<Scalar> res = min_proj_resolution(m, reach_length);
    const Index reach = res.terminated ? std::min(bound, res.length) : std::min(bound, reach_length - 1);
    for (Index i = checked + 1; i <= reach; ++i) {
      if (ext_dim(res, n, i) != 0) {
        return Verdict{false, Status::certified_status(), "Ext^" + std::to_string(i) + " != 0"};
      }
    }
    checked = reach;
    if (res.terminated) {
      return Verdict{true, Status::certified_status(), "pd of the first argument is " + std::to_string(res.length)};
    }
    if (!injective_length) {
      const Resolution<Scalar> inj = min_inj_coresolution(n, std::min(length, bound));
      if (inj.terminated) injective_length = inj.length;
    }
    if (injective_length && *injective_length <= checked) {
      return Verdict{true, Status::certified_status(),
                     "id of the second argument is " + std::to_string(*injective_length)};
    }
    if (checked >= bound) break;
  }
  return Verdict{true, Status::up_to_bound(bound), "Ext^i = 0 for 1 <= i <= " + std::to_string(bound)};
}

namespace {

template <class Scalar>
Mat<Scalar> left_action_of(const Bimodule<Scalar>& t, const Vec<Scalar>& x) {
  const Index n = t.right.total_dim();
  Mat<Scalar> out = zeros<Scalar>(n, n);
  for (Index b = 0; b < x.size(); ++b) {
    if (!tiltlab::is_zero(x(b))) out += x(b) * t.left_total[b];
  }
  return out;
}

/// d_j (x) T : P_j (x) T -> P_{j-1} (x) T with P(v) (x) T = e_v T.
template <class Scalar>
Mat<Scalar> chain_differential(const Resolution<Scalar>& res, const Bimodule<Scalar>& t,
                               const std::vector<Mat<Scalar>>& basis, const std::vector<Mat<Scalar>>& back,
                               std::size_t j) {
  auto chain_dim = [&](std::size_t i) {
    Index d = 0;
    if (i < res.terms.size()) {
      for (int v : res.vertices[i]) d += basis[v].cols();
    }
    return d;
  };
  const Index rows = chain_dim(j - 1), cols = chain_dim(j);
  Mat<Scalar> out = zeros<Scalar>(rows, cols);
  if (rows == 0 || cols == 0) return out;
  const FreeMap<Scalar>& fm = res.free_maps[j];
  Index c0 = 0;
  for (std::size_t k = 0; k < fm.from.size(); ++k) {
    const int v = fm.from[k];
    Index r0 = 0;
    for (std::size_t l = 0; l < fm.to.size(); ++l) {
      const int w = fm.to[l];
      out.block(r0, c0, basis[w].cols(), basis[v].cols()) = back[w] * left_action_of(t, fm.elem[l][k]) * basis[v];
      r0 += basis[w].cols();
    }
    c0 += basis[v].cols();
  }
  return out;
}

}  // namespace

template <class Scalar>
Index tor_dim(const Resolution<Scalar>& res, const Bimodule<Scalar>& t, Index i) {
  require_same_algebra(res.target.alg(), *t.left, "tor_dim");
  require_degree(res, i + 1);
  const Algebra<Scalar>& s = *t.left;
  std::vector<Mat<Scalar>> basis, back;
  for (int v = 0; v < s.num_vertices(); ++v) {
    Mat<Scalar> b = column_basis<Scalar>(t.left_total[s.idempotent(v)]);
    if (b.cols() == 0) b = zeros<Scalar>(t.right.total_dim(), 0);
    back.push_back(left_inverse<Scalar>(t.right.field(), b));
    basis.push_back(std::move(b));
  }
  const std::size_t j = static_cast<std::size_t>(i);
  if (j >= res.terms.size()) return 0;
  Index c = 0;
  for (int v : res.vertices[j]) c += basis[v].cols();
  const Index in_rank = j >= 1 ? rank<Scalar>(chain_differential(res, t, basis, back, j)) : 0;
  const Index out_rank = j + 1 < res.terms.size() ? rank<Scalar>(chain_differential(res, t, basis, back, j + 1)) : 0;
  return c - in_rank - out_rank;
}

template <class Scalar>
Index tor_dim(const Rep<Scalar>& n, const Bimodule<Scalar>& t, Index i) {
  return tor_dim(min_proj_resolution(n, i + 1), t, i);
}

template <class Scalar>
DimResult proj_dim(const Rep<Scalar>& m, Index bound) {
  const Resolution<Scalar> r = min_proj_resolution(m, bound);
  if (r.terminated) {
    return DimResult::exact(r.length, "minimal projective resolution of length " + std::to_string(r.length));
  }
  return DimResult::at_least(bound, "minimal projective resolution does not stop by degree " + std::to_string(bound));
}

template <class Scalar>
DimResult inj_dim(const Rep<Scalar>& m, Index bound) {
  const Resolution<Scalar> r = min_proj_resolution(dual(m), bound);
  if (r.terminated) {
    return DimResult::exact(r.length, "minimal injective coresolution of length " + std::to_string(r.length));
  }
  return DimResult::at_least(bound,
                             "minimal injective coresolution does not stop by degree " + std::to_string(bound));
}

#define TILTLAB_INSTANTIATE(S)                                                      \
  template Resolution<S> min_proj_resolution<S>(const Rep<S>&, Index);              \
  template Resolution<S> min_inj_coresolution<S>(const Rep<S>&, Index);             \
  template Rep<S> syzygy<S>(const Rep<S>&, Index);                                  \
  template Rep<S> cosyzygy<S>(const Rep<S>&, Index);                                \
  template bool is_projective<S>(const Rep<S>&);                                    \
  template bool is_injective_module<S>(const Rep<S>&);                              \
  template bool verify_resolution<S>(const Resolution<S>&);                         \
  template Index ext_dim<S>(const Resolution<S>&, const Rep<S>&, Index);            \
  template Index ext_dim<S>(const Rep<S>&, const Rep<S>&, Index);                   \
  template Verdict ext_vanishes_all<S>(const Rep<S>&, const Rep<S>&, Index);        \
  template Index tor_dim<S>(const Resolution<S>&, const Bimodule<S>&, Index);       \
  template Index tor_dim<S>(const Rep<S>&, const Bimodule<S>&, Index);              \
  template DimResult proj_dim<S>(const Rep<S>&, Index);                             \
  template DimResult inj_dim<S>(const Rep<S>&, Index);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab

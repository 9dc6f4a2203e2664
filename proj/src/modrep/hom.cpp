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

#include "tiltlab/modrep/hom.hpp"

namespace tiltlab {

template <class Scalar>
Vec<Scalar> HomSpace<Scalar>::coordinates(const Hom<Scalar>& f) const {
  return coordinate_map * vectorize(f);
}

template <class Scalar>
Hom<Scalar> HomSpace<Scalar>::element(const Vec<Scalar>& c) const {
  return unvectorize_hom(source, target, Vec<Scalar>(vectors * c));
}

template <class Scalar>
Mat<Scalar> hom_columns(const std::vector<Hom<Scalar>>& homs, Index length) {
  Mat<Scalar> out = zeros<Scalar>(length, static_cast<Index>(homs.size()));
  for (std::size_t i = 0; i < homs.size(); ++i) out.col(static_cast<Index>(i)) = vectorize(homs[i]);
  return out;
}

namespace {

/// Rows of the intertwining system f_s X.act[b] = Y.act[b] f_t in the
/// unknowns vec(f_0), vec(f_1), ..., f_v being rows_of(v) x cols_of(v).
template <class Scalar>
Mat<Scalar> intertwining_system(const Rep<Scalar>& m, const Rep<Scalar>& n) {
  const Algebra<Scalar>& a = m.alg();
  const FieldSpec& f = m.field();
  const int nv = a.num_vertices();
  std::vector<Index> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  std::vector<Mat<Scalar>> rows;
  for (Index b : a.generators()) {
    const int s = a.source(b), t = a.target(b);
    const Index r = n.dims[s] * m.dims[t];
    if (r == 0) continue;
    Mat<Scalar> block = zeros<Scalar>(r, off[nv]);
    block.middleCols(off[s], off[s + 1] - off[s]) +=
        kron<Scalar>(Mat<Scalar>(m.act[b].transpose()), identity<Scalar>(f, n.dims[s]));
    block.middleCols(off[t], off[t + 1] - off[t]) -= kron<Scalar>(identity<Scalar>(f, m.dims[t]), n.act[b]);
    rows.push_back(std::move(block));
  }
  return vstack<Scalar>(rows, off[nv]);
}

}  // namespace

template <class Scalar>
HomSpace<Scalar> hom_space(const Rep<Scalar>& m, const Rep<Scalar>& n) {
  require_same_algebra(m.alg(), n.alg(), "hom_space");
  HomSpace<Scalar> h{m, n, {}, {}, {}};
  h.vectors = kernel_basis<Scalar>(m.field(), intertwining_system(m, n));
  h.coordinate_map = left_inverse<Scalar>(m.field(), h.vectors);
  for (Index j = 0; j < h.vectors.cols(); ++j) {
    h.basis.push_back(unvectorize_hom(m, n, Vec<Scalar>(h.vectors.col(j))));
  }
  return h;
}

template <class Scalar>
Index hom_dim(const Rep<Scalar>& m, const Rep<Scalar>& n) {
  const Mat<Scalar> sys = intertwining_system(m, n);
  return sys.cols() - rank<Scalar>(sys);
}

template <class Scalar>
std::optional<Hom<Scalar>> factor_through_source(const Rep<Scalar>&, const Rep<Scalar>& y, const Rep<Scalar>& z,
                                                 const Hom<Scalar>& f, const Hom<Scalar>& h) {
  // g o f = h for g in Hom(y, z): linear in the coordinates of g.
  const HomSpace<Scalar> g_space = hom_space(y, z);
  std::vector<Hom<Scalar>> images;
  for (const auto& g : g_space.basis) images.push_back(compose(g, f));
  const Vec<Scalar> target = vectorize(h);
  const auto c = solve<Scalar>(hom_columns(images, target.size()), Mat<Scalar>(target));
  if (!c) return std::nullopt;
  return g_space.element(Vec<Scalar>(c->col(0)));
}

template <class Scalar>
std::optional<Hom<Scalar>> factor_through_target(const Rep<Scalar>& x, const Rep<Scalar>& y, const Rep<Scalar>&,
                                                 const Hom<Scalar>& f, const Hom<Scalar>& h) {
  const HomSpace<Scalar> g_space = hom_space(x, y);
  std::vector<Hom<Scalar>> images;
  for (const auto& g : g_space.basis) images.push_back(compose(f, g));
  const Vec<Scalar> target = vectorize(h);
  const auto c = solve<Scalar>(hom_columns(images, target.size()), Mat<Scalar>(target));
  if (!c) return std::nullopt;
  return g_space.element(Vec<Scalar>(c->col(0)));
}

#define TILTLAB_INSTANTIATE(S)                                                                          \
  template struct HomSpace<S>;                                                                          \
  template HomSpace<S> hom_space<S>(const Rep<S>&, const Rep<S>&);                                      \
  template Index hom_dim<S>(const Rep<S>&, const Rep<S>&);                                              \
  template Mat<S> hom_columns<S>(const std::vector<Hom<S>>&, Index);                                    \
  template std::optional<Hom<S>> factor_through_source<S>(const Rep<S>&, const Rep<S>&, const Rep<S>&, \
                                                          const Hom<S>&, const Hom<S>&);                \
  template std::optional<Hom<S>> factor_through_target<S>(const Rep<S>&, const Rep<S>&, const Rep<S>&, \
                                                          const Hom<S>&, const Hom<S>&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab

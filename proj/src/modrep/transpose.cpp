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

#include "tiltlab/modrep/transpose.hpp"

namespace tiltlab {

template <class Scalar>
Presentation<Scalar> minimal_presentation(const Rep<Scalar>& m) {
  Presentation<Scalar> out{projective_cover(m), {}};
  const Sub<Scalar> k = kernel(out.cover.module, m, out.cover.map);
  const Approximation<Scalar> c1 = projective_cover(k.module);
  out.relations = extract(m.algebra, c1.vertices, out.cover.vertices, compose(k.inclusion, c1.map));
  return out;
}

template <class Scalar>
Rep<Scalar> transpose(const Rep<Scalar>& m) {
  const Presentation<Scalar> p = minimal_presentation(m);
  const FreeMap<Scalar> g = dualize(p.relations);
  const Rep<Scalar> src = free_module(g.algebra, g.from);
  const Rep<Scalar> tgt = free_module(g.algebra, g.to);
  return cokernel(src, tgt, materialize(g)).module;
}

template <class Scalar>
Rep<Scalar> ar_translate(const Rep<Scalar>& m) {
  return dual(transpose(m));
}

template <class Scalar>
Rep<Scalar> ar_translate_inverse(const Rep<Scalar>& m) {
  return transpose(dual(m));
}

#define TILTLAB_INSTANTIATE(S)                                                 \
  template Presentation<S> minimal_presentation<S>(const Rep<S>&);             \
  template Rep<S> transpose<S>(const Rep<S>&);                                 \
  template Rep<S> ar_translate<S>(const Rep<S>&);                              \
  template Rep<S> ar_translate_inverse<S>(const Rep<S>&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab

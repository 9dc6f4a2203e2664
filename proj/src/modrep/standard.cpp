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

#include "tiltlab/modrep/standard.hpp"

namespace tiltlab {

template <class Scalar>
std::vector<Index> projective_positions(const Algebra<Scalar>& a, int vertex) {
  std::vector<Index> pos(a.dim(), -1);
  std::vector<Index> next(a.num_vertices(), 0);
  for (Index b = 0; b < a.dim(); ++b) {
    if (a.target(b) == vertex) pos[b] = next[a.source(b)]++;
  }
  return pos;
}

template <class Scalar>
Rep<Scalar> projective(const AlgebraPtr<Scalar>& alg, int vertex) {
  const Algebra<Scalar>& a = *alg;
  const std::vector<Index> pos = projective_positions(a, vertex);
  Rep<Scalar> m{alg, std::vector<Index>(a.num_vertices(), 0), {}};
  for (Index b = 0; b < a.dim(); ++b) {
    if (pos[b] >= 0) ++m.dims[a.source(b)];
  }
  for (Index c = 0; c < a.dim(); ++c) {
    Mat<Scalar> x = zeros<Scalar>(m.dims[a.source(c)], m.dims[a.target(c)]);
    for (Index b = 0; b < a.dim(); ++b) {
      if (pos[b] < 0 || a.source(b) != a.target(c)) continue;
      for (const auto& t : a.product(b, c)) x(pos[t.basis], pos[b]) += t.coeff;
    }
    m.act.push_back(std::move(x));
  }
  return m;
}

template <class Scalar>
Rep<Scalar> injective(const AlgebraPtr<Scalar>& a, int vertex) {
  return dual(projective<Scalar>(a->opposite(), vertex));
}

template <class Scalar>
Rep<Scalar> simple(const AlgebraPtr<Scalar>& a, int vertex) {
  return top(projective<Scalar>(a, vertex)).module;
}

template <class Scalar>
Rep<Scalar> regular_module(const AlgebraPtr<Scalar>& alg) {
  const Algebra<Scalar>& a = *alg;
  std::vector<Index> pos(a.dim());
  Rep<Scalar> m{alg, std::vector<Index>(a.num_vertices(), 0), {}};
  for (Index b = 0; b < a.dim(); ++b) pos[b] = m.dims[a.source(b)]++;
  for (Index c = 0; c < a.dim(); ++c) {
    Mat<Scalar> x = zeros<Scalar>(m.dims[a.source(c)], m.dims[a.target(c)]);
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.source(b) != a.target(c)) continue;
      for (const auto& t : a.product(b, c)) x(pos[t.basis], pos[b]) += t.coeff;
    }
    m.act.push_back(std::move(x));
  }
  return m;
}

template <class Scalar>
Rep<Scalar> dual_regular(const AlgebraPtr<Scalar>& a) {
  return dual(regular_module<Scalar>(a->opposite()));
}

template <class Scalar>
Rep<Scalar> free_module(const AlgebraPtr<Scalar>& a, const std::vector<int>& vertices) {
  if (vertices.empty()) return zero_rep<Scalar>(a);
  std::vector<Rep<Scalar>> parts;
  for (int v : vertices) parts.push_back(projective<Scalar>(a, v));
  return direct_sum(parts).module;
}

namespace {

/// offsets[l][v]: start of summand l inside component v of a free module.
template <class Scalar>
std::vector<std::vector<Index>> summand_offsets(const Algebra<Scalar>& a, const std::vector<int>& vertices,
                                                std::vector<std::vector<Index>>& positions) {
  std::vector<std::vector<Index>> offsets;
  std::vector<Index> at(a.num_vertices(), 0);
  positions.clear();
  for (int w : vertices) {
    offsets.push_back(at);
    positions.push_back(projective_positions(a, w));
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.target(b) == w) ++at[a.source(b)];
    }
  }
  return offsets;
}

}  // namespace

template <class Scalar>
Hom<Scalar> materialize(const FreeMap<Scalar>& f) {
  const Algebra<Scalar>& a = *f.algebra;
  const Rep<Scalar> src = free_module(f.algebra, f.from);
  const Rep<Scalar> tgt = free_module(f.algebra, f.to);
  std::vector<std::vector<Index>> pos_from, pos_to;
  const auto off_from = summand_offsets(a, f.from, pos_from);
  const auto off_to = summand_offsets(a, f.to, pos_to);
  Hom<Scalar> h = zero_hom(src, tgt);
  for (std::size_t l = 0; l < f.from.size(); ++l) {
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.target(b) != f.from[l]) continue;
      const int v = a.source(b);
      const Index col = off_from[l][v] + pos_from[l][b];
      for (std::size_t k = 0; k < f.to.size(); ++k) {
        const Vec<Scalar>& x = f.elem[k][l];
        for (Index i = 0; i < a.dim(); ++i) {
          if (tiltlab::is_zero(x(i))) continue;
          for (const auto& t : a.product(i, b)) {
            h.blocks[v](off_to[k][v] + pos_to[k][t.basis], col) += x(i) * t.coeff;
          }
        }
      }
    }
  }
  return h;
}

template <class Scalar>
FreeMap<Scalar> extract(const AlgebraPtr<Scalar>& alg, const std::vector<int>& from, const std::vector<int>& to,
                        const Hom<Scalar>& f) {
  const Algebra<Scalar>& a = *alg;
  std::vector<std::vector<Index>> pos_from, pos_to;
  const auto off_from = summand_offsets(a, from, pos_from);
  const auto off_to = summand_offsets(a, to, pos_to);
  FreeMap<Scalar> out{alg, from, to, {}};
  out.elem.assign(to.size(), std::vector<Vec<Scalar>>(from.size(), Vec<Scalar>::Constant(a.dim(), Scalar(0))));
  for (std::size_t l = 0; l < from.size(); ++l) {
    const int w = from[l];
    const Index col = off_from[l][w] + pos_from[l][a.idempotent(w)];
    for (std::size_t k = 0; k < to.size(); ++k) {
      for (Index b = 0; b < a.dim(); ++b) {
        if (a.target(b) != to[k] || a.source(b) != w) continue;
        out.elem[k][l](b) = f.blocks[w](off_to[k][w] + pos_to[k][b], col);
      }
    }
  }
  return out;
}

template <class Scalar>
FreeMap<Scalar> dualize(const FreeMap<Scalar>& f) {
  FreeMap<Scalar> out{f.algebra->opposite(), f.to, f.from, {}};
  out.elem.assign(f.from.size(), std::vector<Vec<Scalar>>(f.to.size()));
  for (std::size_t k = 0; k < f.to.size(); ++k) {
    for (std::size_t l = 0; l < f.from.size(); ++l) out.elem[l][k] = f.elem[k][l];
  }
  return out;
}

template <class Scalar>
bool is_radical(const FreeMap<Scalar>& f) {
  for (const auto& row : f.elem) {
    for (const auto& x : row) {
      for (Index b = 0; b < x.size(); ++b) {
        if (!f.algebra->in_radical(b) && !tiltlab::is_zero(x(b))) return false;
      }
    }
  }
  return true;
}

template <class Scalar>
Approximation<Scalar> projective_cover(const Rep<Scalar>& m) {
  const Algebra<Scalar>& a = m.alg();
  const std::vector<Mat<Scalar>> rad = radical_span(m);
  Approximation<Scalar> out;
  std::vector<Mat<Scalar>> gens;
  for (int r : a.class_representatives()) {
    const Quotient<Scalar> q = quotient_basis<Scalar>(m.field(), m.dims[r], rad[r]);
    for (Index j = 0; j < q.section.cols(); ++j) {
      out.vertices.push_back(r);
      gens.push_back(q.section.col(j));
    }
  }
  out.module = free_module(m.algebra, out.vertices);
  std::vector<std::vector<Index>> pos;
  const auto off = summand_offsets(a, out.vertices, pos);
  out.map = zero_hom(out.module, m);
  for (std::size_t l = 0; l < out.vertices.size(); ++l) {
    for (Index b = 0; b < a.dim(); ++b) {
      if (a.target(b) != out.vertices[l]) continue;
      const int v = a.source(b);
      out.map.blocks[v].col(off[l][v] + pos[l][b]) = m.act[b] * gens[l];
    }
  }
  return out;
}

template <class Scalar>
Approximation<Scalar> injective_envelope(const Rep<Scalar>& m) {
  const Approximation<Scalar> c = projective_cover(dual(m));
  return Approximation<Scalar>{dual(c.module), c.vertices, dual(c.map)};
}

#define TILTLAB_INSTANTIATE(S)                                                                        \
  template std::vector<Index> projective_positions<S>(const Algebra<S>&, int);                        \
  template Rep<S> projective<S>(const AlgebraPtr<S>&, int);                                           \
  template Rep<S> injective<S>(const AlgebraPtr<S>&, int);                                            \
  template Rep<S> simple<S>(const AlgebraPtr<S>&, int);                                               \
  template Rep<S> regular_module<S>(const AlgebraPtr<S>&);                                            \
  template Rep<S> dual_regular<S>(const AlgebraPtr<S>&);                                              \
  template Rep<S> free_module<S>(const AlgebraPtr<S>&, const std::vector<int>&);                      \
  template Hom<S> materialize<S>(const FreeMap<S>&);                                                  \
  template FreeMap<S> extract<S>(const AlgebraPtr<S>&, const std::vector<int>&, const std::vector<int>&, \
                                 const Hom<S>&);                                                      \
  template FreeMap<S> dualize<S>(const FreeMap<S>&);                                                  \
  template bool is_radical<S>(const FreeMap<S>&);                                                     \
  template Approximation<S> projective_cover<S>(const Rep<S>&);                                       \
  template Approximation<S> injective_envelope<S>(const Rep<S>&);

TILTLAB_INSTANTIATE(Fp)
TILTLAB_INSTANTIATE(Rational)

}  // namespace tiltlab

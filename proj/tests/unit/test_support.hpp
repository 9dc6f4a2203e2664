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

#ifndef TILTLAB_TESTS_TEST_SUPPORT_HPP
#define TILTLAB_TESTS_TEST_SUPPORT_HPP

#include <random>

#include "tiltlab/algebra/path_algebra.hpp"
#include "tiltlab/modrep/standard.hpp"

namespace tiltlab::testing {

inline const FieldSpec kF2 = FieldSpec::prime(2);
inline const FieldSpec kF3 = FieldSpec::prime(3);
inline const FieldSpec kQ = FieldSpec::rationals();

template <class S>
const FieldSpec& default_field() {
  if constexpr (std::is_same_v<S, Fp>) {
    return kF2;
  } else {
    return kQ;
  }
}

/// k A_n: 1 -> 2 -> ... -> n.
template <class S>
AlgebraPtr<S> linear_algebra(int n, const FieldSpec& f = default_field<S>()) {
  return build_path_algebra<S>(linear_quiver(n), {}, f);
}

/// The base field as a path algebra on one vertex.
template <class S>
AlgebraPtr<S> point_algebra(const FieldSpec& f = default_field<S>()) {
  Quiver q;
  q.vertices = {"1"};
  return build_path_algebra<S>(q, {}, f);
}

/// k[x]/(x^m) on one vertex.
template <class S>
AlgebraPtr<S> truncated_polynomial(int m, const FieldSpec& f = default_field<S>()) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {Arrow{"x", 0, 0}};
  Relation<S> r;
  r.terms.emplace_back(scalar<S>(f, 1), Path{0, 0, std::vector<int>(static_cast<std::size_t>(m), 0)});
  return build_path_algebra<S>(q, {r}, f);
}

/// k[x]/(x^2) (x) k A_2.
template <class S>
AlgebraPtr<S> gamma_a2(const FieldSpec& f = default_field<S>()) {
  return build_tensor_algebra<S>(*truncated_polynomial<S>(2, f), linear_quiver(2));
}

inline Quiver random_acyclic_quiver(Rng& rng, int vertices, int arrows) {
  Quiver q;
  for (int v = 1; v <= vertices; ++v) q.vertices.push_back(std::to_string(v));
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  for (int a = 0; a < arrows; ++a) {
    int s = pick(rng), t = pick(rng);
    if (s == t) continue;
    if (s > t) std::swap(s, t);
    q.arrows.push_back(Arrow{"c" + std::to_string(a), s, t});
  }
  return q;
}

/// Random relations: monomials and binomials among paths of length 2 or 3.
template <class S>
std::vector<Relation<S>> random_relations(Rng& rng, const Quiver& q, const FieldSpec& f, int count) {
  std::vector<Path> long_paths;
  for (int a = 0; a < q.num_arrows(); ++a) {
    for (int b = 0; b < q.num_arrows(); ++b) {
      if (q.arrows[a].target != q.arrows[b].source) continue;
      long_paths.push_back(Path{q.arrows[a].source, q.arrows[b].target, {a, b}});
      for (int c = 0; c < q.num_arrows(); ++c) {
        if (q.arrows[b].target == q.arrows[c].source) {
          long_paths.push_back(Path{q.arrows[a].source, q.arrows[c].target, {a, b, c}});
        }
      }
    }
  }
  std::vector<Relation<S>> out;
  if (long_paths.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, long_paths.size() - 1);
  for (int i = 0; i < count; ++i) {
    const Path& p = long_paths[pick(rng)];
    Relation<S> r;
    r.terms.emplace_back(scalar<S>(f, 1), p);
    for (const Path& other : long_paths) {
      if (other != p && other.source == p.source && other.target == p.target && rng() % 2 == 0) {
        r.terms.emplace_back(ScalarTraits<S>::random_nonzero(f, rng), other);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}


/// A random acyclic bound quiver algebra with 2 to 4 vertices.
template <class S>
AlgebraPtr<S> random_algebra(Rng& rng, const FieldSpec& f) {
  const Quiver q = random_acyclic_quiver(rng, 2 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 3));
  return build_path_algebra<S>(q, random_relations<S>(rng, q, f, static_cast<int>(rng() % 3)), f);
}

/// Quotient of a random free module by a submodule generated by random
/// elements, optionally cut down to a random submodule.
template <class S>
Rep<S> random_module(const AlgebraPtr<S>& a, Rng& rng) {
  const FieldSpec& f = a->field();
  std::vector<int> vertices;
  const int summands = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < summands; ++i) vertices.push_back(static_cast<int>(rng() % a->num_vertices()));
  Rep<S> m = free_module(a, vertices);
  std::vector<Element<S>> gens;
  const int relations = static_cast<int>(rng() % 3);
  for (int i = 0; i < relations; ++i) {
    const int v = static_cast<int>(rng() % a->num_vertices());
    if (m.dims[v] == 0) continue;
    Vec<S> x(m.dims[v]);
    for (Index j = 0; j < x.size(); ++j) x(j) = ScalarTraits<S>::random(f, rng);
    gens.push_back(Element<S>{v, x});
  }
  m = quotient(m, generated_span(m, gens)).module;
  if (rng() % 3 == 0 && m.total_dim() > 0) {
    int v = static_cast<int>(rng() % a->num_vertices());
    while (m.dims[v] == 0) v = (v + 1) % a->num_vertices();
    Vec<S> x(m.dims[v]);
    for (Index j = 0; j < x.size(); ++j) x(j) = ScalarTraits<S>::random(f, rng);
    m = submodule(m, generated_span(m, {Element<S>{v, x}})).module;
  }
  return m;
}

template <class S>
Mat<S> mat(const FieldSpec& f, Index rows, Index cols, std::initializer_list<int> entries) {
  Mat<S> m = zeros<S>(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = scalar<S>(f, *it++);
  }
  return m;
}

}  // namespace tiltlab::testing

#endif  // TILTLAB_TESTS_TEST_SUPPORT_HPP

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

#include "tiltlab/algebra/path_algebra.hpp"

#include <algorithm>
#include <map>

namespace tiltlab {

namespace {

constexpr std::size_t kMaxPaths = 20000;

/// Paths of length < n, grouped by length, extended arrow by arrow.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int n) {
  std::vector<std::vector<Path>> by_length;
  std::size_t total = 0;
  if (n <= 0) return by_length;
  by_length.emplace_back();
  for (int v = 0; v < q.num_vertices(); ++v) by_length[0].push_back(Path::trivial(v));
  total = by_length[0].size();
  for (int len = 1; len < n; ++len) {
    std::vector<Path> next;
    if (len == 1) {
      for (int a = 0; a < q.num_arrows(); ++a) next.push_back(Path{q.arrows[a].source, q.arrows[a].target, {a}});
    } else {
      for (const Path& p : by_length[len - 1]) {
        for (int a = 0; a < q.num_arrows(); ++a) {
          if (q.arrows[a].source != p.target) continue;
          Path e = p;
          e.arrows.push_back(a);
          e.target = q.arrows[a].target;
          next.push_back(std::move(e));
        }
      }
    }
    total += next.size();
    if (total > kMaxPaths) {
      throw InfiniteDimensional("more than " + std::to_string(kMaxPaths) + " paths of length < " +
                                std::to_string(n) + "; the quotient is too large to enumerate");
    }
    by_length.push_back(std::move(next));
  }
  return by_length;
}

/// The image of the relation ideal in kQ / J^n.
template <class Scalar>
struct Truncation {
  int n = 0;
  std::vector<Path> paths;  // column order: longest first
  std::map<Path, Index> column;
  IncrementalSpan<Scalar> ideal{0};

  Index quotient_dim() const { return static_cast<Index>(paths.size()) - ideal.rank(); }
};

template <class Scalar>
Truncation<Scalar> truncate(const Quiver& q, const std::vector<Relation<Scalar>>& relations, int n) {
  Truncation<Scalar> t;
  t.n = n;
  const auto by_length = enumerate_paths(q, n);
  for (auto it = by_length.rbegin(); it != by_length.rend(); ++it) {
    for (const Path& p : *it) {
      t.column.emplace(p, static_cast<Index>(t.paths.size()));
      t.paths.push_back(p);
    }
  }
  const Index cols = static_cast<Index>(t.paths.size());
  t.ideal = IncrementalSpan<Scalar>(cols);

  auto zero = [&] { return Vec<Scalar>::Constant(cols, Scalar(0)); };
  std::vector<Vec<Scalar>> queue;
  for (const auto& r : relations) {
    Vec<Scalar> v = zero();
    for (const auto& [c, p] : r.terms) {
      if (p.length() < n) v(t.column.at(p)) += c;
    }
    if (auto w = t.ideal.insert(v)) queue.push_back(*w);
  }
  while (!queue.empty()) {
    const Vec<Scalar> v = std::move(queue.back());
    queue.pop_back();
    for (int a = 0; a < q.num_arrows(); ++a) {
      Vec<Scalar> left = zero(), right = zero();
      bool any_left = false, any_right = false;
      for (Index c = 0; c < cols; ++c) {
        if (is_zero(v(c))) continue;
        const Path& p = t.paths[c];
        if (p.length() + 1 >= n) continue;
        if (q.arrows[a].source == p.target) {
          Path e = p;
          e.arrows.push_back(a);
          e.target = q.arrows[a].target;
          left(t.column.at(e)) += v(c);
          any_left = true;
        }
        if (q.arrows[a].target == p.source) {
          Path e = p;
          e.arrows.insert(e.arrows.begin(), a);
          e.source = q.arrows[a].source;
          right(t.column.at(e)) += v(c);
          any_right = true;
        }
      }
      if (any_left) {
        if (auto w = t.ideal.insert(left)) queue.push_back(*w);
      }
      if (any_right) {
        if (auto w = t.ideal.insert(right)) queue.push_back(*w);
      }
    }
  }
  return t;
}

template <class Scalar>
void validate_relations(const Quiver& q, const std::vector<Relation<Scalar>>& relations) {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations[i];
    const std::string where = "relation #" + std::to_string(i + 1);
    if (r.terms.empty()) throw MalformedRelation(where + " is empty");
    for (const auto& [c, p] : r.terms) {
      if (p.length() < 2) throw MalformedRelation(where + " has a term of length < 2");
      int at = p.source;
      for (int a : p.arrows) {
        if (a < 0 || a >= q.num_arrows() || q.arrows[a].source != at) {
          throw MalformedRelation(where + " has a term that is not a path");
        }
        at = q.arrows[a].target;
      }
      if (at != p.target) throw MalformedRelation(where + " has a term with inconsistent endpoints");
      if (p.source != r.terms.front().second.source || p.target != r.terms.front().second.target) {
        throw MalformedRelation(where + " mixes sources or targets");
      }
    }
  }
}

}  // namespace

Quiver linear_quiver(int n) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
  for (int v = 0; v + 1 < n; ++v) q.arrows.push_back(Arrow{"a" + std::to_string(v + 1), v, v + 1});
  return q;
}

template <class Scalar>
AlgebraPtr<Scalar> build_path_algebra(const Quiver& q, const std::vector<Relation<Scalar>>& relations,
                                      const FieldSpec& f, int path_length_cap) {
  q.validate();
  validate_relations(q, relations);
  if (!ScalarTraits<Scalar>::compatible(f)) throw FieldMismatch("scalar type does not match " + f.name());

  Truncation<Scalar> prev = truncate(q, relations, 1);
  for (int n = 2;; ++n) {
    if (n > path_length_cap + 1) {
      throw InfiniteDimensional("path classes still grow at length " + std::to_string(path_length_cap));
    }
    Truncation<Scalar> cur = truncate(q, relations, n);
    if (cur.quotient_dim() == prev.quotient_dim()) {
      prev = std::move(cur);
      break;
    }
    prev = std::move(cur);
  }
  const Truncation<Scalar>& t = prev;

  // Basis: non-leading paths, shortest first, enumeration order within a length.
  std::vector<Index> basis_cols;
  for (Index c = static_cast<Index>(t.paths.size()) - 1; c >= 0; --c) {
    if (!t.ideal.is_lead(c)) basis_cols.push_back(c);
  }
  std::stable_sort(basis_cols.begin(), basis_cols.end(), [&](Index a, Index b) {
    return t.paths[a].length() < t.paths[b].length();
  });
  // Within a length the column order is enumeration order, reversed above by
  // the descending scan; restore it.
  for (std::size_t i = 0; i < basis_cols.size();) {
    std::size_t j = i;
    while (j < basis_cols.size() && t.paths[basis_cols[j]].length() == t.paths[basis_cols[i]].length()) ++j;
    std::sort(basis_cols.begin() + i, basis_cols.begin() + j);
    i = j;
  }
  const Index dim = static_cast<Index>(basis_cols.size());
  std::vector<Index> basis_of_col(t.paths.size(), -1);
  for (Index b = 0; b < dim; ++b) basis_of_col[basis_cols[b]] = b;

  AlgebraData<Scalar> d;
  d.field = f;
  d.num_vertices = q.num_vertices();
  d.quiver = q;
  d.relations = relations;
  d.vertex_names = q.vertices;
  d.idempotent.assign(q.num_vertices(), -1);
  for (Index b = 0; b < dim; ++b) {
    const Path& p = t.paths[basis_cols[b]];
    d.source.push_back(p.source);
    d.target.push_back(p.target);
    d.radical.push_back(p.length() > 0);
    d.labels.push_back(path_label(q, p));
    d.basis_paths.push_back(p);
    if (p.length() == 0) d.idempotent[p.source] = b;
  }
  d.product.resize(dim * dim);
  const Index cols = static_cast<Index>(t.paths.size());
  for (Index x = 0; x < dim; ++x) {
    const Path& px = t.paths[basis_cols[x]];
    for (Index y = 0; y < dim; ++y) {
      const Path& py = t.paths[basis_cols[y]];
      if (px.source != py.target) continue;
      // x*y traverses y first.
      Path prod{py.source, px.target, py.arrows};
      prod.arrows.insert(prod.arrows.end(), px.arrows.begin(), px.arrows.end());
      if (prod.length() >= t.n) continue;
      Vec<Scalar> v = Vec<Scalar>::Constant(cols, Scalar(0));
      v(t.column.at(prod)) = scalar<Scalar>(f, 1);
      v = t.ideal.reduce(v);
      auto& terms = d.product[x * dim + y];
      for (Index b = 0; b < dim; ++b) {
        const Scalar& c = v(basis_cols[b]);
        if (!is_zero(c)) terms.push_back(BasisTerm<Scalar>{b, c});
      }
    }
  }
  return make_algebra(std::move(d));
}

template <class Scalar>
AlgebraPtr<Scalar> build_tensor_algebra(const Algebra<Scalar>& base, const Quiver& q) {
  if (base.num_vertices() != 1 || !base.quiver()) {
    throw BadSetup("tensor base must be a path algebra presented on one vertex");
  }
  if (!base.is_commutative()) throw NonCommutativeBase("base algebra is not commutative");
  q.validate();
  if (!q.is_acyclic()) throw InfiniteDimensional("quiver has an oriented cycle");

  const Quiver& bq = *base.quiver();
  Quiver out;
  out.vertices = q.vertices;
  out.arrows = q.arrows;
  // loop_at[l][v]: arrow index of loop l at vertex v.
  std::vector<std::vector<int>> loop_at(bq.num_arrows(), std::vector<int>(q.num_vertices()));
  for (int l = 0; l < bq.num_arrows(); ++l) {
    for (int v = 0; v < q.num_vertices(); ++v) {
      loop_at[l][v] = out.num_arrows();
      out.arrows.push_back(Arrow{bq.arrows[l].name + "_" + q.vertices[v], v, v});
    }
  }
  std::vector<Relation<Scalar>> rels;
  for (int v = 0; v < q.num_vertices(); ++v) {
    for (const auto& r : base.relations()) {
      Relation<Scalar> copy;
      for (const auto& [c, p] : r.terms) {
        Path np{v, v, {}};
        for (int a : p.arrows) np.arrows.push_back(loop_at[a][v]);
        copy.terms.emplace_back(c, np);
      }
      rels.push_back(std::move(copy));
    }
  }
  const Scalar one = scalar<Scalar>(base.field(), 1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int i = q.arrows[a].source, j = q.arrows[a].target;
    for (int l = 0; l < bq.num_arrows(); ++l) {
      Relation<Scalar> r;
      r.terms.emplace_back(one, Path{i, j, {loop_at[l][i], a}});
      r.terms.emplace_back(-one, Path{i, j, {a, loop_at[l][j]}});
      rels.push_back(std::move(r));
    }
  }
  auto result = build_path_algebra<Scalar>(out, rels, base.field());
  const auto plain = build_path_algebra<Scalar>(q, {}, base.field());
  if (result->dim() != base.dim() * plain->dim()) {
    throw InfiniteDimensional("tensor algebra has dimension " + std::to_string(result->dim()) + ", expected " +
                              std::to_string(base.dim() * plain->dim()));
  }
  return result;
}

template AlgebraPtr<Fp> build_path_algebra<Fp>(const Quiver&, const std::vector<Relation<Fp>>&, const FieldSpec&, int);
template AlgebraPtr<Rational> build_path_algebra<Rational>(const Quiver&, const std::vector<Relation<Rational>>&,
                                                           const FieldSpec&, int);
template AlgebraPtr<Fp> build_tensor_algebra<Fp>(const Algebra<Fp>&, const Quiver&);
template AlgebraPtr<Rational> build_tensor_algebra<Rational>(const Algebra<Rational>&, const Quiver&);

}  // namespace tiltlab

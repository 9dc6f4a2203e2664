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

/**
 * @file
 *
 * Finite-dimensional algebras given by a basis and structure constants.
 *
 * Every basis element b lies in e_t A e_s for a unique pair of vertex
 * idempotents; s = source(b), t = target(b). For a path algebra the basis
 * element of an arrow a: i -> j has source i and target j, so a = e_j a e_i
 * and the product x*y is nonzero only when source(x) = target(y).
 *
 * The basis is adapted to the Jacobson radical: elements flagged radical span
 * rad A. Vertices are primitive idempotents; two vertices in the same class
 * have isomorphic projectives (this only happens for non-basic algebras such
 * as endomorphism rings of modules with repeated summands).
 */

#ifndef TILTLAB_ALGEBRA_ALGEBRA_HPP
#define TILTLAB_ALGEBRA_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/algebra/quiver.hpp"
#include "tiltlab/exactlin/linalg.hpp"

namespace tiltlab {

template <class Scalar>
struct BasisTerm {
  Index basis;
  Scalar coeff;
};

/// Raw description handed to the Algebra constructor.
template <class Scalar>
struct AlgebraData {
  FieldSpec field = FieldSpec::rationals();
  int num_vertices = 0;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<Index> idempotent;
  /// product[x * dim + y] = x*y as a sparse combination.
  std::vector<std::vector<BasisTerm<Scalar>>> product;
  std::vector<bool> radical;
  /// Defaults to one class per vertex.
  std::vector<int> vertex_class;
  std::vector<std::string> labels;
  std::vector<std::string> vertex_names;
  std::optional<Quiver> quiver;
  std::vector<Relation<Scalar>> relations;
  /// For path algebras: the path representing each basis element.
  std::vector<Path> basis_paths;
};

template <class Scalar>
class Algebra : public std::enable_shared_from_this<Algebra<Scalar>> {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  explicit Algebra(AlgebraData<Scalar> data);

  const FieldSpec& field() const { return d_.field; }
  Index dim() const { return static_cast<Index>(d_.source.size()); }
  int num_vertices() const { return d_.num_vertices; }
  int source(Index b) const { return d_.source[b]; }
  int target(Index b) const { return d_.target[b]; }
  Index idempotent(int v) const { return d_.idempotent[v]; }
  bool is_idempotent_basis(Index b) const;
  bool in_radical(Index b) const { return d_.radical[b]; }
  int vertex_class(int v) const { return d_.vertex_class[v]; }
  /// One vertex per class, in vertex order.
  const std::vector<int>& class_representatives() const { return class_reps_; }
  /// Non-idempotent basis elements that, together with the vertex
  /// idempotents, generate the algebra.
  const std::vector<Index>& generators() const { return generators_; }
  const std::vector<BasisTerm<Scalar>>& product(Index x, Index y) const {
    return d_.product[x * dim() + y];
  }
  const std::string& label(Index b) const { return d_.labels[b]; }
  const std::string& vertex_name(int v) const { return d_.vertex_names[v]; }
  const std::optional<Quiver>& quiver() const { return d_.quiver; }
  const std::vector<Relation<Scalar>>& relations() const { return d_.relations; }
  const std::vector<Path>& basis_paths() const { return d_.basis_paths; }
  const AlgebraData<Scalar>& data() const { return d_; }

  /// Product of two elements in basis coordinates.
  Vec<Scalar> multiply(const Vec<Scalar>& x, const Vec<Scalar>& y) const;
  Vec<Scalar> basis_vector(Index b) const;
  /// Matrix of left (resp. right) multiplication by basis element b.
  Mat<Scalar> left_mult(Index b) const;
  Mat<Scalar> right_mult(Index b) const;

  /// Same basis, reversed multiplication. Cached, so opposite(opposite(a))
  /// returns a itself while a is alive.
  Ptr opposite() const;

  bool is_associative() const;
  bool idempotents_ok() const;
  bool is_commutative() const;

 private:
  void derive();

  AlgebraData<Scalar> d_;
  std::vector<Index> generators_;
  std::vector<int> class_reps_;
  mutable std::mutex opposite_mutex_;
  mutable Ptr opposite_strong_;
  mutable std::weak_ptr<const Algebra> opposite_weak_;
};

template <class Scalar>
using AlgebraPtr = std::shared_ptr<const Algebra<Scalar>>;

template <class Scalar>
AlgebraPtr<Scalar> make_algebra(AlgebraData<Scalar> data) {
  return std::make_shared<const Algebra<Scalar>>(std::move(data));
}

template <class Scalar>
AlgebraPtr<Scalar> opposite(const AlgebraPtr<Scalar>& a) {
  return a->opposite();
}

/// Pointer identity or identical tables.
template <class Scalar>
bool same_algebra(const Algebra<Scalar>& a, const Algebra<Scalar>& b);

/// Throws AlgebraMismatch unless same_algebra(a, b).
template <class Scalar>
void require_same_algebra(const Algebra<Scalar>& a, const Algebra<Scalar>& b, const char* where);

}  // namespace tiltlab

#endif  // TILTLAB_ALGEBRA_ALGEBRA_HPP

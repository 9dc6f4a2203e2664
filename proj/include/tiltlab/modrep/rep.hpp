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
 * Finitely generated right modules as representations.
 *
 * M_v = M e_v is the component at vertex v. A basis element b in
 * e_t A e_s maps M_t to M_s, so act[b] is a dims[s] x dims[t] matrix acting on
 * column vectors. Since (m x) y = m (x y), act[x*y] = act[y] * act[x].
 *
 * A homomorphism f: M -> N is one block per vertex, f_v being
 * N.dims[v] x M.dims[v].
 */

#ifndef TILTLAB_MODREP_REP_HPP
#define TILTLAB_MODREP_REP_HPP

#include <string>
#include <vector>

#include "tiltlab/algebra/algebra.hpp"

namespace tiltlab {

template <class Scalar>
struct Rep {
  AlgebraPtr<Scalar> algebra;
  std::vector<Index> dims;
  std::vector<Mat<Scalar>> act;

  const FieldSpec& field() const { return algebra->field(); }
  const Algebra<Scalar>& alg() const { return *algebra; }
  Index total_dim() const;
  Index offset(int vertex) const;
  bool is_zero() const { return total_dim() == 0; }
  /// Action of an element that lies in e_t A e_s: a dims[s] x dims[t] matrix.
  Mat<Scalar> homogeneous_action(const Vec<Scalar>& element, int s, int t) const;
  /// Action of any element on the total space (column convention).
  Mat<Scalar> total_action(const Vec<Scalar>& element) const;
  Mat<Scalar> total_action(Index basis) const;
};

template <class Scalar>
struct Hom {
  std::vector<Mat<Scalar>> blocks;
};

template <class Scalar>
Hom<Scalar> operator+(const Hom<Scalar>& f, const Hom<Scalar>& g);
template <class Scalar>
Hom<Scalar> operator-(const Hom<Scalar>& f, const Hom<Scalar>& g);
template <class Scalar>
Hom<Scalar> operator*(const Scalar& c, const Hom<Scalar>& f);

/**
 * Validated module from arrow matrices of a path algebra; arrow_actions is
 * indexed like the quiver's arrows. Throws ShapeMismatch or RelationViolated.
 */
template <class Scalar>
Rep<Scalar> make_rep(const AlgebraPtr<Scalar>& algebra, const std::vector<Index>& dims,
                     const std::vector<Mat<Scalar>>& arrow_actions);

/// Validated module from one matrix per basis element.
template <class Scalar>
Rep<Scalar> rep_from_actions(const AlgebraPtr<Scalar>& algebra, const std::vector<Index>& dims,
                             std::vector<Mat<Scalar>> act);

/// Throws ShapeMismatch or RelationViolated if m is not a module.
template <class Scalar>
void validate_rep(const Rep<Scalar>& m);

template <class Scalar>
Rep<Scalar> zero_rep(const AlgebraPtr<Scalar>& algebra);

template <class Scalar>
bool is_hom(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f);

template <class Scalar>
Hom<Scalar> compose(const Hom<Scalar>& g, const Hom<Scalar>& f);

template <class Scalar>
Hom<Scalar> identity_hom(const Rep<Scalar>& m);

template <class Scalar>
Hom<Scalar> zero_hom(const Rep<Scalar>& m, const Rep<Scalar>& n);

template <class Scalar>
bool is_zero(const Hom<Scalar>& f);

/// Block-diagonal matrix on total spaces and back.
template <class Scalar>
Mat<Scalar> total_matrix(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f);

template <class Scalar>
Hom<Scalar> hom_from_total(const Rep<Scalar>& m, const Rep<Scalar>& n, const Mat<Scalar>& total);

template <class Scalar>
Index rank(const Hom<Scalar>& f);

template <class Scalar>
bool is_injective(const Rep<Scalar>& m, const Hom<Scalar>& f);

template <class Scalar>
bool is_surjective(const Rep<Scalar>& n, const Hom<Scalar>& f);

template <class Scalar>
bool is_isomorphism(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f);

/// Column-major concatenation of the blocks.
template <class Scalar>
Vec<Scalar> vectorize(const Hom<Scalar>& f);

template <class Scalar>
Hom<Scalar> unvectorize_hom(const Rep<Scalar>& m, const Rep<Scalar>& n, const Vec<Scalar>& v);

template <class Scalar>
struct Sub {
  Rep<Scalar> module;
  Hom<Scalar> inclusion;
};

template <class Scalar>
struct Quot {
  Rep<Scalar> module;
  Hom<Scalar> projection;
  /// Linear (not module) sections, projection_v * section_v = I.
  std::vector<Mat<Scalar>> section;
};

template <class Scalar>
struct Image {
  Rep<Scalar> module;
  Hom<Scalar> inclusion;
  Hom<Scalar> corestriction;
};

template <class Scalar>
struct DirectSum {
  Rep<Scalar> module;
  std::vector<Hom<Scalar>> injections;
  std::vector<Hom<Scalar>> projections;
};

template <class Scalar>
Sub<Scalar> kernel(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f);

template <class Scalar>
Quot<Scalar> cokernel(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f);

template <class Scalar>
Image<Scalar> image(const Rep<Scalar>& m, const Rep<Scalar>& n, const Hom<Scalar>& f);

/// Submodule spanned (per vertex) by the columns of generators_v, which
/// must already be closed under the action.
template <class Scalar>
Sub<Scalar> submodule(const Rep<Scalar>& m, const std::vector<Mat<Scalar>>& spanning);

/// Quotient by a submodule given by spanning columns per vertex.
template <class Scalar>
Quot<Scalar> quotient(const Rep<Scalar>& m, const std::vector<Mat<Scalar>>& spanning);

/// Vectors of M_v with their vertex.
template <class Scalar>
struct Element {
  int vertex;
  Vec<Scalar> vector;
};

/// Spanning columns, per vertex, of the submodule generated by elements.
template <class Scalar>
std::vector<Mat<Scalar>> generated_span(const Rep<Scalar>& m, const std::vector<Element<Scalar>>& elements);

template <class Scalar>
DirectSum<Scalar> direct_sum(const std::vector<Rep<Scalar>>& parts);

template <class Scalar>
Rep<Scalar> power(const Rep<Scalar>& m, int copies);

/// M rad A, spanned per vertex.
template <class Scalar>
std::vector<Mat<Scalar>> radical_span(const Rep<Scalar>& m);

/// M -> M / M rad A.
template <class Scalar>
Quot<Scalar> top(const Rep<Scalar>& m);

/// The linear dual, a module over the opposite algebra.
template <class Scalar>
Rep<Scalar> dual(const Rep<Scalar>& m);

/// D f : D n -> D m.
template <class Scalar>
Hom<Scalar> dual(const Hom<Scalar>& f);

/**
 * A module given by commuting total actions rho(b) on k^n (one n x n matrix
 * per basis element, satisfying rho(x*y) = rho(y) rho(x)) turned into a
 * graded Rep. basis[v] holds the columns of a basis of rho(e_v) k^n.
 */
template <class Scalar>
struct Graded {
  Rep<Scalar> module;
  std::vector<Mat<Scalar>> basis;

  /// Total coordinates of the graded basis, columns ordered by vertex.
  Mat<Scalar> change_of_basis() const;
};

template <class Scalar>
Graded<Scalar> graded_from_total(const AlgebraPtr<Scalar>& algebra, const std::vector<Mat<Scalar>>& rho,
                                 Index n);

/// "(1,0,2)".
std::string dims_string(const std::vector<Index>& dims);

}  // namespace tiltlab

#endif  // TILTLAB_MODREP_REP_HPP

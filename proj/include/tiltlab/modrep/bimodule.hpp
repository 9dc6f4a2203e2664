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
 * (S, R)-bimodules _S T_R: a right R-module T with a commuting left
 * S-action. Endomorphism algebras, tensor products over S, Hom modules and
 * the unit and counit maps between them.
 *
 * The left action is stored as one total matrix per S-basis element, acting
 * on the total space of T (in T's R-graded coordinates) with
 * left_total[x * y] = left_total[x] * left_total[y].
 */

#ifndef TILTLAB_MODREP_BIMODULE_HPP
#define TILTLAB_MODREP_BIMODULE_HPP

#include <cstdint>
#include <vector>

#include "tiltlab/modrep/decompose.hpp"

namespace tiltlab {

template <class Scalar>
struct Bimodule {
  AlgebraPtr<Scalar> left;
  Rep<Scalar> right;
  std::vector<Mat<Scalar>> left_total;

  const AlgebraPtr<Scalar>& right_algebra() const { return right.algebra; }
};

/// Throws RelationViolated unless the left action is a unital algebra map
/// commuting with the right action.
template <class Scalar>
void validate_bimodule(const Bimodule<Scalar>& t);

template <class Scalar>
struct EndoAlgebra {
  AlgebraPtr<Scalar> algebra;
  Bimodule<Scalar> bimodule;
  Decomposition<Scalar> decomposition;
  /// Each basis element of the algebra as an endomorphism of the module.
  std::vector<Hom<Scalar>> endomorphisms;
};

/**
 * S = End(M) with one vertex per indecomposable summand (copies of a summand
 * share a vertex class), x * y = x o y, and M as an (S, R)-bimodule.
 * Throws ZeroModule for M = 0.
 */
template <class Scalar>
EndoAlgebra<Scalar> endo_algebra(const Rep<Scalar>& m, std::uint64_t seed = 0);

/// _A A_A.
template <class Scalar>
Bimodule<Scalar> regular_bimodule(const AlgebraPtr<Scalar>& a);

/// D N as an (A, k)-bimodule, so that Tor_i^A(M, D N) is tor_dim(M, ., i).
template <class Scalar>
Bimodule<Scalar> dual_bimodule(const Rep<Scalar>& n);

/// _S T as a right module over the opposite of S.
template <class Scalar>
Graded<Scalar> left_module_op(const Bimodule<Scalar>& t);

/// The same space as an (R^op, S^op)-bimodule.
template <class Scalar>
Bimodule<Scalar> flip(const Bimodule<Scalar>& t);

/// D(_S T) as a right S-module.
template <class Scalar>
Rep<Scalar> dual_left(const Bimodule<Scalar>& t);

template <class Scalar>
struct TensorProduct {
  Rep<Scalar> module;
  /// Per R-vertex j: N_total (x) T_j -> (N (x)_S T)_j and a linear section.
  std::vector<Mat<Scalar>> projection;
  std::vector<Mat<Scalar>> section;
};

/// N (x)_S T for a right S-module N, as a right R-module.
template <class Scalar>
TensorProduct<Scalar> tensor_over(const Rep<Scalar>& n, const Bimodule<Scalar>& t);

template <class Scalar>
struct HomModule {
  /// Hom_R(T, M) as a right S-module, f . s = f o (s acting on T).
  Graded<Scalar> graded;
  HomSpace<Scalar> space;

  const Rep<Scalar>& module() const { return graded.module; }
  /// The homomorphism T -> M with graded coordinates c.
  Hom<Scalar> element(const Vec<Scalar>& c) const;
};

template <class Scalar>
HomModule<Scalar> hom_module(const Bimodule<Scalar>& t, const Rep<Scalar>& m);

template <class Scalar>
struct NaturalMapReport {
  Rep<Scalar> source;
  Rep<Scalar> target;
  /// One matrix per vertex, target.dims[v] x source.dims[v].
  std::vector<Mat<Scalar>> matrices;
  bool is_injective = false;
  bool is_surjective = false;
  bool is_isomorphism = false;
};

/// theta: N -> Hom_R(T, N (x)_S T), n -> (t -> n (x) t).
template <class Scalar>
NaturalMapReport<Scalar> theta_map(const Rep<Scalar>& n, const Bimodule<Scalar>& t);

/// nu: Hom_R(T, M) (x)_S T -> M, f (x) t -> f(t).
template <class Scalar>
NaturalMapReport<Scalar> nu_map(const Rep<Scalar>& m, const Bimodule<Scalar>& t);

/**
 * For a module C over a one-vertex algebra B and the tensor algebra B Q,
 * the B Q-module C (x) (P(1) + ... + P(n)), P(i) the indecomposable
 * projectives of k Q.
 */
template <class Scalar>
Rep<Scalar> lift_to_path_algebra(const AlgebraPtr<Scalar>& tensor, const Rep<Scalar>& c, const Quiver& q);

}  // namespace tiltlab

#endif  // TILTLAB_MODREP_BIMODULE_HPP

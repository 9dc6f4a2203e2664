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

#ifndef TILTLAB_ALGEBRA_PATH_ALGEBRA_HPP
#define TILTLAB_ALGEBRA_PATH_ALGEBRA_HPP

#include "tiltlab/algebra/algebra.hpp"

namespace tiltlab {

constexpr int kDefaultPathLengthCap = 64;

/**
 * kQ / (relations), computed in kQ / J^N for increasing N until the dimension
 * stabilizes. Basis: vertices, then arrows, then longer paths that are not
 * leading terms of the relation ideal.
 *
 * Throws MalformedRelation for terms of length < 2 or non-parallel terms, and
 * InfiniteDimensional when the dimension still grows at the path-length cap.
 */
template <class Scalar>
AlgebraPtr<Scalar> build_path_algebra(const Quiver& q, const std::vector<Relation<Scalar>>& relations,
                                      const FieldSpec& f, int path_length_cap = kDefaultPathLengthCap);

/**
 * base (x) kq for a commutative base presented on one vertex: a copy of every
 * base loop at each vertex of q, the base relations at each vertex, and
 * a*l_i - l_j*a for every arrow a: i -> j. Loop copies are named
 * "<loop>_<vertex>".
 */
template <class Scalar>
AlgebraPtr<Scalar> build_tensor_algebra(const Algebra<Scalar>& base, const Quiver& q);

/// The path algebra of 1 -> 2 -> ... -> n (arrows a1, a2, ...).
Quiver linear_quiver(int n);

}  // namespace tiltlab

#endif  // TILTLAB_ALGEBRA_PATH_ALGEBRA_HPP

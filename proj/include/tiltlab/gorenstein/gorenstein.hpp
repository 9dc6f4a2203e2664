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
 * Gorenstein projective and injective modules and Gorenstein dimensions.
 *
 * Over an Iwanaga-Gorenstein algebra with id(A_A) = g a finitely generated M
 * is Gorenstein projective iff Ext^i(M, A) = 0 for 1 <= i <= g, which makes
 * the test exact. Elsewhere a nonzero Ext^i(M, A) still refutes, but vanishing
 * is only known up to the degree bound.
 */

#ifndef TILTLAB_GORENSTEIN_GORENSTEIN_HPP
#define TILTLAB_GORENSTEIN_GORENSTEIN_HPP

#include <string>

#include "tiltlab/tiltcheck/tiltcheck.hpp"

namespace tiltlab {

struct GorensteinProfile {
  /// id(A_A) and id(_A A).
  DimResult right_selfinj_dim;
  DimResult left_selfinj_dim;
  bool is_gorenstein = false;

  /// The common self-injective dimension; meaningful when is_gorenstein.
  Index dimension() const { return std::max(right_selfinj_dim.value, left_selfinj_dim.value); }
  /// The same algebra seen from the opposite side.
  GorensteinProfile opposite() const { return GorensteinProfile{left_selfinj_dim, right_selfinj_dim, is_gorenstein}; }
};

template <class Scalar>
GorensteinProfile detect_gorenstein(const AlgebraPtr<Scalar>& a, Index bound);

/// Gorenstein projectivity with the algebra's profile.
template <class Scalar>
Verdict is_gorenstein_projective(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound);

/// Gorenstein injectivity tested directly: Ext^i(D A, M) = 0.
template <class Scalar>
Verdict is_gorenstein_injective(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound);

/**
 * Least d with Omega^d M Gorenstein projective. Certified when the answer at
 * d is certified true and every smaller syzygy is certified not Gorenstein
 * projective; always the case over Gorenstein algebras, where d <= g.
 * The witness records the critical syzygy and the right tail of its complete
 * resolution.
 */
template <class Scalar>
DimResult gpd(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound);

template <class Scalar>
DimResult gpd(const Rep<Scalar>& m, Index bound);

/// gpd(D M) over the opposite algebra; profile is that of M's algebra.
template <class Scalar>
DimResult gid(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound);

template <class Scalar>
DimResult gid(const Rep<Scalar>& m, Index bound);

/// Least d with the d-th cosyzygy Gorenstein injective, by the direct test.
template <class Scalar>
DimResult gid_direct(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound);

/// Gorenstein flat dimension, equal to gpd for finitely generated modules.
template <class Scalar>
DimResult gfd(const Rep<Scalar>& m, const GorensteinProfile& profile, Index bound) {
  return gpd(m, profile, bound);
}

/// Right half of a complete projective resolution of a Gorenstein projective
/// m: injective left add(A)-approximations with Ext^1(cokernel, A) = 0.
template <class Scalar>
CoresolutionResult<Scalar> gp_right_tail(const Rep<Scalar>& m, Index stages);

}  // namespace tiltlab

#endif  // TILTLAB_GORENSTEIN_GORENSTEIN_HPP

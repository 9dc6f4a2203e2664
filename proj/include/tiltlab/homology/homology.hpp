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
 * Minimal resolutions, Ext, Tor and the classical homological dimensions.
 *
 * Ext^i(M, N) is read off the cochain complex Hom(P_*, N) of the minimal
 * projective resolution: Hom(P(v), N) = N_v, so the differentials are
 * matrices of actions of algebra elements on N.
 */

#ifndef TILTLAB_HOMOLOGY_HOMOLOGY_HPP
#define TILTLAB_HOMOLOGY_HOMOLOGY_HPP

#include <optional>
#include <vector>

#include "tiltlab/homology/certify.hpp"
#include "tiltlab/modrep/bimodule.hpp"
#include "tiltlab/modrep/standard.hpp"

namespace tiltlab {

enum class ResolutionKind { projective, injective };

/**
 * Projective: ... -> P_1 -> P_0 -> M -> 0 with syzygies[i] = Omega^i M and
 * differentials[0] = P_0 -> M, differentials[i] = P_i -> P_{i-1}.
 * Injective: 0 -> M -> I^0 -> I^1 -> ... with syzygies[i] the cosyzygies,
 * differentials[0] = M -> I^0, differentials[i] = I^{i-1} -> I^i.
 */
template <class Scalar>
struct Resolution {
  ResolutionKind kind = ResolutionKind::projective;
  Rep<Scalar> target;
  std::vector<Rep<Scalar>> terms;
  /// Vertices of the indecomposable summands of each term.
  std::vector<std::vector<int>> vertices;
  std::vector<Hom<Scalar>> differentials;
  /// differentials[i], i >= 1, as algebra elements (projective kind only).
  std::vector<FreeMap<Scalar>> free_maps;
  std::vector<Rep<Scalar>> syzygies;
  /// Set when a zero syzygy was reached: the dimension is length.
  bool terminated = false;
  Index length = 0;
  bool minimal = true;
};

/// Computes Omega^0 .. Omega^{length+1} (fewer when one vanishes).
template <class Scalar>
Resolution<Scalar> min_proj_resolution(const Rep<Scalar>& m, Index length);

/// Dual of the minimal projective resolution of D M.
template <class Scalar>
Resolution<Scalar> min_inj_coresolution(const Rep<Scalar>& m, Index length);

template <class Scalar>
Rep<Scalar> syzygy(const Rep<Scalar>& m, Index i);

template <class Scalar>
Rep<Scalar> cosyzygy(const Rep<Scalar>& m, Index i);

template <class Scalar>
bool is_projective(const Rep<Scalar>& m);

template <class Scalar>
bool is_injective_module(const Rep<Scalar>& m);

/// Checks d o d = 0, exactness at the computed terms and radical differentials.
template <class Scalar>
bool verify_resolution(const Resolution<Scalar>& r);

/// dim Ext^i(M, N); the resolution must reach degree i + 1 or terminate.
template <class Scalar>
Index ext_dim(const Resolution<Scalar>& res, const Rep<Scalar>& n, Index i);

/// A single degree only needs the resolution up to i + 1, so it is exact.
template <class Scalar>
Index ext_dim(const Rep<Scalar>& m, const Rep<Scalar>& n, Index i);

/**
 * Ext^i(M, N) = 0 for all i >= 1. Certified if a nonzero group is found, or
 * all groups vanish up to the projective dimension of M or the injective
 * dimension of N; otherwise up to the bound.
 */
template <class Scalar>
Verdict ext_vanishes_all(const Rep<Scalar>& m, const Rep<Scalar>& n, Index bound);

/// dim Tor_i^S(N, T) from the resolution of N tensored with T.
template <class Scalar>
Index tor_dim(const Resolution<Scalar>& res, const Bimodule<Scalar>& t, Index i);

template <class Scalar>
Index tor_dim(const Rep<Scalar>& n, const Bimodule<Scalar>& t, Index i);

template <class Scalar>
DimResult proj_dim(const Rep<Scalar>& m, Index bound);

/// pd of D M over the opposite algebra.
template <class Scalar>
DimResult inj_dim(const Rep<Scalar>& m, Index bound);

/// Finitely generated flat modules over an Artin algebra are projective.
template <class Scalar>
DimResult flat_dim(const Rep<Scalar>& m, Index bound) {
  return proj_dim(m, bound);
}

}  // namespace tiltlab

#endif  // TILTLAB_HOMOLOGY_HOMOLOGY_HPP

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
 * Minimal projective presentations, the transpose Tr M = Coker Hom(f, A) and
 * the Auslander-Reiten translates D Tr and Tr D.
 */

#ifndef TILTLAB_MODREP_TRANSPOSE_HPP
#define TILTLAB_MODREP_TRANSPOSE_HPP

#include "tiltlab/modrep/standard.hpp"

namespace tiltlab {

/// P1 --f--> P0 --cover--> M -> 0 with both covers minimal.
template <class Scalar>
struct Presentation {
  Approximation<Scalar> cover;
  FreeMap<Scalar> relations;
};

template <class Scalar>
Presentation<Scalar> minimal_presentation(const Rep<Scalar>& m);

/// A module over the opposite algebra.
template <class Scalar>
Rep<Scalar> transpose(const Rep<Scalar>& m);

/// D Tr M.
template <class Scalar>
Rep<Scalar> ar_translate(const Rep<Scalar>& m);

/// Tr D M.
template <class Scalar>
Rep<Scalar> ar_translate_inverse(const Rep<Scalar>& m);

}  // namespace tiltlab

#endif  // TILTLAB_MODREP_TRANSPOSE_HPP

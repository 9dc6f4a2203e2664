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
 * Hom spaces as null spaces of the intertwining system.
 */

#ifndef TILTLAB_MODREP_HOM_HPP
#define TILTLAB_MODREP_HOM_HPP

#include <optional>
#include <vector>

#include "tiltlab/modrep/rep.hpp"

namespace tiltlab {

template <class Scalar>
struct HomSpace {
  Rep<Scalar> source;
  Rep<Scalar> target;
  std::vector<Hom<Scalar>> basis;
  /// Columns are the vectorized basis elements.
  Mat<Scalar> vectors;
  /// Left inverse of vectors.
  Mat<Scalar> coordinate_map;

  Index dim() const { return static_cast<Index>(basis.size()); }
  Vec<Scalar> coordinates(const Hom<Scalar>& f) const;
  Hom<Scalar> element(const Vec<Scalar>& c) const;
};

template <class Scalar>
HomSpace<Scalar> hom_space(const Rep<Scalar>& m, const Rep<Scalar>& n);

template <class Scalar>
Index hom_dim(const Rep<Scalar>& m, const Rep<Scalar>& n);

/// Matrix whose columns span the given homs, vectorized.
template <class Scalar>
Mat<Scalar> hom_columns(const std::vector<Hom<Scalar>>& homs, Index length);

/// Some g with g o f = h (g: target(f) -> target(h)), if one exists.
template <class Scalar>
std::optional<Hom<Scalar>> factor_through_source(const Rep<Scalar>& x, const Rep<Scalar>& y, const Rep<Scalar>& z,
                                                 const Hom<Scalar>& f, const Hom<Scalar>& h);

/// Some g with f o g = h (f: y -> z, h: x -> z, g: x -> y), if one exists.
template <class Scalar>
std::optional<Hom<Scalar>> factor_through_target(const Rep<Scalar>& x, const Rep<Scalar>& y, const Rep<Scalar>& z,
                                                 const Hom<Scalar>& f, const Hom<Scalar>& h);

}  // namespace tiltlab

#endif  // TILTLAB_MODREP_HOM_HPP

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
 * Krull-Schmidt decomposition by Fitting splitting, isomorphism tests, and
 * approximations by add(T).
 *
 * A module is accepted as indecomposable only when its endomorphism ring is
 * verified to be local with residue field the base field ("split local").
 * Modules whose endomorphism ring is local but not split make decompose
 * throw DecompositionInconclusive.
 */

#ifndef TILTLAB_MODREP_DECOMPOSE_HPP
#define TILTLAB_MODREP_DECOMPOSE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tiltlab/modrep/hom.hpp"

namespace tiltlab {

inline constexpr int kFittingRetries = 32;

template <class Scalar>
struct Summand {
  /// Indecomposable representative of the isomorphism class.
  Rep<Scalar> module;
  int multiplicity = 0;
  /// Split witnesses, one per copy: module -> input and input -> module.
  std::vector<Hom<Scalar>> inclusions;
  std::vector<Hom<Scalar>> projections;
  /// Basis of the radical of End(module).
  std::vector<Hom<Scalar>> radical;
};

/// Summands are sorted by dimension vector.
template <class Scalar>
struct Decomposition {
  Rep<Scalar> input;
  std::vector<Summand<Scalar>> summands;

  int num_indecomposables() const;
};

template <class Scalar>
Decomposition<Scalar> decompose(const Rep<Scalar>& m, std::uint64_t seed = 0);

/// Basis of rad End(m) when End(m) is split local, nullopt otherwise.
template <class Scalar>
std::optional<std::vector<Hom<Scalar>>> split_local_radical(const HomSpace<Scalar>& end);

template <class Scalar>
bool is_indecomposable(const Rep<Scalar>& m, std::uint64_t seed = 0);

/// Isomorphism between modules with split local endomorphism rings.
template <class Scalar>
std::optional<Hom<Scalar>> indecomposable_isomorphism(const Rep<Scalar>& m, const Rep<Scalar>& n);

template <class Scalar>
std::optional<Hom<Scalar>> find_isomorphism(const Rep<Scalar>& m, const Rep<Scalar>& n, std::uint64_t seed = 0);

template <class Scalar>
bool isomorphic(const Rep<Scalar>& m, const Rep<Scalar>& n, std::uint64_t seed = 0);

/// Inverse of an isomorphism, vertex by vertex.
template <class Scalar>
Hom<Scalar> inverse_hom(const Rep<Scalar>& m, const Hom<Scalar>& f);

/// A map x -> object (or object -> x) with object in add(T).
template <class Scalar>
struct AddMap {
  Rep<Scalar> object;
  Hom<Scalar> map;
  /// Class index (into AddCategory::indecomposables) of each summand of
  /// object, in order; empty for the evaluation maps.
  std::vector<int> classes;
};

template <class Scalar>
class AddCategory {
 public:
  explicit AddCategory(const Rep<Scalar>& t, std::uint64_t seed = 0);

  const Rep<Scalar>& generator() const { return decomposition_.input; }
  const Decomposition<Scalar>& decomposition() const { return decomposition_; }
  int num_classes() const { return static_cast<int>(decomposition_.summands.size()); }
  const Rep<Scalar>& indecomposable(int k) const { return decomposition_.summands[k].module; }

  bool contains(const Rep<Scalar>& x) const;
  /// Minimal left add(T)-approximation.
  AddMap<Scalar> left_approximation(const Rep<Scalar>& x) const;
  /// Minimal right add(T)-approximation.
  AddMap<Scalar> right_approximation(const Rep<Scalar>& x) const;

 private:
  /// Basis of the radical maps U_l -> U_k.
  const std::vector<Hom<Scalar>>& radical_maps(int l, int k) const { return radical_[l][k]; }
  Rep<Scalar> assemble(const std::vector<int>& classes) const;

  Decomposition<Scalar> decomposition_;
  std::vector<std::vector<std::vector<Hom<Scalar>>>> radical_;
  std::uint64_t seed_;
};

/// x -> t^d assembled from a basis of Hom(x, t).
template <class Scalar>
AddMap<Scalar> evaluation_preenvelope(const Rep<Scalar>& x, const Rep<Scalar>& t);

/// t^d -> x assembled from a basis of Hom(t, x).
template <class Scalar>
AddMap<Scalar> evaluation_precover(const Rep<Scalar>& t, const Rep<Scalar>& x);

}  // namespace tiltlab

#endif  // TILTLAB_MODREP_DECOMPOSE_HPP

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
 * Projectives, injectives, simples, maps between free modules given by
 * algebra elements, projective covers and injective envelopes.
 */

#ifndef TILTLAB_MODREP_STANDARD_HPP
#define TILTLAB_MODREP_STANDARD_HPP

#include <vector>

#include "tiltlab/modrep/rep.hpp"

namespace tiltlab {

/// P(i) = e_i A with basis the basis elements b with target(b) = i.
template <class Scalar>
Rep<Scalar> projective(const AlgebraPtr<Scalar>& a, int vertex);

/// I(i) = D(A e_i), built as the dual of the projective over the opposite.
template <class Scalar>
Rep<Scalar> injective(const AlgebraPtr<Scalar>& a, int vertex);

/// S(i) = top P(i).
template <class Scalar>
Rep<Scalar> simple(const AlgebraPtr<Scalar>& a, int vertex);

/// A_A; M_v is spanned by the basis elements with source v.
template <class Scalar>
Rep<Scalar> regular_module(const AlgebraPtr<Scalar>& a);

/// D(_A A), the minimal injective cogenerator up to multiplicities.
template <class Scalar>
Rep<Scalar> dual_regular(const AlgebraPtr<Scalar>& a);

/// Position of each basis element inside its component of P(vertex), or -1.
template <class Scalar>
std::vector<Index> projective_positions(const Algebra<Scalar>& a, int vertex);

/// P(w_0) + P(w_1) + ...
template <class Scalar>
Rep<Scalar> free_module(const AlgebraPtr<Scalar>& a, const std::vector<int>& vertices);

/**
 * A map from P(from_0) + ... to P(to_0) + ..., sending the generator
 * e_{from_l} to sum_k elem[k][l] with elem[k][l] in e_{to_k} A e_{from_l}.
 */
template <class Scalar>
struct FreeMap {
  AlgebraPtr<Scalar> algebra;
  std::vector<int> from;
  std::vector<int> to;
  std::vector<std::vector<Vec<Scalar>>> elem;
};

template <class Scalar>
Hom<Scalar> materialize(const FreeMap<Scalar>& f);

/// Reads a homomorphism between free modules back as algebra elements.
template <class Scalar>
FreeMap<Scalar> extract(const AlgebraPtr<Scalar>& a, const std::vector<int>& from, const std::vector<int>& to,
                        const Hom<Scalar>& f);

/// Hom_A(f, A) as a map of free right modules over the opposite algebra.
template <class Scalar>
FreeMap<Scalar> dualize(const FreeMap<Scalar>& f);

/// True if every coefficient lies on a radical basis element.
template <class Scalar>
bool is_radical(const FreeMap<Scalar>& f);

/// module = free_module(vertices); map is a projective cover (or an
/// injective envelope, with module the sum of the I(vertices)).
template <class Scalar>
struct Approximation {
  Rep<Scalar> module;
  std::vector<int> vertices;
  Hom<Scalar> map;
};

/// Generators are taken at class representatives, in vertex order.
template <class Scalar>
Approximation<Scalar> projective_cover(const Rep<Scalar>& m);

template <class Scalar>
Approximation<Scalar> injective_envelope(const Rep<Scalar>& m);

}  // namespace tiltlab

#endif  // TILTLAB_MODREP_STANDARD_HPP

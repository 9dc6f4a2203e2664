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
 * Checkers for tilting, Wakamatsu tilting and cotilting modules, the
 * add(T)-coresolutions behind them, and tensor faithfulness.
 *
 * Every checker returns an Outcome: refuted only on a certified
 * counterexample, not_verified when some ingredient is only known up to the
 * degree bound.
 */

#ifndef TILTLAB_TILTCHECK_TILTCHECK_HPP
#define TILTLAB_TILTCHECK_TILTCHECK_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/homology/homology.hpp"

namespace tiltlab {

/**
 * 0 -> x -> T^0 -> T^1 -> ... (coresolution) or ... -> T_1 -> T_0 -> x -> 0
 * (precover resolution) built from minimal add(t)-approximations.
 */
template <class Scalar>
struct CoresolutionResult {
  /// T^0, T^1, ... (or T_0, T_1, ...), all in add(t).
  std::vector<Rep<Scalar>> chain;
  /// x -> T^0, T^0 -> T^1, ... (or T_0 -> x, T_1 -> T_0, ...).
  std::vector<Hom<Scalar>> differentials;
  /// Cokernels x_1, x_2, ... (kernels for the precover resolution).
  std::vector<Rep<Scalar>> cokernels;
  bool success = false;
  /// Index of the last term when success.
  Index length = 0;
  Outcome outcome = Outcome::not_verified;
  std::string reason;
};

/// Iterated minimal left add(t)-approximations of x, with Ext^1(x_i, t) = 0
/// checked at every cokernel.
template <class Scalar>
CoresolutionResult<Scalar> add_coresolution(const Rep<Scalar>& x, const Rep<Scalar>& t, Index maxlen,
                                            std::uint64_t seed = 0);

/// Iterated minimal right add(t)-approximations of x, with Ext^1(t, k_i) = 0
/// checked at every kernel.
template <class Scalar>
CoresolutionResult<Scalar> add_precover_resolution(const Rep<Scalar>& t, const Rep<Scalar>& x, Index maxlen,
                                                   std::uint64_t seed = 0);

template <class Scalar>
struct TiltingReport {
  Index n = 0;
  DimResult pd;
  Verdict selforth;
  CoresolutionResult<Scalar> coresolution;
  Outcome outcome = Outcome::not_verified;
  bool is_tilting() const { return outcome == Outcome::verified; }
};

/// n-tilting: pd(t) <= n, Ext^{i>0}(t, t) = 0 and R has an add(t)-coresolution
/// of length at most n.
template <class Scalar>
TiltingReport<Scalar> check_tilting(const Rep<Scalar>& t, Index n, Index bound, std::uint64_t seed = 0);

template <class Scalar>
struct WakamatsuReport {
  EndoAlgebra<Scalar> endo;
  /// Ext^{i>0}(T_R, T_R) and Ext^{i>0}(_S T, _S T). The left condition is
  /// not evaluated once the other conditions already refute.
  Verdict right_selforth;
  std::optional<Verdict> left_selforth;
  /// Rank of R -> End(_S T) against dim R and dim End(_S T).
  Index homothety_rank = 0;
  Index algebra_dim = 0;
  Index left_endomorphism_dim = 0;
  bool homothety_iso = false;
  Outcome outcome = Outcome::not_verified;
  bool is_wakamatsu() const { return outcome == Outcome::verified; }
};

/// The three conditions on _S T_R with S = End(T_R). Throws ZeroModule.
template <class Scalar>
WakamatsuReport<Scalar> check_wakamatsu(const Rep<Scalar>& t, Index bound, std::uint64_t seed = 0);

template <class Scalar>
struct CotiltingReport {
  DimResult id_right;
  Verdict selforth;
  /// Precover resolutions of the basic injective cogenerator and of D(R).
  CoresolutionResult<Scalar> over_cogenerator;
  CoresolutionResult<Scalar> over_dual_regular;
  WakamatsuReport<Scalar> wakamatsu;
  /// Evaluated only when it can change variant (d): id(C_R) certified finite
  /// and the Wakamatsu conditions verified.
  std::optional<DimResult> id_left;
  /// Sampled modules of the left perpendicular class, and the first failure.
  Index sample_size = 0;
  std::string sample_failure;

  Outcome variant_a = Outcome::not_verified;
  Outcome variant_b = Outcome::not_verified;
  Outcome variant_c = Outcome::not_verified;
  Outcome variant_d = Outcome::not_verified;
  /// Variants a, c and d agree.
  bool agreement = false;
  bool is_cotilting() const { return agreement && variant_a == Outcome::verified; }
};

/// The four cotilting conditions in their finite forms. Throws ZeroModule.
template <class Scalar>
CotiltingReport<Scalar> check_cotilting(const Rep<Scalar>& c, Index bound, std::uint64_t seed = 0);

/// Modules X with Ext^{i>0}(X, c) = 0 certified, drawn from simples,
/// projectives, injectives and their syzygies and cosyzygies up to depth 4.
template <class Scalar>
std::vector<Rep<Scalar>> perpendicular_sample(const Rep<Scalar>& c, Index bound);

struct FaithfulReport {
  bool value = false;
  /// The simple module killing T when value is false.
  std::string witness;
};

/// N (x)_S T = 0 forces N = 0 and T (x)_R M = 0 forces M = 0, checked on
/// simple modules.
template <class Scalar>
FaithfulReport check_tensorly_faithful(const Bimodule<Scalar>& t);

}  // namespace tiltlab

#endif  // TILTLAB_TILTCHECK_TILTCHECK_HPP

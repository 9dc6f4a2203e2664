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
 * Auslander and Bass classes of a bimodule _S T_R, the Foxby equivalence
 * between them, module catalogs, and the harness that checks the
 * equivalences and lemmas of the theory on catalogs.
 */

#ifndef TILTLAB_FOXBY_FOXBY_HPP
#define TILTLAB_FOXBY_FOXBY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tiltlab/gorenstein/gorenstein.hpp"

namespace tiltlab {

template <class Scalar>
struct MembershipReport {
  /// Auslander: Tor_{>0}(N, T), Ext^{>0}(T, N (x) T). Bass: Ext^{>0}(T, M),
  /// Tor_{>0}(Hom(T, M), T).
  Verdict tor_vanishing;
  Verdict ext_vanishing;
  NaturalMapReport<Scalar> natural_map;
  Verdict member;
};

/// N in the Auslander class of T.
template <class Scalar>
MembershipReport<Scalar> auslander_member(const Rep<Scalar>& n, const Bimodule<Scalar>& t, Index bound);

/// M in the Bass class of T.
template <class Scalar>
MembershipReport<Scalar> bass_member(const Rep<Scalar>& m, const Bimodule<Scalar>& t, Index bound);

enum class FoxbyDirection { auslander, bass };

template <class Scalar>
struct Roundtrip {
  /// Hom(T, N (x) T) or Hom(T, M) (x) T.
  Rep<Scalar> module;
  /// theta: N -> module, or nu: module -> M.
  Hom<Scalar> map;
  bool is_isomorphism = false;
};

/// Throws NotAMember when membership is refuted.
template <class Scalar>
Roundtrip<Scalar> foxby_roundtrip(const Rep<Scalar>& x, const Bimodule<Scalar>& t, FoxbyDirection direction,
                                  Index bound);

/// 0 -> k --f--> x --g--> y -> 0.
template <class Scalar>
struct ShortExact {
  Rep<Scalar> k;
  Rep<Scalar> x;
  Rep<Scalar> y;
  Hom<Scalar> f;
  Hom<Scalar> g;
};

/// Throws NotExact unless the sequence is short exact.
template <class Scalar>
void require_exact(const ShortExact<Scalar>& s);

template <class Scalar>
struct TwoOfThreeReport {
  bool in_hypothesis = false;
  Verdict members[3];
  /// verified: consistent; refuted: two certified members and a certified
  /// non-member; not_verified: otherwise undecided.
  Outcome outcome = Outcome::not_verified;
  std::string note;
};

template <class Scalar>
TwoOfThreeReport<Scalar> two_of_three_check(const ShortExact<Scalar>& s, const Bimodule<Scalar>& t,
                                            FoxbyDirection which, Index bound);

/// Seeded extension 0 -> x -> e -> y -> 0, pushed out from a projective
/// cover of y along a random map Omega y -> x. Split when Ext^1(y, x) = 0.
template <class Scalar>
ShortExact<Scalar> random_extension(const Rep<Scalar>& y, const Rep<Scalar>& x, Rng& rng);

struct CatalogSpec {
  /// Depth of syzygies and cosyzygies of simples.
  Index depth = 4;
  /// Number of seeded random extensions kept besides the indecomposables.
  int extensions = 0;
  std::uint64_t seed = 0;

  /// "depth=4,extensions=10,seed=1"; missing keys keep defaults.
  static CatalogSpec parse(const std::string& text);
  std::string str() const;
};

template <class Scalar>
struct Catalog {
  /// Pairwise non-isomorphic indecomposables, sorted by dimension vector.
  std::vector<Rep<Scalar>> indecomposables;
  /// Random extensions of catalog modules, as sequences.
  std::vector<ShortExact<Scalar>> extensions;

  /// Indecomposables followed by the middle terms of the extensions.
  std::vector<Rep<Scalar>> modules() const;
};

template <class Scalar>
Catalog<Scalar> build_catalog(const AlgebraPtr<Scalar>& a, const CatalogSpec& spec);

/// A module T_R (or C_R) with S = End(T_R) and the bimodule _S T_R.
template <class Scalar>
struct Setup {
  std::string name;
  Rep<Scalar> module;
  EndoAlgebra<Scalar> endo;

  const Bimodule<Scalar>& bimodule() const { return endo.bimodule; }
  const AlgebraPtr<Scalar>& left() const { return endo.algebra; }
  const AlgebraPtr<Scalar>& right() const { return module.algebra; }
};

/// Throws BadSetup for the zero module.
template <class Scalar>
Setup<Scalar> make_setup(const std::string& name, const Rep<Scalar>& t, std::uint64_t seed = 0);

struct NamedVerdict {
  std::string label;
  Verdict verdict;
};

struct HarnessEntry {
  /// "S-module (1,0,1)" style description.
  std::string module;
  std::vector<NamedVerdict> verdicts;
  /// verified: consistent; refuted: certified mismatch; not_verified:
  /// inconclusive.
  Outcome outcome = Outcome::verified;
  std::string note;
};

struct HarnessReport {
  std::string theorem;
  std::string setup;
  std::string catalog;
  Index catalog_size = 0;
  /// Hypotheses with their verdicts; any failure makes the run exploratory.
  std::vector<NamedVerdict> hypotheses;
  bool exploratory = false;
  std::vector<HarnessEntry> entries;
  std::vector<std::string> mismatches;
  std::vector<std::string> inconclusive;
  /// Mismatches found while a hypothesis failed; never counted as failures.
  std::vector<std::string> exploratory_mismatches;
  bool all_consistent() const { return mismatches.empty(); }
};

/// The supported identifiers, in a fixed order.
const std::vector<std::string>& theorem_ids();

/// Runs one theorem or lemma over catalogs of the setup's algebras. Throws
/// BadSetup for an unknown identifier.
template <class Scalar>
HarnessReport verify_theorem(const std::string& id, const Setup<Scalar>& setup, const CatalogSpec& spec,
                             Index bound);

}  // namespace tiltlab

#endif  // TILTLAB_FOXBY_FOXBY_HPP

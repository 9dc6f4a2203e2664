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
 * Certified answers versus answers checked up to a degree bound.
 */

#ifndef TILTLAB_HOMOLOGY_CERTIFY_HPP
#define TILTLAB_HOMOLOGY_CERTIFY_HPP

#include <algorithm>
#include <string>

#include "tiltlab/algebra/algebra.hpp"

namespace tiltlab {

/// max(30, 2 dim A).
template <class Scalar>
Index default_bound(const Algebra<Scalar>& a) {
  return std::max<Index>(30, 2 * a.dim());
}

struct Status {
  bool certified = true;
  /// The degree bound of an up-to-bound answer.
  Index bound = 0;

  static Status certified_status() { return Status{true, 0}; }
  static Status up_to_bound(Index b) { return Status{false, b}; }
  /// "certified" or "up_to_bound:B".
  std::string str() const { return certified ? "certified" : "up_to_bound:" + std::to_string(bound); }
  /// The weaker of two statuses.
  friend Status weakest(const Status& a, const Status& b) {
    if (!a.certified && !b.certified) return Status::up_to_bound(std::min(a.bound, b.bound));
    return a.certified ? b : a;
  }
  friend bool operator==(const Status&, const Status&) = default;
};

/// A yes/no answer with its status.
struct Verdict {
  bool value = false;
  Status status;
  std::string witness;

  bool certified_true() const { return value && status.certified; }
  bool certified_false() const { return !value && status.certified; }
};

/// A dimension n (finite) or AtLeast(bound).
struct DimResult {
  bool finite = true;
  Index value = 0;
  Status status;
  std::string witness;

  static DimResult exact(Index v, std::string witness) {
    return DimResult{true, v, Status::certified_status(), std::move(witness)};
  }
  static DimResult at_least(Index bound, std::string witness) {
    return DimResult{false, bound, Status::up_to_bound(bound), std::move(witness)};
  }
  bool certified_finite() const { return finite && status.certified; }
  /// "3" or "AtLeast(30)".
  std::string str() const { return finite ? std::to_string(value) : "AtLeast(" + std::to_string(value) + ")"; }
};

/// Three-valued result of a checker: refuted means a certified
/// counterexample, not_verified means only a bounded or partial check passed.
enum class Outcome { verified, refuted, not_verified };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return "verified";
    case Outcome::refuted:
      return "refuted";
    case Outcome::not_verified:
      return "not_verified";
  }
  return "";
}

/// Refuted dominates not_verified, which dominates verified.
inline Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::refuted || b == Outcome::refuted) return Outcome::refuted;
  if (a == Outcome::not_verified || b == Outcome::not_verified) return Outcome::not_verified;
  return Outcome::verified;
}

inline Outcome outcome_of(const Verdict& v) {
  if (!v.value) return Outcome::refuted;
  return v.status.certified ? Outcome::verified : Outcome::not_verified;
}

/// Finiteness of a dimension: AtLeast(B) is never a refutation.
inline Outcome finite_outcome(const DimResult& d) {
  return d.certified_finite() ? Outcome::verified : Outcome::not_verified;
}

}  // namespace tiltlab

#endif  // TILTLAB_HOMOLOGY_CERTIFY_HPP

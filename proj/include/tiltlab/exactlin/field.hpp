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
 * Exact scalar types: prime-field elements with a runtime modulus and
 * arbitrary-precision rationals, both usable as Eigen scalars.
 */

#ifndef TILTLAB_EXACTLIN_FIELD_HPP
#define TILTLAB_EXACTLIN_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "tiltlab/errors.hpp"

namespace tiltlab {

/// The ground field of every algebra: F_p or the rationals.
class FieldSpec {
 public:
  enum class Kind { prime, rational };

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::prime; }

  /// "F2", "F7", "Q".
  std::string name() const;
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_ = Kind::rational;
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/**
 * Element of F_p.
 *
 * An element either carries its modulus (bound) or is an integer literal
 * produced by Eigen's `Scalar(0)` / `Scalar(1)` conversions. Literals follow
 * integer arithmetic and are reduced the moment they meet a bound element, so
 * every result is the image of an integer computation under Z -> F_p. Asking
 * a literal outside {-1, 0, 1} whether it is zero, or inverting one, throws:
 * that can only be answered once the modulus is known.
 */
class Fp {
 public:
  Fp() = default;
  Fp(int literal) : v_(literal), p_(0) {}  // NOLINT(google-explicit-constructor)
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  /// Canonical residue in [0, p) (bound elements) or the literal value.
  std::int64_t value() const { return v_; }

  bool is_zero() const;
  Fp inverse() const;

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend Fp operator-(const Fp& a);
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& x);

 private:
  static Fp raw(std::int64_t v, std::uint32_t p);
  static std::uint32_t common_modulus(const Fp& a, const Fp& b);
  std::int64_t residue(std::uint32_t p) const;

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }
Rational inverse(const Rational& x);

std::string to_string(const Fp& x);
std::string to_string(const Rational& x);

using Rng = std::mt19937_64;

/// Per-scalar glue: construction from integers and text, sampling.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Fp> {
  static Fp from_int(const FieldSpec& f, std::int64_t v);
  static Fp parse(const FieldSpec& f, std::string_view text);
  static Fp random(const FieldSpec& f, Rng& rng);
  /// Random element that is nonzero.
  static Fp random_nonzero(const FieldSpec& f, Rng& rng);
  static bool compatible(const FieldSpec& f) { return f.is_prime(); }
};

template <>
struct ScalarTraits<Rational> {
  static Rational from_int(const FieldSpec& f, std::int64_t v);
  static Rational parse(const FieldSpec& f, std::string_view text);
  static Rational random(const FieldSpec& f, Rng& rng);
  static Rational random_nonzero(const FieldSpec& f, Rng& rng);
  static bool compatible(const FieldSpec& f) { return !f.is_prime(); }
};

template <class Scalar>
Scalar scalar(const FieldSpec& f, std::int64_t v) {
  return ScalarTraits<Scalar>::from_int(f, v);
}

}  // namespace tiltlab

namespace Eigen {

template <>
struct NumTraits<tiltlab::Fp> : GenericNumTraits<tiltlab::Fp> {
  using Real = tiltlab::Fp;
  using NonInteger = tiltlab::Fp;
  using Literal = tiltlab::Fp;
  using Nested = tiltlab::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

#endif  // TILTLAB_EXACTLIN_FIELD_HPP

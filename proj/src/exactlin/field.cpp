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

#include "tiltlab/exactlin/field.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <utility>

namespace tiltlab {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_number(p)) {
    throw Error("field characteristic " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::prime, p);
}

std::string FieldSpec::name() const {
  return is_prime() ? "F" + std::to_string(p_) : "Q";
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint32_t p = 0;
    auto rest = text.substr(1);
    if (rest.front() == 'p' || rest.front() == '_') rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return prime(p);
  }
  throw Error("unknown field '" + std::string(text) + "' (expected Q or Fp)");
}

// ---------------------------------------------------------------------------
// Fp

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p == 0) throw Error("Fp modulus must be nonzero");
  v_ = value % static_cast<std::int64_t>(p);
  if (v_ < 0) v_ += p;
}

Fp Fp::raw(std::int64_t v, std::uint32_t p) {
  Fp out;
  out.v_ = v;
  out.p_ = p;
  return out;
}

std::uint32_t Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) {
    throw FieldMismatch("F" + std::to_string(a.p_) + " vs F" + std::to_string(b.p_));
  }
  return a.p_ != 0 ? a.p_ : b.p_;
}

std::int64_t Fp::residue(std::uint32_t p) const {
  if (p_ == p) return v_;
  std::int64_t r = v_ % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

Fp operator+(const Fp& a, const Fp& b) {
  const std::uint32_t p = Fp::common_modulus(a, b);
  if (p == 0) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Error("Fp literal overflow");
    return Fp::raw(r, 0);
  }
  std::int64_t s = a.residue(p) + b.residue(p);
  if (s >= p) s -= p;
  return Fp::raw(s, p);
}

Fp operator-(const Fp& a) {
  if (a.p_ == 0) {
    if (a.v_ == INT64_MIN) throw Error("Fp literal overflow");
    return Fp::raw(-a.v_, 0);
  }
  return Fp::raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
}

Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

Fp operator*(const Fp& a, const Fp& b) {
  const std::uint32_t p = Fp::common_modulus(a, b);
  if (p == 0) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Error("Fp literal overflow");
    return Fp::raw(r, 0);
  }
  const auto prod = static_cast<std::uint64_t>(a.residue(p)) * static_cast<std::uint64_t>(b.residue(p));
  return Fp::raw(static_cast<std::int64_t>(prod % p), p);
}

bool Fp::is_zero() const {
  if (p_ != 0) return v_ == 0;
  if (v_ >= -1 && v_ <= 1) return v_ == 0;
  throw Error("zero test on unreduced Fp literal " + std::to_string(v_));
}

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw Error("inverse of unreduced Fp literal " + std::to_string(v_));
  }
  if (v_ == 0) throw Error("division by zero in F" + std::to_string(p_));
  // Extended Euclid on (v, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = v_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return Fp(t, p_);
}

bool operator==(const Fp& a, const Fp& b) {
  const std::uint32_t p = Fp::common_modulus(a, b);
  if (p != 0) return a.residue(p) == b.residue(p);
  if (a.v_ == b.v_) return true;
  // Literals that differ by one are distinct in every characteristic.
  if (a.v_ - b.v_ == 1 || b.v_ - a.v_ == 1) return false;
  throw Error("equality of unreduced Fp literals is characteristic-dependent");
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

Fp ScalarTraits<Fp>::from_int(const FieldSpec& f, std::int64_t v) {
  if (!f.is_prime()) throw FieldMismatch("Fp scalar requested over " + f.name());
  return Fp(v, f.characteristic());
}

Fp ScalarTraits<Fp>::parse(const FieldSpec& f, std::string_view text) {
  std::int64_t v = 0;
  auto b = text.data();
  auto e = text.data() + text.size();
  if (b != e && *b == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) {
    throw Error("'" + std::string(text) + "' is not an integer");
  }
  return from_int(f, v);
}

Fp ScalarTraits<Fp>::random(const FieldSpec& f, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
  return from_int(f, d(rng));
}

Fp ScalarTraits<Fp>::random_nonzero(const FieldSpec& f, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> d(1, f.characteristic() - 1);
  return from_int(f, d(rng));
}

// ---------------------------------------------------------------------------
// Rational

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw Error("division by zero in Q");
  return Rational(1) / x;
}

std::string to_string(const Rational& x) { return x.str(); }

Rational ScalarTraits<Rational>::from_int(const FieldSpec& f, std::int64_t v) {
  if (f.is_prime()) throw FieldMismatch("rational scalar requested over " + f.name());
  return Rational(v);
}

Rational ScalarTraits<Rational>::parse(const FieldSpec& f, std::string_view text) {
  if (f.is_prime()) throw FieldMismatch("rational scalar requested over " + f.name());
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto check = [&](const std::string& part) {
    std::size_t i = (!part.empty() && part.front() == '-') ? 1 : 0;
    if (i == part.size()) throw Error("'" + std::string(text) + "' is not a rational");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw Error("'" + std::string(text) + "' is not a rational");
    }
  };
  if (slash == std::string::npos) {
    check(s);
    return Rational(boost::multiprecision::mpz_int(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check(num);
  check(den);
  boost::multiprecision::mpz_int d(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(boost::multiprecision::mpz_int(num)) / Rational(d);
}

Rational ScalarTraits<Rational>::random(const FieldSpec&, Rng& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return Rational(d(rng));
}

Rational ScalarTraits<Rational>::random_nonzero(const FieldSpec& f, Rng& rng) {
  for (;;) {
    Rational r = random(f, rng);
    if (!r.is_zero()) return r;
  }
}

}  // namespace tiltlab

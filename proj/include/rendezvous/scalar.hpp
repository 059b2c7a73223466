/*
 * Copyright (c) 2026, The rendezvous authors
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

#ifndef RENDEZVOUS_SCALAR_HPP_
#define RENDEZVOUS_SCALAR_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rendezvous {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a run violates one of the model invariants (collinearity,
/// progress, snapshot round-trip, exactness). Always a bug, never an input
/// problem.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/**
 * Exact rational number.
 *
 * Every position, unit, distance and threshold in the simulator is a Scalar.
 * The value is kept in canonical form (reduced, positive denominator) at all
 * times, so equality is structural.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value);

  /// Accepts "n", "-n", "n/d" and "-n/d". Decimal points are rejected.
  static Scalar parse(std::string_view text);

  /// Always "num/den", e.g. "3/1", "-1/2".
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool isZero() const { return sign() == 0; }
  bool isCanonical() const;
  std::size_t hash() const;

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws Error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Scalar abs(const Scalar& s);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

inline void hashCombine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace rendezvous

#endif  // RENDEZVOUS_SCALAR_HPP_

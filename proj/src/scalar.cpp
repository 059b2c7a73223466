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

#include "rendezvous/scalar.hpp"

#include <cctype>
#include <ostream>

namespace rendezvous {

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t hashMpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
  std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    hashCombine(h, static_cast<std::size_t>(mpz_getlimbn(z, i)));
  }
  return h;
}

}  // namespace

Scalar::Scalar(long num, long den) : value_(num, den) {
  if (den == 0) throw Error("Scalar: zero denominator");
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw Error("Scalar: zero denominator");
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!isDigits(num) || !isDigits(den)) {
    throw Error("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Scalar::isCanonical() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

std::size_t Scalar::hash() const {
  std::size_t h = hashMpz(value_.get_num_mpz_t());
  hashCombine(h, hashMpz(value_.get_den_mpz_t()));
  return h;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.isZero()) throw Error("Scalar: division by zero");
  value_ /= o.value_;
  return *this;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace rendezvous

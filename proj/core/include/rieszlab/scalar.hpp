// Copyright 2026 The rieszlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RIESZLAB_SCALAR_HPP_
#define RIESZLAB_SCALAR_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace rieszlab {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. Arithmetic always yields a
/// concrete Scalar rather than a gmpxx expression template, so `auto` is safe.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral I>
  Scalar(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  Scalar(long numerator, long denominator);

  explicit Scalar(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "p", "-p", "p/q" (optionally signed). Throws StructuralError.
  static Scalar parse(std::string_view text);

  /// 10^-digits, the form tolerances are written in.
  static Scalar pow10_inverse(unsigned digits);

  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Scalar abs() const;

  /// Integer numerator / denominator; throws if they do not fit.
  std::int64_t numerator_int() const;
  std::int64_t denominator_int() const;

  double to_double() const { return value_.get_d(); }

  /// Canonical text: "p" or "p/q".
  std::string str() const;

  Scalar& operator+=(const Scalar& other) {
    value_ += other.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& other) {
    value_ -= other.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& other) {
    value_ *= other.value_;
    return *this;
  }
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend Scalar operator-(const Scalar& x) {
    Scalar r;
    mpq_neg(r.value_.get_mpq_t(), x.value_.get_mpq_t());
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class value_;
};

inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

/// x^k for k >= 0.
Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace rieszlab

#endif  // RIESZLAB_SCALAR_HPP_

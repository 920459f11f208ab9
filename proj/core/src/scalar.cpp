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

#include "rieszlab/scalar.hpp"

#include <cctype>
#include <limits>

#include "rieszlab/error.hpp"

namespace rieszlab {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw StructuralError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw StructuralError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw StructuralError("rational with zero denominator '" + std::string(text) + "'");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

Scalar Scalar::pow10_inverse(unsigned digits) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, digits);
  return Scalar(mpq_class(mpz_class(1), den));
}

Scalar Scalar::abs() const {
  Scalar r;
  mpq_abs(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  value_ /= other.value_;
  return *this;
}

std::int64_t Scalar::numerator_int() const {
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw DomainError("numerator out of range: " + str());
  return n.get_si();
}

std::int64_t Scalar::denominator_int() const {
  const mpz_class& d = value_.get_den();
  if (!d.fits_slong_p()) throw DomainError("denominator out of range: " + str());
  return d.get_si();
}

std::string Scalar::str() const { return value_.get_str(10); }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace rieszlab

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

#include "rieszlab/polynomial.hpp"

#include <algorithm>

#include "rieszlab/error.hpp"

namespace rieszlab {
namespace {

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(coeffs_); }

Scalar Polynomial::operator()(const Scalar& t) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Scalar> c;
  for (const auto& x : a.coeffs_) c.push_back(-x);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial r = constant(Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * *this;
  return r;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    const Scalar mag = c.abs();
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Scalar(1)) out += mag.str() + "*";
    out += 't';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

PiecewisePolynomial::PiecewisePolynomial(Polynomial p) : pieces_{std::move(p)} {}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Scalar> breaks, std::vector<Polynomial> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breaks_.size() + 1) {
    throw StructuralError("piecewise polynomial needs one more piece than breakpoints");
  }
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i - 1] < breaks_[i])) throw StructuralError("piecewise breakpoints must be strictly increasing");
  }
}

Scalar PiecewisePolynomial::operator()(const Scalar& t) const {
  const auto k = static_cast<std::size_t>(std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
  return pieces_[k](t);
}

std::optional<Scalar> PiecewisePolynomial::linear_coefficient() const {
  const Polynomial& p = pieces_.front();
  for (const auto& q : pieces_) {
    if (!(q == p)) return std::nullopt;
  }
  const auto& c = p.coefficients();
  if (c.empty()) return Scalar(0);
  if (c.size() == 2 && c[0].is_zero()) return c[1];
  return std::nullopt;
}

std::string PiecewisePolynomial::str() const {
  if (breaks_.empty()) return pieces_.front().str();
  std::string out = "pw(" + pieces_[0].str();
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    out += " | " + breaks_[i].str() + " | " + pieces_[i + 1].str();
  }
  return out + ")";
}

}  // namespace rieszlab

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

#ifndef RIESZLAB_POLYNOMIAL_HPP_
#define RIESZLAB_POLYNOMIAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rieszlab/scalar.hpp"

namespace rieszlab {

/// Polynomial in one variable with rational coefficients, c0 + c1 t + ... .
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({Scalar(0), Scalar(1)}); }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  Scalar operator()(const Scalar& t) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  Polynomial pow(unsigned exponent) const;

  /// Expression in t, e.g. "3/2*t^2-t+1".
  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Scalar> coeffs_;  // no trailing zeros
};

/// Piecewise polynomial f: Q -> Q. Piece k applies on [breaks[k-1], breaks[k]),
/// with piece 0 on (-inf, breaks[0]) and the last piece on [breaks.back(), inf).
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() : pieces_(1) {}
  PiecewisePolynomial(Polynomial p);  // NOLINT(google-explicit-constructor)
  /// Requires pieces.size() == breaks.size() + 1 and strictly increasing breaks.
  PiecewisePolynomial(std::vector<Scalar> breaks, std::vector<Polynomial> pieces);

  Scalar operator()(const Scalar& t) const;

  const std::vector<Scalar>& breaks() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }

  /// a when f(t) = a·t on all of Q.
  std::optional<Scalar> linear_coefficient() const;

  /// DSL body: a polynomial, or pw(p0 | b1 | p1 | ...).
  std::string str() const;

  friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;

 private:
  std::vector<Scalar> breaks_;
  std::vector<Polynomial> pieces_;
};

}  // namespace rieszlab

#endif  // RIESZLAB_POLYNOMIAL_HPP_

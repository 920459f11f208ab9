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

#ifndef RIESZLAB_RIESZ_HPP_
#define RIESZLAB_RIESZ_HPP_

#include <functional>

#include "rieszlab/element.hpp"

namespace rieszlab {

// Vector-space structure. Operands must share a space (DomainError otherwise).

Element add(const Element& x, const Element& y);
Element subtract(const Element& x, const Element& y);
Element scale(const Scalar& c, const Element& x);
Element negate(const Element& x);

inline Element operator+(const Element& x, const Element& y) { return add(x, y); }
inline Element operator-(const Element& x, const Element& y) { return subtract(x, y); }
inline Element operator-(const Element& x) { return negate(x); }
inline Element operator*(const Scalar& c, const Element& x) { return scale(c, x); }

// Lattice structure. All five models are function spaces with the pointwise
// order, so sup/inf are pointwise max/min. In the piecewise linear model the
// exact crossing abscissa is inserted wherever the operands cross strictly
// inside a segment.

enum class LatticeKind { kSup, kInf };
enum class UnaryKind { kPos, kNeg, kAbs };

Element lattice_binary(LatticeKind kind, const Element& x, const Element& y);
Element lattice_unary(UnaryKind kind, const Element& x);

inline Element sup(const Element& x, const Element& y) { return lattice_binary(LatticeKind::kSup, x, y); }
inline Element inf(const Element& x, const Element& y) { return lattice_binary(LatticeKind::kInf, x, y); }
inline Element pos(const Element& x) { return lattice_unary(UnaryKind::kPos, x); }
inline Element neg(const Element& x) { return lattice_unary(UnaryKind::kNeg, x); }
inline Element abs(const Element& x) { return lattice_unary(UnaryKind::kAbs, x); }

/// x <= y in the pointwise order.
bool leq(const Element& x, const Element& y);
/// 0 <= x.
bool is_positive(const Element& x);
/// |x| /\ |y| = 0.
bool is_disjoint(const Element& x, const Element& y);

enum class ConstantKind { kZero, kOne };

/// Additive zero, or the constant-one function / sequence / vector.
/// kOne on the finitely supported sequences throws UnsupportedError.
Element constant(const Space& space, ConstantKind which);
inline Element zero(const Space& space) { return constant(space, ConstantKind::kZero); }
inline Element one(const Space& space) { return constant(space, ConstantKind::kOne); }

/// Atomwise combination z_i = f(x_i, y_i) in an atomic space (the
/// eventually-constant tail counts as one more atom). Requires f(0, 0) = 0.
Element combine_atoms(const Element& x, const Element& y,
                      const std::function<Scalar(const Scalar&, const Scalar&)>& f);

}  // namespace rieszlab

#endif  // RIESZLAB_RIESZ_HPP_

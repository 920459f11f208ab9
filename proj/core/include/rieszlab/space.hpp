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

#ifndef RIESZLAB_SPACE_HPP_
#define RIESZLAB_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "rieszlab/scalar.hpp"

namespace rieszlab {

enum class SpaceKind {
  kCoordinate,          // R^n with coordinatewise order
  kSimpleFunction,      // step functions on a fixed rational partition of [0,1]
  kFinSupport,          // finitely supported sequences
  kEventuallyConstant,  // eventually constant sequences
  kPiecewiseLinear,     // continuous piecewise linear functions on [0,1]
};

/// One of the five concrete vector-lattice models, with its parameters.
///
/// Atoms: coordinates 1..n, cells 1..m of the partition, or sequence indices
/// 1, 2, ... . The piecewise linear model has no atoms.
class Space {
 public:
  static Space coordinate(std::size_t dimension);
  /// `endpoints` must be 0 = t_0 < t_1 < ... < t_m = 1.
  static Space simple_function(std::vector<Scalar> endpoints);
  static Space fin_support();
  static Space eventually_constant();
  static Space piecewise_linear();

  SpaceKind kind() const { return kind_; }

  std::size_t dimension() const { return dimension_; }
  /// Partition endpoints; empty unless kind() is kSimpleFunction.
  const std::vector<Scalar>& partition() const;
  /// Number of atoms for coordinate / simple function spaces; 0 otherwise.
  std::size_t atom_count() const;

  bool is_atomic() const { return kind_ != SpaceKind::kPiecewiseLinear; }
  bool is_sequence() const {
    return kind_ == SpaceKind::kFinSupport || kind_ == SpaceKind::kEventuallyConstant;
  }
  bool is_dense() const {
    return kind_ == SpaceKind::kCoordinate || kind_ == SpaceKind::kSimpleFunction;
  }
  bool has_unit() const { return kind_ != SpaceKind::kFinSupport; }

  /// DSL spelling: coord(3), simple{0,1/2,1}, fin, ec, pl.
  std::string str() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  Space(SpaceKind kind, std::size_t dimension, std::shared_ptr<const std::vector<Scalar>> partition)
      : kind_(kind), dimension_(dimension), partition_(std::move(partition)) {}

  SpaceKind kind_;
  std::size_t dimension_;
  std::shared_ptr<const std::vector<Scalar>> partition_;
};

/// Throws DomainError naming `what` if the spaces differ.
void require_same_space(const Space& a, const Space& b, const char* what);

}  // namespace rieszlab

#endif  // RIESZLAB_SPACE_HPP_

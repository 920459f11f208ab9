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

#include "rieszlab/space.hpp"

#include "rieszlab/error.hpp"

namespace rieszlab {

Space Space::coordinate(std::size_t dimension) {
  if (dimension == 0) throw StructuralError("coordinate space needs dimension >= 1");
  return Space(SpaceKind::kCoordinate, dimension, nullptr);
}

Space Space::simple_function(std::vector<Scalar> endpoints) {
  if (endpoints.size() < 2) throw StructuralError("partition needs at least the endpoints 0 and 1");
  if (endpoints.front() != Scalar(0) || endpoints.back() != Scalar(1)) {
    throw StructuralError("partition must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < endpoints.size(); ++i) {
    if (!(endpoints[i - 1] < endpoints[i])) {
      throw StructuralError("partition endpoints must be strictly increasing");
    }
  }
  const std::size_t cells = endpoints.size() - 1;
  return Space(SpaceKind::kSimpleFunction, cells,
               std::make_shared<const std::vector<Scalar>>(std::move(endpoints)));
}

Space Space::fin_support() { return Space(SpaceKind::kFinSupport, 0, nullptr); }
Space Space::eventually_constant() { return Space(SpaceKind::kEventuallyConstant, 0, nullptr); }
Space Space::piecewise_linear() { return Space(SpaceKind::kPiecewiseLinear, 0, nullptr); }

const std::vector<Scalar>& Space::partition() const {
  static const std::vector<Scalar> kEmpty;
  return partition_ ? *partition_ : kEmpty;
}

std::size_t Space::atom_count() const { return is_dense() ? dimension_ : 0; }

std::string Space::str() const {
  switch (kind_) {
    case SpaceKind::kCoordinate:
      return "coord(" + std::to_string(dimension_) + ")";
    case SpaceKind::kSimpleFunction: {
      std::string out = "simple{";
      const auto& p = partition();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += p[i].str();
      }
      return out + "}";
    }
    case SpaceKind::kFinSupport:
      return "fin";
    case SpaceKind::kEventuallyConstant:
      return "ec";
    case SpaceKind::kPiecewiseLinear:
      return "pl";
  }
  return "?";
}

bool operator==(const Space& a, const Space& b) {
  if (a.kind_ != b.kind_ || a.dimension_ != b.dimension_) return false;
  if (a.kind_ != SpaceKind::kSimpleFunction || a.partition_ == b.partition_) return true;
  return *a.partition_ == *b.partition_;
}

void require_same_space(const Space& a, const Space& b, const char* what) {
  if (!(a == b)) {
    throw DomainError(std::string(what) + ": space mismatch (" + a.str() + " vs " + b.str() + ")");
  }
}

}  // namespace rieszlab

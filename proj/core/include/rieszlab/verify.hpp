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

#ifndef RIESZLAB_VERIFY_HPP_
#define RIESZLAB_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rieszlab/check_report.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/sampling.hpp"
#include "rieszlab/value.hpp"

namespace rieszlab {

/// Budget for a verifier run.
struct SamplingPlan {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 500;
  /// Walk the full grid {-r..r}^n when the domain has at most
  /// `grid_dimension` atoms (coordinate and simple-function spaces).
  bool exhaustive = true;
  std::size_t grid_dimension = 4;
  std::int64_t grid_radius = 2;
  /// Let structural facts about the representation settle a verdict that
  /// sampling alone leaves inconclusive.
  bool symbolic = true;
};

/// T(u + v) = T(u) + T(v) for disjoint u, v.
CheckReport verify_oao(const Operator& op, const SamplingPlan& plan = {});

/// T(x) >= 0. A linear operator that fails is reported with witness {x, -x}.
CheckReport verify_positive(const Operator& op, const SamplingPlan& plan = {});

/// u ⊥ v implies T(u) ⊥ T(v).
CheckReport verify_disjointness_preserving(const Operator& op, const SamplingPlan& plan = {});

enum class ScanMethod {
  kAuto,
  /// Evaluate T on every fragment.
  kEnumerate,
  /// Use T(Σ_A p_i) = Σ_A T(p_i) over the generating pieces: the maximum is
  /// Σ T(p_i)⁺ and the minimum −Σ T(p_i)⁻. Valid for every orthogonally
  /// additive T and linear in the number of pieces.
  kPieceAdditive,
};

struct LevelBounds {
  std::size_t level;  // 0 in exact mode
  Value max;
  Value min;
};

struct BoundScan {
  CheckReport report;
  FragmentEnumeration::Mode mode = FragmentEnumeration::Mode::kExact;
  /// One entry in exact mode; one per level, ascending, in truncated mode.
  std::vector<LevelBounds> levels;
  /// Maxima nondecreasing and minima nonincreasing across levels, each step
  /// decided by an exact comparison.
  bool monotone = true;
  /// First level whose maximum is not below the caller's growth bound.
  std::optional<std::size_t> growth_level;
};

/// Max and min of T over 𝔉_e. For an infinite 𝔉_e pass `level`: levels from
/// the prefix length of e up to `level` are scanned and `growth_bound`, if
/// given, is compared against each level maximum. Exact mode reports
/// holds with the bounds; truncated mode reports fails with a witness
/// fragment once growth is seen, inconclusive otherwise.
BoundScan lateral_bound_scan(const Operator& op, const Element& e, std::optional<std::size_t> level = std::nullopt,
                             const std::optional<Value>& growth_bound = std::nullopt,
                             ScanMethod method = ScanMethod::kAuto);

struct OrderScan {
  CheckReport report;
  std::optional<Value> hull_min;
  std::optional<Value> hull_max;
};

/// Samples x with |x| <= bound and records the pointwise hull of T(x). With a
/// candidate c, an image outside [-c, c] is a failure witness. Otherwise the
/// verdict is inconclusive: order boundedness is not decidable by sampling.
OrderScan order_bound_scan(const Operator& op, const Element& bound, const SamplingPlan& plan = {},
                           const std::optional<Value>& candidate = std::nullopt);

/// No nonzero element is disjoint to x.
bool has_full_support(const Element& x);

/// A nonzero element disjoint to x, when one exists.
std::optional<Element> disjoint_probe(const Element& x);

/// Exact equality where decidable; interval values compare by overlap.
std::optional<bool> values_equal(const Value& a, const Value& b);

/// The zero of the operator's codomain, as a Value.
Value zero_value(const Operator& op);

}  // namespace rieszlab

#endif  // RIESZLAB_VERIFY_HPP_

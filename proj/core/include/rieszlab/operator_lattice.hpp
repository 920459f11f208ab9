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

#ifndef RIESZLAB_OPERATOR_LATTICE_HPP_
#define RIESZLAB_OPERATOR_LATTICE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rieszlab/check_report.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/value.hpp"
#include "rieszlab/verify.hpp"

namespace rieszlab {

enum class PointwiseKind { kJoin, kMeet, kPos, kNeg, kModulus };

std::string_view to_string(PointwiseKind kind);

/// Value at x of S ∨ T, S ∧ T, T⁺, T⁻ or |T|, computed as an extremum over
/// the disjoint decompositions x = u ⊔ v.
struct PointwiseLatticeResult {
  PointwiseKind kind = PointwiseKind::kJoin;
  FragmentEnumeration::Mode mode = FragmentEnumeration::Mode::kExact;
  /// The extremum; in truncated mode, the one at the highest level.
  Value value{RealInterval{}};
  /// Truncated mode: the extremum at each level, starting at first_level.
  std::size_t first_level = 0;
  std::vector<Value> levels;
  /// Optimal decompositions with the fewest pieces in u, ascending by mask.
  /// Empty when no single decomposition attains the extremum (the codomain
  /// is not totally ordered).
  std::vector<Decomposition> attained_at;
  /// Levels move in the expected direction, each step decided exactly.
  bool monotone = true;
  /// False when overlapping intervals left a comparison undecided; the
  /// undecided candidates are then all listed in attained_at.
  bool conclusive = true;
  std::string notes;
};

/// sup { S(u) + T(v) : x = u ⊔ v }.
PointwiseLatticeResult join_at(const Operator& s, const Operator& t, const Element& x,
                               std::optional<std::size_t> level = std::nullopt, ScanMethod method = ScanMethod::kAuto);
/// inf { S(u) + T(v) : x = u ⊔ v }; equals −join_at(−S, −T, x).
PointwiseLatticeResult meet_at(const Operator& s, const Operator& t, const Element& x,
                               std::optional<std::size_t> level = std::nullopt, ScanMethod method = ScanMethod::kAuto);
/// sup { T(u) : u ⊑ x }.
PointwiseLatticeResult pos_part_at(const Operator& t, const Element& x, std::optional<std::size_t> level = std::nullopt,
                                   ScanMethod method = ScanMethod::kAuto);
/// −inf { T(u) : u ⊑ x }.
PointwiseLatticeResult neg_part_at(const Operator& t, const Element& x, std::optional<std::size_t> level = std::nullopt,
                                   ScanMethod method = ScanMethod::kAuto);
/// sup { T(u) − T(v) : x = u ⊔ v }.
PointwiseLatticeResult modulus_at(const Operator& t, const Element& x, std::optional<std::size_t> level = std::nullopt,
                                  ScanMethod method = ScanMethod::kAuto);

/// Dispatch on kind; `s` is ignored for the unary kinds.
PointwiseLatticeResult pointwise_at(PointwiseKind kind, const Operator& s, const Operator& t, const Element& x,
                                    std::optional<std::size_t> level = std::nullopt,
                                    ScanMethod method = ScanMethod::kAuto);

enum class DpKind { kModulus, kPos, kNeg };

struct DpFastResult {
  Value value{RealInterval{}};
  /// The disjointness-preservation report the result relies on.
  std::string provenance;
};

/// |T(x)|, (T(x))⁺ or (T(x))⁻ from a single application, valid for
/// disjointness-preserving T. `dp_report` must come from
/// verify_disjointness_preserving and must not be a failure
/// (PreconditionError otherwise).
DpFastResult dp_fast(DpKind kind, const Operator& t, const Element& x, const CheckReport& dp_report);

struct MeyerResult {
  Value value{RealInterval{}};
  /// False for results computed with the preconditions bypassed.
  bool theorematic = true;
  std::string notes;
};

/// (T(x))⁺ ∧ (T(y))⁻, which vanishes when x, y ⊑ e and T preserves
/// disjointness. Both preconditions are checked (PreconditionError).
MeyerResult meyer_pair(const Operator& t, const Element& x, const Element& y, const Element& e,
                       const CheckReport& dp_report);

/// The same expression with no precondition checks, for reproducing
/// counterexamples; the result is flagged non-theorematic.
MeyerResult meyer_pair_unsafe(const Operator& t, const Element& x, const Element& y);

}  // namespace rieszlab

#endif  // RIESZLAB_OPERATOR_LATTICE_HPP_

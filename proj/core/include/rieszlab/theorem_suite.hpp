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
#ifndef RIESZLAB_THEOREM_SUITE_HPP_
#define RIESZLAB_THEOREM_SUITE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rieszlab/check_report.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/value.hpp"

namespace rieszlab {

/// Settings for one check, as text: `seed`, `samples`, plus the keys listed
/// for the check in the registry.
using CheckConfig = std::map<std::string, std::string>;

/// A registered claim and the keys its runner accepts besides seed/samples.
struct CheckInfo {
  std::string id;
  std::string claim;
  std::vector<std::string> keys;
};

/// Every check in the suite, in run order.
const std::vector<CheckInfo>& check_registry();

/// Outcome of one check. Identical (id, config) reproduce an identical
/// serialization.
struct TheoremCheck {
  std::string id;
  CheckConfig config;
  CheckReport result;
  /// Growth tables and other computed evidence, one line each.
  std::vector<std::string> artifacts;

  /// `id status samples witness`.
  std::string summary_line() const;
  /// Newline-terminated records: one `record=check`, then one
  /// `record=artifact` per artifact line.
  std::string serialize() const;
};

/// Runs the named check. Throws LookupError for an unknown id and
/// PreconditionError for an unknown key or a value out of range.
TheoremCheck run_check(std::string_view id, const CheckConfig& config = {});

enum class Profile { kQuick, kFull };

/// "quick" or "full"; PreconditionError otherwise.
Profile parse_profile(std::string_view text);
std::string_view to_string(Profile p);

/// Per-check configuration a profile uses under a master seed.
CheckConfig profile_config(Profile profile, std::uint64_t master_seed, std::string_view id);

struct SuiteRun {
  Profile profile = Profile::kQuick;
  std::uint64_t seed = 0;
  std::vector<TheoremCheck> checks;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t inconclusive = 0;

  bool ok() const { return fails == 0; }
  /// Summary lines followed by a totals line.
  std::string summary() const;
  /// The structured report: a `record=suite` header, then every check.
  std::string report() const;
};

/// Runs the registered checks (all, or those in `ids`, in registry order) on
/// up to `threads` worker threads (0: hardware concurrency). An empty `ids`
/// filter is a PreconditionError; unknown ids are LookupErrors.
SuiteRun run_all(Profile profile, std::uint64_t seed, const std::optional<std::vector<std::string>>& ids = std::nullopt,
                 unsigned threads = 0);

// Exploration of whether join values over infinite fragment algebras settle.
// The harness looks at level-truncated suprema only and never decides
// existence of a supremum.

enum class GrowthClass { kStabilized, kUnbounded, kUndetermined };

std::string_view to_string(GrowthClass c);

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t instances = 16;
  std::size_t max_level = 64;
  /// A level value outside [-bound·1, bound·1] counts as divergence.
  Scalar bound = Scalar(1000000);
};

struct SearchInstance {
  std::string label;
  Operator s;
  Operator t;
  Element x;
  GrowthClass growth = GrowthClass::kUndetermined;
  /// Stabilized: first level of the constant run. Unbounded: first level
  /// past the bound. Undetermined: the last level scanned.
  std::size_t level = 0;
  std::size_t first_level = 0;
  std::vector<Value> levels;
  bool monotone = true;
};

/// Truncated join levels of S and T at x, classified. S and T must map the
/// eventually constant sequences into themselves (UnsupportedError
/// otherwise).
SearchInstance classify_join_growth(const Operator& s, const Operator& t, const Element& x, std::size_t max_level,
                                    const Scalar& bound, std::string label = "");

struct SearchReport {
  SearchConfig config;
  std::vector<SearchInstance> instances;

  std::size_t count(GrowthClass c) const;
  /// Human-readable report with the disclaimer, the instances and the
  /// candidates worth a closer look.
  std::string str() const;
};

/// Fixed probes (S = T, and the unbounded linear example against 0) followed
/// by `instances` random pairs on the eventually constant sequences.
SearchReport search_kkhdh(const SearchConfig& config = {});

inline constexpr std::string_view kSearchDisclaimer =
    "Level-truncated evidence only. A stabilized run is not a proof that the supremum exists, "
    "an unbounded run only shows growth past the configured bound, and nothing here settles "
    "the open question.";

}  // namespace rieszlab

#endif  // RIESZLAB_THEOREM_SUITE_HPP_

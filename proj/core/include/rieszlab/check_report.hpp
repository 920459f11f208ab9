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

#ifndef RIESZLAB_CHECK_REPORT_HPP_
#define RIESZLAB_CHECK_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rieszlab/element.hpp"

namespace rieszlab {

enum class Verdict { kHolds, kFails, kInconclusive };

std::string_view to_string(Verdict v);

/// Outcome of a verifier or theorem check.
///
/// A kFails report always carries a witness that can be re-checked by hand.
/// kInconclusive means a sampled check found nothing wrong.
struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::kInconclusive;
  std::vector<Element> witness;
  std::uint64_t samples_used = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::string notes;

  bool failed() const { return verdict == Verdict::kFails; }

  /// One line: `verdict=... witness=... samples=... seed=... mode=... notes="..."`.
  std::string serialize() const;
};

/// Renders ordered key/value pairs as `k=v k=v`, quoting values that contain
/// spaces, quotes or '=' (backslash escapes inside quotes, newlines as \n).
std::string format_record(const std::vector<std::pair<std::string, std::string>>& fields);

/// Inverse of format_record. Throws StructuralError on malformed input.
std::vector<std::pair<std::string, std::string>> parse_record(std::string_view line);

/// "[a; b]" or "-" for an empty witness.
std::string format_witness(const std::vector<Element>& witness);

}  // namespace rieszlab

#endif  // RIESZLAB_CHECK_REPORT_HPP_

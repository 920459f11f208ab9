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
// Shared plumbing for the theorem-suite runners. Not installed.

#ifndef RIESZLAB_SRC_SUITE_INTERNAL_HPP_
#define RIESZLAB_SRC_SUITE_INTERNAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rieszlab/check_report.hpp"
#include "rieszlab/sampling.hpp"
#include "rieszlab/theorem_suite.hpp"

namespace rieszlab::suite {

struct Failure {
  std::vector<Element> witness;
  std::string note;
};

class Ctx {
 public:
  Ctx(const CheckConfig& config, std::uint64_t seed, std::size_t samples)
      : gen(seed), samples(samples), config_(config) {}

  InstanceGenerator gen;
  CheckReport report;
  std::vector<std::string> artifacts;
  std::size_t samples;
  /// Comparisons left open by overlapping intervals.
  std::uint64_t undecided = 0;

  /// Integer option from the config, `fallback` when absent.
  std::size_t option(const std::string& key, std::size_t fallback, std::size_t lo, std::size_t hi) const;

  bool failed() const { return report.verdict == Verdict::kFails; }
  void instance() { ++report.samples_used; }

  template <class F>
  bool expect(bool ok, F&& failure) {
    if (!ok && !failed()) {
      Failure f = failure();
      report.verdict = Verdict::kFails;
      report.witness = std::move(f.witness);
      report.notes = std::move(f.note);
    }
    return ok;
  }

  template <class F>
  bool expect(std::optional<bool> ok, F&& failure) {
    if (!ok) {
      ++undecided;
      return true;
    }
    return expect(*ok, std::forward<F>(failure));
  }

 private:
  const CheckConfig& config_;
};

using Runner = void (*)(Ctx&);

struct Entry {
  CheckInfo info;
  Runner run;
};

/// The registered checks, in run order.
const std::vector<Entry>& entries();

}  // namespace rieszlab::suite

#endif  // RIESZLAB_SRC_SUITE_INTERNAL_HPP_

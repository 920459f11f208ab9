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

#ifndef RIESZLAB_SAMPLING_HPP_
#define RIESZLAB_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "rieszlab/element.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/polynomial.hpp"
#include "rieszlab/space.hpp"

namespace rieszlab {

/// Seed used when nothing else is specified.
inline constexpr std::uint64_t kDefaultSeed = 20260611;

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; bounded draws use our own rejection
/// mapping rather than std::uniform_int_distribution, so a seed replays
/// identically with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Independent stream for `tag` under a master seed (splitmix64 of the
  /// seed mixed with an FNV-1a hash of the tag).
  static std::uint64_t derive(std::uint64_t seed, std::string_view tag);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return below(100) < percent; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Size limits for generated scalars and elements.
struct MagnitudeBounds {
  std::int64_t numerator = 3;       // |p| <= numerator
  std::int64_t denominator = 3;     // 1 <= q <= denominator
  unsigned zero_percent = 30;       // chance an atom value is 0
  std::size_t max_length = 5;       // sequence prefix / support length
  std::size_t max_dimension = 4;    // coordinate and simple-function atoms
  std::size_t max_breakpoints = 3;  // interior vertices of pl elements
};

enum class OperatorVariant { kKernel, kLinearKernel, kLinearEC, kMatchTable, kLateralMeet, kSum };

/// Randomized instances for the verifiers and the theorem suite.
///
/// Every generated operator passes its constructor's validation and is
/// orthogonally additive. Match tables are generated only where that is
/// automatic: keys with no nonzero disjoint complement.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed);

  Rng& rng() { return rng_; }
  std::uint64_t seed() const { return rng_.seed(); }

  std::vector<SpaceKind> space_menu;
  std::vector<std::pair<OperatorVariant, unsigned>> weights;
  MagnitudeBounds bounds;

  Scalar scalar();
  Scalar nonzero_scalar();
  Space space();
  Space space_of(SpaceKind kind);
  Element element(const Space& space);
  /// Element whose support is everything (no nonzero element is disjoint to it).
  Element full_support_element(const Space& space);
  /// A uniformly chosen fragment; for an infinite 𝔉_e, one from a level a
  /// little past the prefix.
  Element fragment(const Element& e);
  /// (u, v) with u ⊥ v, drawn as a random splitting of a random element.
  std::pair<Element, Element> disjoint_pair(const Space& space);

  /// Piecewise polynomial with f(0) = 0; `linear` forces f(t) = a·t.
  PiecewisePolynomial function(bool linear = false);
  /// Kernel between atomic spaces. `diagonal_only` gives an injective atom
  /// map (hence disjointness preserving); `summing` sends every source to
  /// atom 1 of the codomain.
  Operator kernel(const Space& domain, const Space& codomain, bool linear = false,
                  bool diagonal_only = false, bool summing = false);
  Operator linear_ec(const Space& codomain);
  Operator match_table(const Space& space);
  Operator lateral_meet(const Space& space);
  /// Weighted choice among the variants that make sense on `domain`.
  Operator operator_on(const Space& domain);
  /// A random operator from `domain` into `codomain`. Every pair of spaces
  /// admits one of the variants except a non-pl codomain over pl.
  Operator operator_between(const Space& domain, const Space& codomain);
  /// Two operators on `domain` with a common codomain.
  std::pair<Operator, Operator> operator_pair(const Space& domain);
  /// A nonzero linear operator (linear kernel or LinearEC).
  Operator nonzero_linear();
  /// A disjointness-preserving operator on `domain`.
  Operator dp_operator(const Space& domain);
  /// Random codomain compatible with kernels from `domain`.
  Space atomic_space();

 private:
  Rng rng_;
};

}  // namespace rieszlab

#endif  // RIESZLAB_SAMPLING_HPP_

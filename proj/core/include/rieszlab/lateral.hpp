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

#ifndef RIESZLAB_LATERAL_HPP_
#define RIESZLAB_LATERAL_HPP_

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "rieszlab/element.hpp"

namespace rieszlab {

/// x is a fragment of e (x ⊑ e): x and e - x are disjoint.
bool is_fragment(const Element& x, const Element& e);

/// Lateral supremum (x⁺ ∨ y⁺) − (x⁻ ∨ y⁻). Meaningful when x, y are fragments
/// of a common element.
Element lateral_sup(const Element& x, const Element& y);
/// As above, but first checks x ⊑ base and y ⊑ base (PreconditionError).
Element lateral_sup(const Element& x, const Element& y, const Element& base);

/// The ⊑-greatest common fragment of x and y.
///
/// Atomic spaces keep the atoms where x and y agree. In the piecewise linear
/// model it keeps the components of supp(x) on which x and y coincide. For
/// x, y in a common 𝔉_e this equals (x⁺ ∧ y⁺) − (x⁻ ∧ y⁻); outside that case
/// the two differ, e.g. 1 ⊓ 2·1 = 0.
Element lateral_inf(const Element& x, const Element& y);

/// An open interval (a, b) of [0,1] on which a piecewise linear function has
/// no zero, maximal with that property. Endpoints 0 and 1 belong to the
/// component when the function is nonzero there.
struct Component {
  Scalar a;
  Scalar b;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Connected components of supp(x), left to right.
std::vector<Component> support_components(const Element& x);

/// Disjoint splitting base = left ⊔ right.
struct Decomposition {
  Element base;
  Element left;
  Element right;
};

/// The fragment algebra 𝔉_e, or its level-truncated part for eventually
/// constant e with nonzero tail.
///
/// 𝔉_e is generated by a list of pairwise disjoint pieces summing to the base
/// (single atoms, the eventually-constant tail block, or the components of the
/// support of a piecewise linear function). Item `mask` is the sum of the
/// pieces whose bits are set, so items can be produced in any order and index
/// ranges split across workers.
class FragmentEnumeration {
 public:
  enum class Mode { kExact, kTruncated };

  FragmentEnumeration(Element base, Mode mode, std::size_t level, std::vector<Element> pieces);

  const Element& base() const { return base_; }
  Mode mode() const { return mode_; }
  /// Truncation level (0 in exact mode).
  std::size_t level() const { return level_; }
  std::span<const Element> pieces() const { return pieces_; }

  /// 2^(number of pieces). Items are addressable by mask only up to
  /// kMaxFragmentPieces pieces; beyond that size() and at() throw
  /// UnsupportedError while pieces() stays usable.
  std::uint64_t size() const;
  Element at(std::uint64_t mask) const;
  Element operator[](std::uint64_t mask) const { return at(mask); }

  std::vector<Element> materialize() const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    iterator(const FragmentEnumeration* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    Element operator*() const { return owner_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const FragmentEnumeration* owner_;
    std::uint64_t index_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  Element base_;
  Mode mode_;
  std::size_t level_;
  std::vector<Element> pieces_;
};

/// Largest piece count whose items can be indexed by a 64-bit mask.
inline constexpr std::size_t kMaxFragmentPieces = 63;

/// All of 𝔉_e. Precondition: e is not eventually constant with nonzero tail
/// (that algebra is infinite; use fragment_iter).
FragmentEnumeration enumerate_fragments(const Element& e);

/// Level-truncated 𝔉_e for an eventually constant e: every fragment that
/// agrees with either 0 or e beyond index `level`. Requires level >= prefix
/// length. Level L items are a subset of level L+1 items.
FragmentEnumeration fragment_iter(const Element& e, std::size_t level);

/// enumerate_fragments, or fragment_iter when a level is given for an
/// eventually constant element.
FragmentEnumeration fragments(const Element& e, std::optional<std::size_t> level = std::nullopt);

/// True when 𝔉_e is finite (every model except eventually constant with a
/// nonzero tail).
bool has_finite_fragments(const Element& e);

Decomposition decomposition_at(const FragmentEnumeration& fragments, std::uint64_t mask);
std::vector<Decomposition> enumerate_decompositions(const Element& x,
                                                    std::optional<std::size_t> level = std::nullopt);

/// The refinement grid of two disjoint splittings of one element.
struct PlievGrid {
  std::vector<Element> rows;
  std::vector<Element> cols;
  std::vector<std::vector<Element>> grid;  // grid[i][k] = rows[i] ⊓ cols[k]
};

/// Requires `us` pairwise disjoint, `vs` pairwise disjoint, and equal sums;
/// throws PreconditionError naming the offending pair or the sums otherwise.
PlievGrid pliev_grid(std::span<const Element> us, std::span<const Element> vs);

namespace testing {

/// Deliberate defects used by the mutation tests. kNone in production.
enum class Mutation {
  kNone,
  kLateralInfMeetFormula,  // lateral_inf always uses (x⁺∧y⁺)−(x⁻∧y⁻)
  kLateralSupSignFlip,     // lateral_sup adds the negative parts
  kLateralInfLatticeMeet,  // lateral_inf returns x ∧ y
};

Mutation active_mutation();
void set_mutation(Mutation m);

class ScopedMutation {
 public:
  explicit ScopedMutation(Mutation m) : previous_(active_mutation()) { set_mutation(m); }
  ~ScopedMutation() { set_mutation(previous_); }
  ScopedMutation(const ScopedMutation&) = delete;
  ScopedMutation& operator=(const ScopedMutation&) = delete;

 private:
  Mutation previous_;
};

}  // namespace testing
}  // namespace rieszlab

#endif  // RIESZLAB_LATERAL_HPP_

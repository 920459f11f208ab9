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
#include "help_text.hpp"

#include <string_view>

#include "rieszlab/theorem_suite.hpp"

namespace rieszlab::cli {
namespace {

constexpr std::string_view kGrammar = R"(SCRIPT LANGUAGE
  A script is a sequence of statements, each ended by ';'. '#' starts a
  comment that runs to the end of the line.

  Statements
    let NAME = EXPR;               bind a value, operator or space
    eval EXPR [@level N];          print the value of EXPR
    fragments EXPR [@level N];     list the fragments of an element
    decomps EXPR [@level N];       list the decompositions x = u lsup v
    check ID [key=value ...];      run one theorem check
    suite quick|full [seed=N] [threads=N];
    search [seed=N] [instances=N] [max_level=N] [bound=Q];
  @level N evaluates pointwise lattice operators and fragment lists on
  eventually constant elements at truncation level N.

  Spaces
    coord(n)   simple{t0,...,tm}   fin   ec   pl
  Elements (rationals are integers or p/q)
    coord[1,-2,3]                  vector in R^n
    simple{0,1/2,1}[2,0]           step function, one value per cell
    fin{(1,2),(4,-1)}              finitely supported (index, value)
    ec[1,5|5]                      eventually constant: prefix | tail
    pl{(0,0),(1/2,1),(1,0)}        continuous piecewise linear on [0,1]
    real[a]  real[a,b]             real number or interval
  Operators
    kernel{1: t -> t^2, 2->3: t -> pw(-t | 0 | t), *: t -> -t} on D -> C
        atom i maps through f into atom j ('*' covers the unlisted diagonal);
        pw(p0 | b1 | p1 ...) switches pieces at the breakpoints b
    linec{1:1, 2:2, ...; unit -> 0; target f}
        x |-> (sum a_n x_n) f on ec; '...' extends the coefficients linearly
    table{k1 -> v1, k2 -> v2} [on D -> C]
    latmeet(a, b)   series   series(tol)   example(NAME [, f])
        example names: plram_series knbdbj meyer_pl lateral_meet

  Expressions, loosest binding first
    <=  <<=  _|_  ==               order, fragment order, disjointness, equality
    \/                             supremum (operators: pointwise join)
    /\                             infimum (operators: pointwise meet)
    +  -                           sums
    *                              scalar multiple
    lsup                           lateral supremum
    linf                           lateral infimum
    -x                             negation
    x^+  x^-  T(x)  |x|            parts, application, modulus
  Functions
    one(S) zero(S) domain(T) codomain(T) pos(x|T) neg(x|T) abs(x|T) mod(x|T)
    latsup(x, y [, e]) latinf(x, y) fragments(e) decomps(x)
    pliev(u1, ...; v1, ...) meyer(T; x, y; e) meyer_unsafe(T; x, y)
    verify_oao(T) verify_positive(T) verify_dp(T)
  pos(T)(x), neg(T)(x) and mod(T)(x) use the image |T(x)| shortcut when
  verify_dp(T) holds and enumerate decompositions otherwise.

  Unicode spellings are accepted: ∨ ∧ ⊔ ⊓ ⊑ ⊥ ≤ ⁺ ⁻ → · −

EXIT CODES
  0 success   1 usage or I/O error   2 parse error   3 type or name error
  4 precondition error   5 a check failed
)";

}  // namespace

std::string help_footer() {
  std::string out(kGrammar);
  out += "\nCHECK IDS\n";
  for (const auto& c : check_registry()) {
    std::string id = c.id;
    id.resize(std::max<std::size_t>(id.size() + 1, 18), ' ');
    out += "  " + id + c.claim;
    if (!c.keys.empty()) {
      out += " [keys:";
      for (const auto& k : c.keys) out += " " + k;
      out += "]";
    }
    out += "\n";
  }
  out += "\nEvery check also accepts seed=N and samples=N.\n"
         "RIESZLAB_SEED sets the default master seed.\n";
  return out;
}

}  // namespace rieszlab::cli

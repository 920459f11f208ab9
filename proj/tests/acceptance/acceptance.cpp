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

// Acceptance run: one PASS/FAIL line per criterion. Tolerances, sample
// counts and time limits are fixed here and never read from the outside.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rieszlab/dsl/evaluator.hpp"
#include "rieszlab/dsl/parser.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator_lattice.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/sampling.hpp"
#include "rieszlab/theorem_suite.hpp"
#include "rieszlab/verify.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace rieszlab;

namespace {

constexpr std::uint64_t kSeed = 20260611;

struct Outcome {
  bool pass = true;
  int failures = 0;
  std::string detail;

  // Records a failed condition; the first few are kept for the report.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (failures++ >= 4) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CheckConfig cfg(std::initializer_list<std::pair<const std::string, std::string>> kv) {
  CheckConfig c{{"seed", std::to_string(kSeed)}};
  for (const auto& [k, v] : kv) c[k] = v;
  return c;
}

void expect_holds(Outcome& o, std::string_view id, const CheckConfig& config) {
  const TheoremCheck r = run_check(id, config);
  o.require(r.result.verdict == Verdict::kHolds, r.summary_line() + " " + r.result.notes);
}

Element coord(std::initializer_list<long> v) {
  std::vector<Scalar> s;
  for (long x : v) s.emplace_back(x);
  return Element::coordinate(std::move(s));
}

// ln 2 = 2 atanh(1/3) = Σ_k 2 / ((2k+1) 3^(2k+1)). Each term is at most a
// ninth of the previous one, so the tail after K terms is below 9/8 of the
// first omitted term.
RealInterval ln2_oracle(unsigned terms) {
  Scalar sum(0);
  Scalar pow3(3);
  for (unsigned k = 0; k < terms; ++k) {
    sum = sum + Scalar(2) / (Scalar(2 * k + 1) * pow3);
    pow3 = pow3 * Scalar(9);
  }
  const Scalar next = Scalar(2) / (Scalar(2 * terms + 1) * pow3);
  return {sum, sum + next * Scalar(9, 8)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Child {
  int exit_code = -1;
  std::string out;
};

Child spawn(const std::string& command) {
  Child c;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return c;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, n);
  const int status = pclose(pipe);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

// ------------------------------------------------------------ criteria

Outcome riesz_laws() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const TheoremCheck r = run_check("riesz-laws", cfg({{"samples", "1000"}, {"radius", "2"}, {"triple_radius", "2"}}));
  const double t = seconds_since(t0);
  o.require(r.result.verdict == Verdict::kHolds, r.summary_line());
  o.require(t < 10.0, "took " + std::to_string(t) + " s, limit 10 s");
  if (o.pass) o.detail = r.summary_line();
  return o;
}

Outcome fragment_algebra() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const TheoremCheck r = run_check("frag-ba", cfg({{"n", "12"}, {"exhaustive_n", "6"}, {"samples", "100"}}));
  const double t = seconds_since(t0);
  o.require(r.result.verdict == Verdict::kHolds, r.summary_line());
  o.require(t < 30.0, "took " + std::to_string(t) + " s, limit 30 s");
  if (o.pass) o.detail = r.summary_line();
  return o;
}

Outcome refinement_grid() {
  Outcome o;
  expect_holds(o, "lem-3.1", cfg({{"samples", "500"}}));
  return o;
}

// Brute-force join over all decompositions against Σ max(f_i(x_i), g_i(x_i)).
Outcome join_closed_form() {
  Outcome o;
  InstanceGenerator gen(kSeed);
  auto mx = [](const Scalar& a, const Scalar& b) { return max(a, b); };
  std::size_t cases = 0;
  auto one_case = [&](const std::vector<PiecewisePolynomial>& f, const std::vector<PiecewisePolynomial>& g,
                      const Element& x) {
    const std::size_t n = f.size();
    Kernel kf, kg, df, dg;
    for (std::size_t i = 0; i < n; ++i) {
      kf.terms.push_back({i + 1, 1, f[i]});
      kg.terms.push_back({i + 1, 1, g[i]});
      df.terms.push_back({i + 1, i + 1, f[i]});
      dg.terms.push_back({i + 1, i + 1, g[i]});
    }
    const Space dom = Space::coordinate(n);
    const Operator S = make_kernel(dom, Space::coordinate(1), kf);
    const Operator T = make_kernel(dom, Space::coordinate(1), kg);
    const Value got = join_at(S, T, x, std::nullopt, ScanMethod::kEnumerate).value;
    const Element want = Element::coordinate({oracle::summed_closed_form(f, g, x, mx)});
    o.require(got == Value(want), "summing kernel at " + x.str() + ": " + got.str() + " != " + want.str());
    const Operator DS = make_kernel(dom, dom, df);
    const Operator DT = make_kernel(dom, dom, dg);
    const Element diag = join_at(DS, DT, x, std::nullopt, ScanMethod::kEnumerate).value.element();
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar xi = x.dense_values()[i];
      o.require(diag.dense_values()[i] == max(f[i](xi), g[i](xi)), "diagonal kernel at " + x.str());
    }
    ++cases;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int pair = 0; pair < 3; ++pair) {
      std::vector<PiecewisePolynomial> f, g;
      for (std::size_t i = 0; i < n; ++i) {
        f.push_back(gen.function());
        g.push_back(gen.function());
      }
      std::vector<long> v(n, -2);
      for (;;) {
        std::vector<Scalar> s(v.begin(), v.end());
        one_case(f, g, Element::coordinate(std::move(s)));
        std::size_t i = 0;
        while (i < n && v[i] == 2) v[i++] = -2;
        if (i == n) break;
        ++v[i];
      }
    }
  }
  const std::size_t exhaustive = cases;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + gen.rng().below(10);
    std::vector<PiecewisePolynomial> f, g;
    for (std::size_t i = 0; i < n; ++i) {
      f.push_back(gen.function());
      g.push_back(gen.function());
    }
    one_case(f, g, gen.element(Space::coordinate(n)));
  }
  if (o.pass) {
    o.detail = std::to_string(exhaustive) + " grid cases, " + std::to_string(cases - exhaustive) + " random";
  }
  return o;
}

Outcome join_is_oao() {
  Outcome o;
  expect_holds(o, "thm-3.2", cfg({{"samples", "500"}}));
  return o;
}

Outcome modulus_dominates() {
  Outcome o;
  expect_holds(o, "thm-1.1-e", cfg({{"samples", "1000"}}));
  return o;
}

Outcome disjointness_preserving() {
  Outcome o;
  for (const char* id : {"thm-4.2-2", "thm-4.2-3", "thm-4.2-4"}) expect_holds(o, id, cfg({{"samples", "500"}}));
  return o;
}

Outcome alternating_series() {
  Outcome o;
  const Operator series = named_example("plram_series");
  const Element unit = one(Space::eventually_constant());
  const RealInterval at_one = apply(series, unit).as_interval();
  const RealInterval ln2 = ln2_oracle(30);
  const Scalar tol = Scalar::pow10_inverse(9);
  o.require(at_one.lower <= -ln2.upper && -ln2.lower <= at_one.upper,
            "enclosure " + at_one.str() + " misses -ln 2");
  o.require(at_one.width() <= tol, "enclosure wider than 1e-9");
  const BoundScan scan = lateral_bound_scan(series, unit, 62);
  o.require(!scan.levels.empty() && scan.levels.back().level == 62, "no level 62 in the growth table");
  if (!o.pass) return o;
  const Value top = scan.levels.back().max;
  const Scalar want = oracle::harmonic(31) / Scalar(2);
  o.require(top.as_interval() == RealInterval::point(want),
            "level 62 maximum " + top.str() + " != H_31/2 = " + want.str());
  o.require(want > Scalar(2), "H_31/2 does not exceed 2");
  o.require(scan.monotone, "growth table not monotone");
  for (std::size_t i = 1; i < scan.levels.size(); ++i) {
    o.require(value_leq(scan.levels[i - 1].max, scan.levels[i].max) == true, "level maxima decrease");
  }
  expect_holds(o, "ex-2.2", cfg({{"level", "62"}}));
  if (o.pass) o.detail = "level 62 max " + want.str() + " ~ " + std::to_string(want.to_double());
  return o;
}

Outcome forward_and_converse() {
  Outcome o;
  const Operator op = named_example("knbdbj");
  const Element unit = one(Space::eventually_constant());
  const BoundScan scan = lateral_bound_scan(op, unit, 12);
  std::size_t seen = 0;
  for (const auto& lv : scan.levels) {
    const long n = static_cast<long>(lv.level);
    const Element want = Scalar(n * (n + 1) / 2) * unit;
    o.require(lv.max == Value(want), "level " + std::to_string(n) + " max " + lv.max.str() + " != " + want.str());
    ++seen;
  }
  o.require(seen >= 12 && scan.levels.back().level == 12, "growth table stops early");
  expect_holds(o, "thm-2.3-forward", cfg({{"level", "12"}}));
  expect_holds(o, "thm-2.3-converse", cfg({{"samples", "500"}}));
  expect_holds(o, "rem-c00", cfg({{"samples", "500"}}));
  return o;
}

Outcome counterexamples() {
  Outcome o;
  expect_holds(o, "ex-4.3-pl", cfg({}));
  expect_holds(o, "ex-4.3-latmeet", cfg({}));
  const Space pl = Space::piecewise_linear();
  const Space simple = default_simple_space();
  struct Case {
    const char* name;
    Operator op;
    Space space;
  };
  for (const Case& c : {Case{"meyer_pl", named_example("meyer_pl"), pl},
                        Case{"lateral_meet", named_example("lateral_meet"), simple}}) {
    const Element u = one(c.space);
    const Element target = one(c.op.codomain());
    const MeyerResult m = meyer_pair_unsafe(c.op, u, Scalar(2) * u);
    o.require(m.value == Value(target), std::string(c.name) + " meyer pair " + m.value.str());
    o.require(verify_oao(c.op).verdict == Verdict::kHolds, std::string(c.name) + " not verified OAO");
    o.require(verify_disjointness_preserving(c.op).verdict == Verdict::kHolds,
              std::string(c.name) + " not verified disjointness preserving");
  }
  const Element u = one(pl);
  const auto decomps = enumerate_decompositions(u);
  const Element z = zero(pl);
  const bool exact = decomps.size() == 2 &&
                     ((decomps[0].left == z && decomps[0].right == u && decomps[1].left == u && decomps[1].right == z) ||
                      (decomps[0].left == u && decomps[0].right == z && decomps[1].left == z && decomps[1].right == u));
  o.require(exact, "decompositions of 1 in pl are not {(0,1),(1,0)}");
  return o;
}

Outcome linear_positivity() {
  Outcome o;
  InstanceGenerator gen(kSeed ^ 0x11);
  for (int i = 0; i < 100; ++i) {
    const Operator t = gen.nonzero_linear();
    SamplingPlan plan;
    plan.seed = gen.rng().next();
    const CheckReport r = verify_positive(t, plan);
    o.require(r.verdict == Verdict::kFails && r.witness.size() == 2 && r.witness[1] == -r.witness[0],
              "no (x, -x) refutation for " + t.str());
  }
  expect_holds(o, "rem-pos-linear", cfg({{"samples", "100"}}));
  return o;
}

Outcome mutations() {
  Outcome o;
  auto failing = [](testing::Mutation m, std::initializer_list<const char*> ids) {
    testing::ScopedMutation scope(m);
    std::vector<std::string> out;
    for (const char* id : ids) {
      if (run_check(id, cfg({{"samples", "100"}})).result.verdict == Verdict::kFails) out.emplace_back(id);
    }
    return out;
  };
  const auto meet = failing(testing::Mutation::kLateralInfMeetFormula, {"ex-4.3-latmeet", "frag-ba", "lat-order"});
  const auto flip = failing(testing::Mutation::kLateralSupSignFlip, {"lem-3.1", "frag-ba", "lat-order"});
  o.require(!meet.empty(), "meet-formula mutation survives every check");
  o.require(!flip.empty(), "sign-flip mutation survives every check");
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  if (o.pass) o.detail = "meet-formula kills " + join(meet) + "; sign-flip kills " + join(flip);
  // The unmutated library must pass the same checks.
  for (const char* id : {"ex-4.3-latmeet", "frag-ba", "lat-order", "lem-3.1"}) expect_holds(o, id, cfg({{"samples", "100"}}));
  return o;
}

std::size_t fuzz_parser(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  std::vector<std::string> seeds;
  for (const auto& entry : fs::directory_iterator(RIESZLAB_SCRIPTS_DIR)) {
    if (entry.path().extension() == ".rl") seeds.push_back(slurp(entry.path()));
  }
  const std::vector<std::string> vocab = {"let ", "eval ", "check ", "=", ";", "(", ")", "[", "]", "{", "}", ",",
                                          "|", "->", "\\/", "/\\", "lsup", "^+", "<=", "_|_", "+", "-", "*", "1",
                                          "2/3", "coord", "pl", "kernel", "linec", "table", "@level ", "⊔", "\xff"};
  std::size_t ok = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string input;
    if (i % 2 == 0) {
      const std::size_t n = rng() % 64;
      for (std::size_t k = 0; k < n; ++k) input.push_back(static_cast<char>(rng() & 0xFF));
    } else {
      input = seeds[rng() % seeds.size()];
      for (int k = 0; k < 3 && !input.empty(); ++k) {
        const std::size_t at = rng() % input.size();
        if (rng() % 2) {
          input.insert(at, vocab[rng() % vocab.size()]);
        } else {
          input.erase(at, 1 + rng() % 6);
        }
      }
    }
    try {
      const dsl::ParseResult p = dsl::parse(input);
      if (p.ok()) {
        dsl::typecheck(p.script);
        ++ok;
      }
    } catch (const std::exception& e) {
      o.require(false, std::string("input #") + std::to_string(i) + " threw " + e.what());
    }
  }
  return ok;
}

Outcome cli() {
  Outcome o;
  const std::string exe = quoted(RIESZLAB_CLI);
  const auto t0 = std::chrono::steady_clock::now();
  const Child suite = spawn(exe + " suite --profile quick");
  const double t = seconds_since(t0);
  o.require(suite.exit_code == 0, "quick suite exit " + std::to_string(suite.exit_code));
  o.require(t <= 60.0, "quick suite took " + std::to_string(t) + " s");
  const std::size_t parsed = fuzz_parser(o);
  std::size_t goldens = 0;
  for (const auto& entry : fs::directory_iterator(RIESZLAB_SCRIPTS_DIR)) {
    if (entry.path().extension() != ".rl") continue;
    const fs::path golden = fs::path(RIESZLAB_GOLDEN_DIR) / (entry.path().stem().string() + ".out");
    o.require(fs::exists(golden), "no golden for " + entry.path().filename().string());
    if (!fs::exists(golden)) continue;
    const Child run = spawn(exe + " run " + quoted(entry.path()));
    o.require(run.exit_code == 0 && run.out == slurp(golden), entry.path().filename().string() + " output differs");
    ++goldens;
  }
  o.require(goldens >= 15, "only " + std::to_string(goldens) + " golden scripts");
  if (o.pass) {
    std::ostringstream d;
    d.precision(1);
    d << std::fixed << "quick suite " << t << " s, 100000 fuzz inputs (" << parsed << " parsed), " << goldens
      << " goldens";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"lattice laws", riesz_laws},
      {"fragment Boolean algebra", fragment_algebra},
      {"disjoint refinement grid", refinement_grid},
      {"join closed form", join_closed_form},
      {"join is orthogonally additive", join_is_oao},
      {"|T(x)| <= |T|(x)", modulus_dominates},
      {"disjointness preserving parts", disjointness_preserving},
      {"alternating series", alternating_series},
      {"unbounded linear operator and converse", forward_and_converse},
      {"Meyer counterexamples", counterexamples},
      {"positive linear operators", linear_positivity},
      {"mutations", mutations},
      {"command line", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double t = seconds_since(t0);
    char head[64];
    std::snprintf(head, sizeof head, "C%02zu %s %.1fs ", i + 1, o.pass ? "PASS" : "FAIL", t);
    std::cout << head << criteria[i].first;
    if (!o.detail.empty()) std::cout << " | " << o.detail;
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}

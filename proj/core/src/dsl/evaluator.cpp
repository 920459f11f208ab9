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
#include "rieszlab/dsl/evaluator.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "rieszlab/dsl/parser.hpp"
#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/operator_lattice.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/theorem_suite.hpp"
#include "rieszlab/verify.hpp"

namespace rieszlab::dsl {
namespace {

struct Pointwise {
  PointwiseKind kind;
  Operator s;
  Operator t;
};
struct Truth {
  std::optional<bool> v;
};
struct FragmentList {
  std::vector<Element> items;
};
struct DecompositionList {
  std::vector<Decomposition> items;
};

using Rt = std::variant<Scalar, Space, Value, Operator, Pointwise, Truth, FragmentList, DecompositionList,
                        CheckReport, PlievGrid>;

// Runtime error already attributed to a span.
struct RuntimeFailure {
  Span span;
  std::string message;
  int code;
};

std::string joined(const std::vector<Element>& xs, std::string_view open, std::string_view close) {
  std::string out(open);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + std::string(close);
}

std::string render(const Rt& v) {
  struct {
    std::string operator()(const Scalar& s) const { return s.str(); }
    std::string operator()(const Space& s) const { return s.str(); }
    std::string operator()(const Value& v) const { return v.str(); }
    std::string operator()(const Operator& o) const { return o.str(); }
    std::string operator()(const Pointwise& p) const {
      switch (p.kind) {
        case PointwiseKind::kJoin: return "(" + p.s.str() + " \\/ " + p.t.str() + ")";
        case PointwiseKind::kMeet: return "(" + p.s.str() + " /\\ " + p.t.str() + ")";
        case PointwiseKind::kPos: return "pos(" + p.t.str() + ")";
        case PointwiseKind::kNeg: return "neg(" + p.t.str() + ")";
        case PointwiseKind::kModulus: return "mod(" + p.t.str() + ")";
      }
      return "?";
    }
    std::string operator()(const Truth& t) const { return t.v ? (*t.v ? "true" : "false") : "undecided"; }
    std::string operator()(const FragmentList& f) const { return joined(f.items, "{", "}"); }
    std::string operator()(const DecompositionList& d) const {
      std::string out = "{";
      for (std::size_t i = 0; i < d.items.size(); ++i) {
        if (i) out += ", ";
        out += "(" + d.items[i].left.str() + ", " + d.items[i].right.str() + ")";
      }
      return out + "}";
    }
    std::string operator()(const CheckReport& r) const { return r.serialize(); }
    std::string operator()(const PlievGrid& g) const {
      std::string out = "[";
      for (std::size_t i = 0; i < g.grid.size(); ++i) {
        if (i) out += "; ";
        out += joined(g.grid[i], "", "");
      }
      return out + "]";
    }
  } visitor;
  return std::visit(visitor, v);
}

constexpr std::uint64_t kMaxDimension = 1 << 16;

Space make_space(const SpaceLit& s) {
  switch (s.kind) {
    case SpaceKind::kCoordinate:
      if (s.dimension > kMaxDimension) {
        throw PreconditionError("coord(" + std::to_string(s.dimension) + ") exceeds the dimension limit " +
                                std::to_string(kMaxDimension));
      }
      return Space::coordinate(s.dimension);
    case SpaceKind::kSimpleFunction: return Space::simple_function(s.partition);
    case SpaceKind::kFinSupport: return Space::fin_support();
    case SpaceKind::kEventuallyConstant: return Space::eventually_constant();
    case SpaceKind::kPiecewiseLinear: return Space::piecewise_linear();
  }
  throw StructuralError("unknown space");
}

std::uint64_t atom_index(const Scalar& s) {
  if (!s.is_integer() || s.sign() <= 0) throw StructuralError("fin indices are positive integers, got " + s.str());
  return static_cast<std::uint64_t>(s.numerator_int());
}

Element make_element(const ElementLit& e) {
  switch (e.kind) {
    case SpaceKind::kCoordinate: return Element::coordinate(e.values);
    case SpaceKind::kSimpleFunction:
      return Element::simple_function(Space::simple_function(e.partition), e.values);
    case SpaceKind::kFinSupport: {
      std::vector<SparseEntry> entries;
      for (const auto& [i, v] : e.pairs) entries.push_back({atom_index(i), v});
      return Element::fin_support(std::move(entries));
    }
    case SpaceKind::kEventuallyConstant: return Element::eventually_constant(e.values, e.tail);
    case SpaceKind::kPiecewiseLinear: {
      std::vector<Breakpoint> pts;
      for (const auto& [t, v] : e.pairs) pts.push_back({t, v});
      return Element::piecewise_linear(std::move(pts));
    }
  }
  throw StructuralError("unknown element");
}

std::uint64_t option_u64(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw PreconditionError(key + "= needs a nonnegative integer, got '" + text + "'");
  }
  return v;
}

// Listing more fragments than this is refused rather than attempted.
constexpr std::uint64_t kMaxListed = std::uint64_t{1} << 16;

const FragmentEnumeration& listable(const FragmentEnumeration& f) {
  if (f.size() > kMaxListed) {
    throw PreconditionError("refusing to list " + std::to_string(f.size()) + " fragments (limit " +
                            std::to_string(kMaxListed) + ")");
  }
  return f;
}

class Interpreter {
 public:
  Interpreter(std::ostream& out, const RunOptions& options) : out_(out), options_(options) {}

  RunResult run(const Script& script) {
    RunResult result;
    for (const auto& s : script.statements) {
      try {
        statement(s, result);
      } catch (const RuntimeFailure& f) {
        result.diagnostics.push_back({f.span, f.message, Severity::kError});
        result.exit_code = f.code;
        return result;
      } catch (const LookupError& e) {
        result.diagnostics.push_back({s.span, e.what(), Severity::kError});
        result.exit_code = kExitType;
        return result;
      } catch (const std::exception& e) {
        result.diagnostics.push_back({s.span, e.what(), Severity::kError});
        result.exit_code = kExitPrecondition;
        return result;
      }
    }
    return result;
  }

 private:
  void statement(const Stmt& s, RunResult& result) {
    level_ = s.level;
    switch (s.kind) {
      case StmtKind::kLet:
        env_.insert_or_assign(s.name, eval(*s.expr));
        return;
      case StmtKind::kEval:
        out_ << render(eval(*s.expr)) << '\n';
        return;
      case StmtKind::kFragments: {
        const Element x = element(*s.expr);
        const FragmentEnumeration f = guarded(s.expr->span, [&] { return fragments(x, level_); });
        guarded(s.expr->span, [&] { return listable(f).size(); });
        for (std::uint64_t m = 0; m < f.size(); ++m) out_ << f.at(m).str() << '\n';
        return;
      }
      case StmtKind::kDecomps: {
        const Element x = element(*s.expr);
        const auto ds = guarded(s.expr->span, [&] {
          listable(fragments(x, level_));
          return enumerate_decompositions(x, level_);
        });
        for (const auto& d : ds) out_ << d.left.str() << " lsup " << d.right.str() << '\n';
        return;
      }
      case StmtKind::kCheck: {
        CheckConfig config;
        for (const auto& [k, v] : s.options) config[k] = v;
        if (!config.contains("seed")) config["seed"] = std::to_string(options_.seed);
        const TheoremCheck c = guarded(s.span, [&] { return run_check(s.name, config); });
        out_ << c.summary_line() << '\n';
        for (const auto& a : c.artifacts) out_ << "  " << a << '\n';
        if (!c.result.notes.empty() && c.result.verdict != Verdict::kHolds) out_ << "  notes: " << c.result.notes << '\n';
        if (c.result.failed()) result.exit_code = kExitCheckFailed;
        return;
      }
      case StmtKind::kSuite: {
        std::uint64_t seed = options_.seed;
        unsigned threads = options_.threads;
        for (const auto& [k, v] : s.options) {
          if (k == "seed") seed = option_u64(k, v);
          if (k == "threads") threads = static_cast<unsigned>(option_u64(k, v));
        }
        const SuiteRun run = run_all(parse_profile(s.name), seed, std::nullopt, threads);
        out_ << run.summary();
        if (run.fails > 0) result.exit_code = kExitCheckFailed;
        return;
      }
      case StmtKind::kSearch: {
        SearchConfig config;
        config.seed = options_.seed;
        for (const auto& [k, v] : s.options) {
          if (k == "seed") config.seed = option_u64(k, v);
          if (k == "instances") config.instances = option_u64(k, v);
          if (k == "max_level") config.max_level = option_u64(k, v);
          if (k == "bound") config.bound = Scalar::parse(v);
        }
        out_ << search_kkhdh(config).str();
        return;
      }
    }
  }

  template <class F>
  auto guarded(Span span, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const RuntimeFailure&) {
      throw;
    } catch (const LookupError& e) {
      throw RuntimeFailure{span, e.what(), kExitType};
    } catch (const std::exception& e) {
      throw RuntimeFailure{span, e.what(), kExitPrecondition};
    }
  }

  template <class T>
  T as(const Expr& e) {
    Rt v = eval(e);
    if (auto* p = std::get_if<T>(&v)) return std::move(*p);
    throw RuntimeFailure{e.span, "unexpected " + render(v), kExitType};
  }

  Element element(const Expr& e) {
    const Value v = as<Value>(e);
    if (!v.is_element()) {
      throw RuntimeFailure{e.span, "expected an element, got the real " + v.str(), kExitPrecondition};
    }
    return v.element();
  }

  SamplingPlan plan() const {
    SamplingPlan p;
    p.seed = options_.seed;
    return p;
  }

  const CheckReport& dp_report(const Operator& t) {
    for (const auto& [op, report] : dp_cache_) {
      if (&op.node() == &t.node()) return report;
    }
    dp_cache_.emplace_back(t, verify_disjointness_preserving(t, plan()));
    return dp_cache_.back().second;
  }

  Value apply_pointwise(const Pointwise& p, const Element& x) {
    if (!level_ && p.kind != PointwiseKind::kJoin && p.kind != PointwiseKind::kMeet) {
      const CheckReport& report = dp_report(p.t);
      if (report.verdict == Verdict::kHolds) {
        const DpKind kind = p.kind == PointwiseKind::kPos   ? DpKind::kPos
                            : p.kind == PointwiseKind::kNeg ? DpKind::kNeg
                                                            : DpKind::kModulus;
        return dp_fast(kind, p.t, x, report).value;
      }
    }
    return pointwise_at(p.kind, p.s, p.t, x, level_).value;
  }

  Rt call(const Expr& e) {
    const Expr& callee = *e.args[0];
    auto arg = [&](std::size_t i) -> const Expr& { return *e.args[i + 1]; };
    const std::size_t n = e.args.size() - 1;
    if (callee.kind == ExprKind::kIdent && !env_.contains(callee.text)) {
      const std::string& fn = callee.text;
      if (fn == "one" || fn == "zero") {
        const Space s = as<Space>(arg(0));
        return Value(fn == "one" ? one(s) : zero(s));
      }
      if (fn == "domain") return as<Operator>(arg(0)).domain();
      if (fn == "codomain") return as<Operator>(arg(0)).codomain();
      if (fn == "pos" || fn == "neg" || fn == "abs" || fn == "mod") {
        Rt v = eval(arg(0));
        if (auto* op = std::get_if<Operator>(&v)) {
          const PointwiseKind k = fn == "pos"   ? PointwiseKind::kPos
                                  : fn == "neg" ? PointwiseKind::kNeg
                                                : PointwiseKind::kModulus;
          return Pointwise{k, *op, *op};
        }
        const Value x = std::get<Value>(v);
        return fn == "pos" ? value_pos(x) : fn == "neg" ? value_neg(x) : value_abs(x);
      }
      if (fn == "latsup") {
        if (n == 3) return Value(lateral_sup(element(arg(0)), element(arg(1)), element(arg(2))));
        return Value(lateral_sup(element(arg(0)), element(arg(1))));
      }
      if (fn == "latinf") return Value(lateral_inf(element(arg(0)), element(arg(1))));
      if (fn == "fragments") return FragmentList{listable(fragments(element(arg(0)), level_)).materialize()};
      if (fn == "decomps") {
        const Element x = element(arg(0));
        listable(fragments(x, level_));
        return DecompositionList{enumerate_decompositions(x, level_)};
      }
      if (fn == "pliev") {
        std::vector<Element> us;
        std::vector<Element> vs;
        for (std::size_t i = 0; i < n; ++i) (i < e.groups[0] ? us : vs).push_back(element(arg(i)));
        return pliev_grid(us, vs);
      }
      if (fn == "meyer") {
        const Operator t = as<Operator>(arg(0));
        const Element x = element(arg(1));
        const Element y = element(arg(2));
        const Element base = element(arg(3));
        return meyer_pair(t, x, y, base, dp_report(t)).value;
      }
      if (fn == "meyer_unsafe") {
        return meyer_pair_unsafe(as<Operator>(arg(0)), element(arg(1)), element(arg(2))).value;
      }
      if (fn == "example") {
        std::optional<Element> f;
        if (n == 2) f = element(arg(1));
        return named_example(arg(0).text, f);
      }
      if (fn == "series") return make_alternating_series(as<Scalar>(arg(0)));
      if (fn == "latmeet") return make_lateral_meet(element(arg(0)), element(arg(1)));
      if (fn == "verify_oao") return verify_oao(as<Operator>(arg(0)), plan());
      if (fn == "verify_positive") return verify_positive(as<Operator>(arg(0)), plan());
      if (fn == "verify_dp") return verify_disjointness_preserving(as<Operator>(arg(0)), plan());
    }
    Rt f = eval(callee);
    const Element x = element(arg(0));
    if (auto* op = std::get_if<Operator>(&f)) return apply(*op, x);
    return apply_pointwise(std::get<Pointwise>(f), x);
  }

  Rt binary(const Expr& e) {
    const std::string& op = e.text;
    Rt a = eval(*e.args[0]);
    Rt b = eval(*e.args[1]);
    if (auto* x = std::get_if<Scalar>(&a)) {
      if (op == "*") {
        if (auto* y = std::get_if<Value>(&b)) return *x * *y;
        if (auto* y = std::get_if<Operator>(&b)) return *x * *y;
      }
      const Scalar& y = std::get<Scalar>(b);
      if (op == "+") return *x + y;
      if (op == "-") return *x - y;
      if (op == "*") return *x * y;
      if (op == "\\/") return max(*x, y);
      if (op == "/\\") return min(*x, y);
      if (op == "<=") return Truth{*x <= y};
      if (op == "==") return Truth{*x == y};
    }
    if (auto* s = std::get_if<Operator>(&a)) {
      const Operator& t = std::get<Operator>(b);
      if (op == "+") return *s + t;
      if (op == "-") return *s - t;
      if (op == "\\/") return Pointwise{PointwiseKind::kJoin, *s, t};
      if (op == "/\\") return Pointwise{PointwiseKind::kMeet, *s, t};
    }
    if (auto* s = std::get_if<Space>(&a)) return Truth{*s == std::get<Space>(b)};
    const Value& x = std::get<Value>(a);
    const Value& y = std::get<Value>(b);
    if (op == "+") return x + y;
    if (op == "-") return x - y;
    if (op == "\\/") return value_sup(x, y);
    if (op == "/\\") return value_inf(x, y);
    if (op == "<=") return Truth{value_leq(x, y)};
    if (op == "<<=") return Truth{value_fragment(x, y)};
    if (op == "_|_") return Truth{value_disjoint(x, y)};
    if (op == "==") return Truth{values_equal(x, y)};
    if (op == "lsup") return Value(lateral_sup(element(*e.args[0]), element(*e.args[1])));
    if (op == "linf") return Value(lateral_inf(element(*e.args[0]), element(*e.args[1])));
    throw RuntimeFailure{e.span, "operator '" + op + "' not applicable", kExitType};
  }

  Rt unary_like(const Expr& e) {
    Rt v = eval(*e.args[0]);
    if (auto* s = std::get_if<Scalar>(&v)) {
      if (e.kind == ExprKind::kUnary) return -*s;
      if (e.kind == ExprKind::kAbs) return s->abs();
      return e.text == "^+" ? max(*s, Scalar(0)) : max(-*s, Scalar(0));
    }
    if (auto* op = std::get_if<Operator>(&v)) {
      if (e.kind == ExprKind::kUnary) return -*op;
      if (e.kind == ExprKind::kAbs) return Pointwise{PointwiseKind::kModulus, *op, *op};
      return Pointwise{e.text == "^+" ? PointwiseKind::kPos : PointwiseKind::kNeg, *op, *op};
    }
    const Value& x = std::get<Value>(v);
    if (e.kind == ExprKind::kUnary) return -x;
    if (e.kind == ExprKind::kAbs) return value_abs(x);
    return e.text == "^+" ? value_pos(x) : value_neg(x);
  }

  Rt literal_operator(const Expr& e) {
    if (e.kind == ExprKind::kKernel) {
      Kernel k;
      for (const auto& t : e.kernel.terms) k.terms.push_back({t.source, t.target, t.f});
      k.diagonal = e.kernel.diagonal;
      return make_kernel(make_space(e.on->first), make_space(e.on->second), std::move(k));
    }
    if (e.kind == ExprKind::kLinec) {
      CoefficientRule rule;
      rule.extrapolate = e.linec.extrapolate;
      for (const auto& [i, a] : e.linec.coefficients) {
        if (!rule.table.emplace(i, a).second) {
          throw StructuralError("duplicate linec coefficient " + std::to_string(i));
        }
      }
      Element target = element(*e.args[0]);
      Element unit = zero(target.space());
      if (e.linec.has_unit) {
        Rt u = eval(*e.args[1]);
        if (auto* s = std::get_if<Scalar>(&u)) {
          if (!s->is_zero()) throw PreconditionError("linec unit must be an element or 0");
        } else {
          unit = element(*e.args[1]);
        }
      }
      return make_linear_ec(std::move(rule), std::move(target), std::move(unit));
    }
    std::vector<std::pair<Element, Element>> entries;
    for (std::size_t i = 0; i + 1 < e.args.size(); i += 2) {
      entries.emplace_back(element(*e.args[i]), element(*e.args[i + 1]));
    }
    if (e.on) return make_match_table(make_space(e.on->first), make_space(e.on->second), std::move(entries));
    if (entries.empty()) throw PreconditionError("an empty table needs an 'on D -> C' clause");
    const Space d = entries.front().first.space();
    const Space c = entries.front().second.space();
    return make_match_table(d, c, std::move(entries));
  }

  Rt eval(const Expr& e) {
    return guarded(e.span, [&]() -> Rt {
      switch (e.kind) {
        case ExprKind::kNumber: return e.number;
        case ExprKind::kSpace: return make_space(e.space);
        case ExprKind::kElement: return Value(make_element(e.element));
        case ExprKind::kReal: {
          const auto& v = e.element.values;
          if (v.size() == 2 && v[1] < v[0]) throw StructuralError("real interval with upper < lower");
          return Value(RealInterval{v.front(), v.back()});
        }
        case ExprKind::kKernel:
        case ExprKind::kLinec:
        case ExprKind::kTable: return literal_operator(e);
        case ExprKind::kIdent: {
          if (auto it = env_.find(e.text); it != env_.end()) return it->second;
          if (e.text == "series") return make_alternating_series();
          throw LookupError("unbound identifier '" + e.text + "'");
        }
        case ExprKind::kUnary:
        case ExprKind::kPostfix:
        case ExprKind::kAbs: return unary_like(e);
        case ExprKind::kBinary: return binary(e);
        case ExprKind::kCall: return call(e);
      }
      throw StructuralError("malformed expression");
    });
  }

  std::ostream& out_;
  RunOptions options_;
  std::map<std::string, Rt, std::less<>> env_;
  std::optional<std::size_t> level_;
  std::vector<std::pair<Operator, CheckReport>> dp_cache_;
};

}  // namespace

RunResult execute(const Script& script, std::ostream& out, const RunOptions& options) {
  return Interpreter(out, options).run(script);
}

RunResult run_script(std::string_view text, std::ostream& out, const RunOptions& options) {
  ParseResult parsed = parse(text);
  if (!parsed.ok()) return {kExitParse, std::move(parsed.diagnostics)};
  std::vector<Diagnostic> type_errors = typecheck(parsed.script);
  if (!type_errors.empty()) return {kExitType, std::move(type_errors)};
  return execute(parsed.script, out, options);
}

}  // namespace rieszlab::dsl

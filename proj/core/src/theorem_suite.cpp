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
#include "rieszlab/theorem_suite.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <set>
#include <sstream>
#include <thread>

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator_lattice.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/sampling.hpp"
#include "suite_internal.hpp"

namespace rieszlab {
namespace suite {

namespace {

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw PreconditionError("config " + key + "=" + text + " is not a nonnegative integer");
  }
  return v;
}

}  // namespace

std::size_t Ctx::option(const std::string& key, std::size_t fallback, std::size_t lo, std::size_t hi) const {
  auto it = config_.find(key);
  if (it == config_.end()) return fallback;
  const std::uint64_t v = parse_uint(key, it->second);
  if (v < lo || v > hi) {
    throw PreconditionError("config " + key + "=" + it->second + " outside the supported range [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace suite

namespace {

constexpr std::size_t kDefaultSamples = 500;
constexpr std::size_t kMaxSamples = 100000;

const suite::Entry& find_entry(std::string_view id) {
  for (const auto& e : suite::entries()) {
    if (e.info.id == id) return e;
  }
  throw LookupError("unknown check id '" + std::string(id) + "'");
}

std::string config_str(const CheckConfig& config) {
  std::string out;
  for (const auto& [k, v] : config) {
    if (!out.empty()) out += ',';
    out += k + "=" + v;
  }
  return out;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : suite::entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::string TheoremCheck::summary_line() const {
  return id + " " + std::string(to_string(result.verdict)) + " " + std::to_string(result.samples_used) + " " +
         format_witness(result.witness);
}

std::string TheoremCheck::serialize() const {
  std::string out = format_record({{"record", "check"},
                                   {"id", id},
                                   {"config", config_str(config)},
                                   {"verdict", std::string(to_string(result.verdict))},
                                   {"samples", std::to_string(result.samples_used)},
                                   {"seed", std::to_string(result.seed)},
                                   {"mode", result.exhaustive ? "exhaustive" : "sampled"},
                                   {"witness", format_witness(result.witness)},
                                   {"notes", result.notes}});
  out += '\n';
  for (std::size_t i = 0; i < artifacts.size(); ++i) {
    out += format_record({{"record", "artifact"}, {"id", id}, {"n", std::to_string(i)}, {"text", artifacts[i]}});
    out += '\n';
  }
  return out;
}

TheoremCheck run_check(std::string_view id, const CheckConfig& config) {
  const suite::Entry& entry = find_entry(id);
  for (const auto& [key, value] : config) {
    const bool known = key == "seed" || key == "samples" ||
                       std::find(entry.info.keys.begin(), entry.info.keys.end(), key) != entry.info.keys.end();
    if (!known) {
      std::string accepted = "seed, samples";
      for (const auto& k : entry.info.keys) accepted += ", " + k;
      throw PreconditionError("check " + entry.info.id + " does not take config key '" + key + "' (accepted: " +
                              accepted + ")");
    }
  }
  suite::Ctx probe(config, 0, 0);
  const std::uint64_t master = probe.option("seed", kDefaultSeed, 0, SIZE_MAX);
  const std::size_t samples = probe.option("samples", kDefaultSamples, 1, kMaxSamples);
  const std::uint64_t seed = Rng::derive(master, entry.info.id);
  suite::Ctx ctx(config, seed, samples);
  ctx.report.property = entry.info.id;
  ctx.report.seed = seed;
  entry.run(ctx);
  if (!ctx.failed()) {
    ctx.report.verdict = ctx.undecided > 0 ? Verdict::kInconclusive : Verdict::kHolds;
    if (ctx.undecided > 0) {
      if (!ctx.report.notes.empty()) ctx.report.notes += "; ";
      ctx.report.notes += std::to_string(ctx.undecided) + " comparisons undecided by interval overlap";
    }
  }
  return TheoremCheck{entry.info.id, config, std::move(ctx.report), std::move(ctx.artifacts)};
}

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::kQuick;
  if (text == "full") return Profile::kFull;
  throw PreconditionError("unknown profile '" + std::string(text) + "' (quick or full)");
}

std::string_view to_string(Profile p) { return p == Profile::kQuick ? "quick" : "full"; }

CheckConfig profile_config(Profile profile, std::uint64_t master_seed, std::string_view id) {
  CheckConfig config{{"seed", std::to_string(master_seed)}};
  const bool quick = profile == Profile::kQuick;
  config["samples"] = std::to_string(quick ? 100 : 1000);
  if (id == "riesz-laws" && quick) config["triple_radius"] = "1";
  if (id == "frag-ba" && quick) config["exhaustive_n"] = "5";
  if (id == "thm-2.3-forward" && !quick) config["level"] = "40";
  return config;
}

std::string SuiteRun::summary() const {
  std::string out;
  for (const auto& c : checks) out += c.summary_line() + "\n";
  out += "total " + std::to_string(checks.size()) + " holds " + std::to_string(holds) + " fails " +
         std::to_string(fails) + " inconclusive " + std::to_string(inconclusive) + "\n";
  return out;
}

std::string SuiteRun::report() const {
  std::string out = format_record({{"record", "suite"},
                                   {"profile", std::string(to_string(profile))},
                                   {"seed", std::to_string(seed)},
                                   {"checks", std::to_string(checks.size())},
                                   {"holds", std::to_string(holds)},
                                   {"fails", std::to_string(fails)},
                                   {"inconclusive", std::to_string(inconclusive)}});
  out += '\n';
  for (const auto& c : checks) out += c.serialize();
  return out;
}

SuiteRun run_all(Profile profile, std::uint64_t seed, const std::optional<std::vector<std::string>>& ids,
                 unsigned threads) {
  std::vector<std::string> selected;
  if (ids) {
    if (ids->empty()) throw PreconditionError("empty check id filter");
    const std::set<std::string> wanted(ids->begin(), ids->end());
    for (const auto& id : wanted) (void)find_entry(id);
    for (const auto& info : check_registry()) {
      if (wanted.count(info.id)) selected.push_back(info.id);
    }
  } else {
    for (const auto& info : check_registry()) selected.push_back(info.id);
  }
  SuiteRun run;
  run.profile = profile;
  run.seed = seed;
  run.checks.resize(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        run.checks[i] = run_check(selected[i], profile_config(profile, seed, selected[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(selected.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& c : run.checks) {
    switch (c.result.verdict) {
      case Verdict::kHolds:
        ++run.holds;
        break;
      case Verdict::kFails:
        ++run.fails;
        break;
      case Verdict::kInconclusive:
        ++run.inconclusive;
        break;
    }
  }
  return run;
}

// ------------------------------------------------------------ exploration

std::string_view to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::kStabilized:
      return "stabilized";
    case GrowthClass::kUnbounded:
      return "unbounded";
    case GrowthClass::kUndetermined:
      return "undetermined";
  }
  return "?";
}

SearchInstance classify_join_growth(const Operator& s, const Operator& t, const Element& x, std::size_t max_level,
                                    const Scalar& bound, std::string label) {
  const Space ec = Space::eventually_constant();
  for (const Operator* op : {&s, &t}) {
    if (!(op->domain() == ec) || !(op->codomain() == ec)) {
      throw UnsupportedError("the exploration harness needs operators from ec into ec, got " + op->domain().str() +
                             " -> " + op->codomain().str());
    }
  }
  if (!(x.space() == ec)) throw UnsupportedError("the exploration harness needs a point of ec");
  SearchInstance inst{std::move(label), s, t, x, GrowthClass::kUndetermined, 0, 0, {}, true};
  if (has_finite_fragments(x)) {
    const auto r = join_at(s, t, x, std::nullopt, ScanMethod::kPieceAdditive);
    inst.growth = GrowthClass::kStabilized;
    inst.first_level = inst.level = x.prefix().size();
    inst.levels = {r.value};
    return inst;
  }
  const std::size_t top = std::max(max_level, x.prefix().size());
  const auto r = join_at(s, t, x, top, ScanMethod::kPieceAdditive);
  inst.first_level = r.first_level;
  inst.levels = r.levels;
  inst.monotone = r.monotone;
  const Element cap = bound * one(ec);
  for (std::size_t i = 0; i < inst.levels.size(); ++i) {
    const Element& v = inst.levels[i].element();
    if (!leq(v, cap) || !leq(-cap, v)) {
      inst.growth = inst.monotone ? GrowthClass::kUnbounded : GrowthClass::kUndetermined;
      inst.level = inst.first_level + i;
      return inst;
    }
  }
  std::size_t start = inst.levels.size() - 1;
  while (start > 0 && inst.levels[start - 1] == inst.levels.back()) --start;
  if (start + 1 < inst.levels.size()) {
    inst.growth = GrowthClass::kStabilized;
    inst.level = inst.first_level + start;
  } else {
    inst.growth = GrowthClass::kUndetermined;
    inst.level = inst.first_level + inst.levels.size() - 1;
  }
  return inst;
}

std::size_t SearchReport::count(GrowthClass c) const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [&](const SearchInstance& i) { return i.growth == c; }));
}

std::string SearchReport::str() const {
  std::ostringstream out;
  out << "# " << kSearchDisclaimer << "\n";
  out << format_record({{"record", "search"},
                        {"seed", std::to_string(config.seed)},
                        {"instances", std::to_string(instances.size())},
                        {"max_level", std::to_string(config.max_level)},
                        {"bound", config.bound.str()},
                        {"stabilized", std::to_string(count(GrowthClass::kStabilized))},
                        {"unbounded", std::to_string(count(GrowthClass::kUnbounded))},
                        {"undetermined", std::to_string(count(GrowthClass::kUndetermined))}})
      << "\n";
  for (const auto& i : instances) {
    out << format_record({{"record", "instance"},
                          {"label", i.label},
                          {"class", std::string(to_string(i.growth))},
                          {"level", std::to_string(i.level)},
                          {"value", i.levels.empty() ? "-" : i.levels.back().str()},
                          {"monotone", i.monotone ? "yes" : "no"},
                          {"S", i.s.str()},
                          {"T", i.t.str()},
                          {"x", i.x.str()}})
        << "\n";
  }
  for (const auto& i : instances) {
    if (i.growth == GrowthClass::kStabilized) continue;
    out << format_record({{"record", "candidate"}, {"label", i.label}, {"class", std::string(to_string(i.growth))}})
        << "\n";
  }
  return out.str();
}

SearchReport search_kkhdh(const SearchConfig& config) {
  if (config.max_level == 0) throw PreconditionError("search needs max_level >= 1");
  if (config.bound.sign() <= 0) throw PreconditionError("search needs a positive divergence bound");
  SearchReport report{config, {}};
  const Space ec = Space::eventually_constant();
  InstanceGenerator gen(Rng::derive(config.seed, "search"));
  gen.space_menu = {SpaceKind::kEventuallyConstant};
  auto point = [&] {
    Element x = gen.element(ec);
    while (x.tail().is_zero()) x = gen.element(ec);
    return x;
  };
  const Operator linear = named_example("knbdbj");
  report.instances.push_back(classify_join_growth(linear, linear, one(ec), config.max_level, config.bound, "S=T"));
  report.instances.push_back(
      classify_join_growth(linear, Scalar(0) * linear, one(ec), config.max_level, config.bound, "linear-vs-0"));
  for (std::size_t i = 0; i < config.instances; ++i) {
    Operator s = gen.operator_between(ec, ec);
    Operator t = gen.rng().chance(15) ? s : gen.operator_between(ec, ec);
    report.instances.push_back(
        classify_join_growth(s, t, point(), config.max_level, config.bound, "random-" + std::to_string(i)));
  }
  return report;
}

}  // namespace rieszlab

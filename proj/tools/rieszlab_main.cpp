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
// Command-line front end: runs scripts, the theorem suite, single checks
// and the supremum search.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "help_text.hpp"
#include "rieszlab/dsl/ast.hpp"
#include "rieszlab/dsl/diagnostic.hpp"
#include "rieszlab/dsl/evaluator.hpp"
#include "rieszlab/dsl/parser.hpp"
#include "rieszlab/error.hpp"
#include "rieszlab/theorem_suite.hpp"

namespace {

using rieszlab::dsl::kExitCheckFailed;
using rieszlab::dsl::kExitOk;
using rieszlab::dsl::kExitParse;
using rieszlab::dsl::kExitPrecondition;
using rieszlab::dsl::kExitType;
using rieszlab::dsl::kExitUsage;

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "rieszlab: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

void print_diagnostics(const std::vector<rieszlab::dsl::Diagnostic>& diags, const std::string& name) {
  for (const auto& d : diags) std::cerr << d.format(name) << "\n";
}

int run_file(const std::string& path, std::uint64_t seed) {
  std::string text;
  if (!read_file(path, text)) return kExitUsage;
  const auto result = rieszlab::dsl::run_script(text, std::cout, {seed, 0});
  std::cout.flush();
  print_diagnostics(result.diagnostics, path);
  return result.exit_code;
}

int format_file(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return kExitUsage;
  const auto parsed = rieszlab::dsl::parse(text);
  if (!parsed.ok()) {
    print_diagnostics(parsed.diagnostics, path);
    return kExitParse;
  }
  std::cout << rieszlab::dsl::print(parsed.script);
  return kExitOk;
}

int run_suite(const std::string& profile_name, std::uint64_t seed, const std::string& report_path, unsigned threads) {
  const rieszlab::Profile profile = rieszlab::parse_profile(profile_name);
  const rieszlab::SuiteRun run = rieszlab::run_all(profile, seed, std::nullopt, threads);
  std::cout << run.summary();
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "rieszlab: cannot write " << report_path << "\n";
      return kExitUsage;
    }
    out << run.report();
  }
  return run.fails > 0 ? kExitCheckFailed : kExitOk;
}

int run_one_check(const std::string& id, const std::vector<std::string>& pairs, std::uint64_t seed) {
  rieszlab::CheckConfig config{{"seed", std::to_string(seed)}};
  for (const auto& kv : pairs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "rieszlab: --config expects key=value, got '" << kv << "'\n";
      return kExitUsage;
    }
    config[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const rieszlab::TheoremCheck c = rieszlab::run_check(id, config);
  std::cout << c.serialize();
  return c.result.failed() ? kExitCheckFailed : kExitOk;
}

int run_search(rieszlab::SearchConfig config, const std::string& bound) {
  if (!bound.empty()) config.bound = rieszlab::Scalar::parse(bound);
  std::cout << rieszlab::search_kkhdh(config).str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rieszlab: exact computations in vector lattices and with orthogonally additive operators"};
  app.footer(rieszlab::cli::help_footer());
  app.require_subcommand(1);

  std::uint64_t seed = rieszlab::kDefaultSeed;
  app.add_option("--seed", seed, "Master seed for sampling")->envname("RIESZLAB_SEED")->capture_default_str();

  std::string script;
  auto* run = app.add_subcommand("run", "Run a script");
  run->add_option("file", script, "Script path")->required();

  std::string fmt_path;
  auto* fmt = app.add_subcommand("fmt", "Print a script in canonical ASCII form");
  fmt->add_option("file", fmt_path, "Script path")->required();

  std::string profile = "quick";
  std::string report;
  unsigned threads = 0;
  auto* suite = app.add_subcommand("suite", "Run every theorem check");
  suite->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  suite->add_option("--report", report, "Write the structured report to this path");
  suite->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  std::string check_id;
  std::vector<std::string> config;
  auto* check = app.add_subcommand("check", "Run one theorem check");
  check->add_option("id", check_id, "Check id (see the list below)")->required();
  check->add_option("--config", config, "key=value settings");

  rieszlab::SearchConfig search_config;
  std::string bound;
  auto* search = app.add_subcommand("search", "Level-truncated supremum search in the eventually constant space");
  search->add_option("--max-level", search_config.max_level, "Truncation level")->capture_default_str();
  search->add_option("--instances", search_config.instances, "Random instances")->capture_default_str();
  search->add_option("--bound", bound, "Growth bound B (rational)");

  // --seed is accepted after the subcommand too.
  for (auto* sub : {run, suite, check, search}) {
    sub->add_option("--seed", seed, "Master seed for sampling")->envname("RIESZLAB_SEED");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return run_file(script, seed);
    if (*fmt) return format_file(fmt_path);
    if (*suite) return run_suite(profile, seed, report, threads);
    if (*check) return run_one_check(check_id, config, seed);
    if (*search) {
      search_config.seed = seed;
      return run_search(search_config, bound);
    }
  } catch (const rieszlab::LookupError& e) {
    std::cerr << "rieszlab: " << e.what() << "\n";
    return kExitType;
  } catch (const std::exception& e) {
    std::cerr << "rieszlab: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitUsage;
}

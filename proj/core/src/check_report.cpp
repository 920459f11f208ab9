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

#include "rieszlab/check_report.hpp"

#include "rieszlab/error.hpp"

namespace rieszlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string format_witness(const std::vector<Element>& witness) {
  if (witness.empty()) return "-";
  std::string out = "[";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += "; ";
    out += witness[i].str();
  }
  return out + "]";
}

std::string format_record(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    const bool quote = value.empty() || value.find_first_of(" \"=\\\t\n") != std::string::npos;
    if (!quote) {
      out += value;
      continue;
    }
    out += '"';
    for (char c : value) {
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_record(std::string_view line) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    if (i >= line.size()) break;
    const std::size_t eq = line.find('=', i);
    if (eq == std::string_view::npos) throw StructuralError("record field without '='");
    std::string key(line.substr(i, eq - i));
    i = eq + 1;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        const char c = line[i++];
        if (c == '\\' && i < line.size()) {
          const char escaped = line[i++];
          value += escaped == 'n' ? '\n' : escaped;
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          value += c;
        }
      }
      if (!closed) throw StructuralError("unterminated quoted value in record");
    } else {
      const std::size_t end = std::min(line.find(' ', i), line.size());
      value = std::string(line.substr(i, end - i));
      i = end;
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

std::string CheckReport::serialize() const {
  return format_record({{"property", property},
                        {"verdict", std::string(to_string(verdict))},
                        {"witness", format_witness(witness)},
                        {"samples", std::to_string(samples_used)},
                        {"seed", std::to_string(seed)},
                        {"mode", exhaustive ? "exhaustive" : "sampled"},
                        {"notes", notes}});
}

}  // namespace rieszlab

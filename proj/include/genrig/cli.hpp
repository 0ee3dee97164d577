// Copyright 2026 The genrig Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "genrig/field.hpp"
#include "genrig/graph.hpp"

namespace genrig {

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;  // empty or "-" means standard output
  int dim = 3;
  // Unset means the per-check default: 3 for matroid checks, 5 for global.
  std::optional<int> trials;
  std::uint64_t seed = 0;
  Modulus modulus = Modulus::kM61;
  std::vector<std::string> checks;
  std::string family;
  std::string suite;
  std::size_t corpus_size = 240;
  unsigned threads = 0;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitEngine = 3;

// Builds a graph from a family spec such as "complete:5" or
// "glue:a.json,b.json,3". Throws InputError on unknown or malformed specs.
Graph generate_family(const std::string& spec);

// Expands "all" and validates names; throws InputError on unknown checks.
std::vector<std::string> parse_checks(const std::string& list);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace genrig

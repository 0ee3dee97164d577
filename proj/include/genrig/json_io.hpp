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

#include <string>
#include <string_view>

#include <json.hpp>

#include "genrig/engine.hpp"
#include "genrig/global_rigidity.hpp"
#include "genrig/graph.hpp"
#include "genrig/harness.hpp"

namespace genrig {

using Json = nlohmann::ordered_json;

// Graph files: {"n": <int>, "edges": [[u, v], ...]}. The writer emits one
// canonical compact line, so write(read(write(g))) is byte-stable.
std::string write_graph(const Graph& g);
Graph read_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

Json to_json(const Edge& e);
Json to_json(const EdgeList& edges);
Json to_json(const Graph& g);
Json to_json(const SeparabilityWitness& w);
Json to_json(const MatroidReport& r);
Json to_json(const StressTrial& t);
Json to_json(const GlobalRigidityVerdict& v);
Json to_json(const HendricksonReport& h);
Json to_json(const ReconstructibilityVerdict& v);
// Violations carry their graph; the other records only index and label.
Json to_json(const PropertyResult& r);

// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace genrig

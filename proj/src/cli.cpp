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

#include "genrig/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "genrig/engine.hpp"
#include "genrig/errors.hpp"
#include "genrig/generators.hpp"
#include "genrig/global_rigidity.hpp"
#include "genrig/harness.hpp"
#include "genrig/json_io.hpp"

namespace genrig {

namespace {

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

VertexPartitionSpec parse_pairs(const std::string& text) {
  VertexPartitionSpec spec;
  if (text.find('-') == std::string::npos) {
    const int k = parse_int(text, "pair count");
    if (k < 0) throw InputError("pair count must be non-negative");
    for (int i = 0; i < k; ++i) spec.identified_pairs.push_back({i, i});
    return spec;
  }
  for (const auto& item : split(text, ';')) {
    const auto uv = split(item, '-');
    if (uv.size() != 2) throw InputError("pairs must look like u-v;u-v");
    spec.identified_pairs.push_back({parse_int(uv[0], "vertex"), parse_int(uv[1], "vertex")});
  }
  return spec;
}

const std::set<std::string>& known_checks() {
  static const std::set<std::string> k{"rank",  "rigid",       "redundant", "bridges",
                                       "mconn", "hendrickson", "global",    "classify"};
  return k;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

Json tool_json() {
  Json j;
  j["name"] = "genrig";
  j["version"] = GENRIG_VERSION;
  return j;
}

Json config_json(const RunConfig& c, int trials, int global_trials) {
  Json j;
  j["command"] = c.command;
  if (!c.input.empty()) j["input"] = c.input;
  if (!c.suite.empty()) j["suite"] = c.suite;
  if (c.command == "analyze") j["dim"] = c.dim;
  j["trials"] = trials;
  j["global_trials"] = global_trials;
  j["seed"] = c.seed;
  j["modulus"] = modulus_name(c.modulus);
  if (!c.checks.empty()) j["checks"] = c.checks;
  if (c.command == "verify") j["corpus_size"] = c.corpus_size;
  return j;
}

bool wants(const RunConfig& c, const char* check) {
  return std::find(c.checks.begin(), c.checks.end(), check) != c.checks.end();
}

std::string cmd_generate(const RunConfig& c) { return write_graph(generate_family(c.family)); }

std::string cmd_analyze(const RunConfig& c) {
  if (c.dim < 1) throw InputError("--dim must be >= 1");
  const Graph g = read_graph_file(c.input);
  const int trials = c.trials.value_or(3);
  const int global_trials = c.trials.value_or(5);
  RigidityEngine engine(EngineConfig{trials, c.seed, c.modulus});
  const StressTestConfig stress{global_trials, c.seed, c.modulus};
  const int d = c.dim;

  Json report;
  report["tool"] = tool_json();
  report["config"] = config_json(c, trials, global_trials);
  report["graph"] = {{"n", g.vertex_count()}, {"edges", g.edge_count()}};

  const bool matroid = wants(c, "rank") || wants(c, "rigid") || wants(c, "redundant") ||
                       wants(c, "bridges") || wants(c, "mconn");
  if (matroid) {
    const Json full = to_json(engine.analyze(g, d));
    Json m;
    auto take = [&](const char* key) { m[key] = full[key]; };
    if (wants(c, "rank")) {
      take("rank");
      take("dof");
      take("independent");
    }
    if (wants(c, "rigid")) take("rigid");
    if (wants(c, "redundant")) take("redundantly_rigid");
    if (wants(c, "bridges")) take("bridges");
    if (wants(c, "mconn")) {
      take("components");
      take("m_connected");
      take("witness");
    }
    for (const char* key : {"dim", "seed", "trials", "seeds", "modulus"}) take(key);
    report["matroid"] = std::move(m);
  }
  if (wants(c, "hendrickson")) {
    if (g.vertex_count() < d + 2) {
      report["hendrickson"] = {{"skipped", "fewer than d+2 vertices"}};
    } else {
      report["hendrickson"] = to_json(hendrickson_check(g, d, engine));
    }
  }
  if (wants(c, "global")) report["global"] = to_json(is_globally_rigid(g, d, stress));
  if (wants(c, "classify")) {
    if (d < 2) {
      report["classify"] = {{"skipped", "classification needs d >= 2"}};
    } else if (has_isolated_vertex(g)) {
      report["classify"] = {{"skipped", "graph has isolated vertices"}};
    } else {
      report["classify"] = to_json(classify_reconstructibility(g, d, engine, stress));
    }
  }
  return dump(report);
}

std::string cmd_verify(const RunConfig& c, bool& passed) {
  static const std::vector<std::string> suites{"mconnected", "monotonicity", "cone", "dofbound",
                                               "motion",     "gluing",       "oracle"};
  if (c.suite != "all" && std::find(suites.begin(), suites.end(), c.suite) == suites.end()) {
    throw InputError("unknown suite '" + c.suite + "'");
  }
  const int trials = c.trials.value_or(3);
  const int global_trials = c.trials.value_or(5);
  HarnessContext ctx;
  ctx.engine = std::make_shared<RigidityEngine>(EngineConfig{trials, c.seed, c.modulus});
  ctx.stress = StressTestConfig{global_trials, c.seed, c.modulus};
  ctx.threads = c.threads;
  CorpusSpec spec;
  spec.count = c.corpus_size;
  const Corpus corpus = random_corpus(spec, c.seed);

  std::vector<PropertyResult> results;
  auto run = [&](const std::string& name) { return c.suite == "all" || c.suite == name; };
  if (run("mconnected")) {
    for (int d : {2, 3}) results.push_back(verify_mconnected_theorem(corpus, d, ctx));
  }
  if (run("monotonicity")) {
    for (int d : {2, 3}) results.push_back(verify_dimension_monotonicity(corpus, d, ctx));
  }
  if (run("cone")) {
    for (int d : {1, 2}) {
      results.push_back(verify_cone_circuit(corpus, d, ctx));
      results.push_back(verify_cone_mconnected(corpus, d, ctx));
    }
  }
  if (run("dofbound")) {
    for (int d : {2, 3}) results.push_back(verify_dof_bound(corpus, d, ctx));
    auto fig = verify_dof_bound(figure2a_graph(), 3, ctx);
    fig.corpus = "figure2a";
    results.push_back(std::move(fig));
  }
  if (run("motion")) {
    for (int d : {3, 4}) results.push_back(verify_motion_recursion(corpus, d, ctx));
  }
  if (run("gluing")) {
    for (int d : {2, 3}) results.push_back(verify_gluing_corpus(corpus, d, 24, ctx));
  }
  if (run("oracle")) {
    for (int d : {1, 2, 3}) results.push_back(verify_oracle_equivalence(corpus, d, 12, ctx));
  }

  Json report;
  report["tool"] = tool_json();
  report["config"] = config_json(c, trials, global_trials);
  Json arr = Json::array();
  passed = true;
  for (const auto& r : results) {
    passed = passed && r.passed();
    arr.push_back(to_json(r));
  }
  report["passed"] = passed;
  report["results"] = std::move(arr);
  return dump(report);
}

}  // namespace

Graph generate_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto need_arg = [&](bool want) {
    if (want != has_arg) throw InputError("bad arity for family '" + name + "'");
  };
  if (name == "complete") {
    need_arg(true);
    const int n = parse_int(arg, "vertex count");
    if (n < 1) throw InputError("complete:n needs n >= 1");
    return complete_graph(n);
  }
  if (name == "bipartite") {
    need_arg(true);
    const auto ab = split(arg, ',');
    if (ab.size() != 2) throw InputError("bipartite needs a,b");
    const int a = parse_int(ab[0], "part size");
    const int b = parse_int(ab[1], "part size");
    if (a < 1 || b < 1) throw InputError("bipartite part sizes must be >= 1");
    return complete_bipartite(a, b);
  }
  if (name == "ring-of-k5") {
    need_arg(true);
    const int k = parse_int(arg, "ring length");
    if (k < 3) throw InputError("ring-of-k5:k needs k >= 3");
    return ring_of_k5(k);
  }
  if (name == "figure1") return need_arg(false), figure1_graph();
  if (name == "figure2a") return need_arg(false), figure2a_graph();
  if (name == "figure2b") return need_arg(false), figure2b_graph();
  if (name == "cone") {
    need_arg(true);
    return cone(read_graph_file(arg));
  }
  if (name == "glue") {
    need_arg(true);
    const auto first = arg.find(',');
    const auto last = arg.rfind(',');
    if (first == std::string::npos || first == last) {
      throw InputError("glue needs <file>,<file>,<pairs>");
    }
    const Graph g1 = read_graph_file(arg.substr(0, first));
    const Graph g2 = read_graph_file(arg.substr(first + 1, last - first - 1));
    return glue(g1, g2, parse_pairs(arg.substr(last + 1)));
  }
  throw InputError("unknown family '" + name + "'");
}

std::vector<std::string> parse_checks(const std::string& list) {
  std::vector<std::string> out;
  for (auto& item : split(list, ',')) {
    if (item == "all") {
      for (const char* c : {"rank", "rigid", "redundant", "bridges", "mconn", "hendrickson",
                            "global", "classify"}) {
        out.emplace_back(c);
      }
    } else if (known_checks().count(item)) {
      out.push_back(item);
    } else {
      throw InputError("unknown check '" + item + "'");
    }
  }
  std::vector<std::string> dedup;
  for (auto& c : out) {
    if (std::find(dedup.begin(), dedup.end(), c) == dedup.end()) dedup.push_back(c);
  }
  return dedup;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic rigidity matroid toolkit", "genrig"};
  app.set_version_flag("--version", GENRIG_VERSION);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string modulus = "m61";
  std::string checks = "all";
  int trials = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output path (default: standard output)");
    sub->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    sub->add_option("--modulus", modulus, "Prime field: m61 or alt")
        ->check(CLI::IsMember({"m61", "alt"}))
        ->capture_default_str();
    return sub->add_option("--trials", trials, "Random trials (default 3; 5 for global)")
        ->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("generate", "Write a named graph family as JSON");
  gen->add_option("family", cfg.family, "Family spec")->required();
  gen->add_option("-o,--output", cfg.output, "Output path (default: standard output)");

  auto* an = app.add_subcommand("analyze", "Run rigidity checks on a graph file");
  an->add_option("input", cfg.input, "Graph JSON file")->required();
  an->add_option("--dim", cfg.dim, "Dimension d")->capture_default_str();
  an->add_option("--checks", checks, "Comma list of checks or 'all'")->capture_default_str();
  auto* an_trials = add_common(an);

  auto* ver = app.add_subcommand("verify", "Run property suites on the random corpus");
  ver->add_option("suite", cfg.suite, "mconnected|monotonicity|cone|dofbound|motion|gluing|"
                                      "oracle|all")
      ->required();
  ver->add_option("--count", cfg.corpus_size, "Corpus size")->capture_default_str();
  ver->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
  auto* ver_trials = add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(GENRIG_VERSION) + "\n"
                                                           : app.help());
      return kExitOk;
    }
    err << "genrig: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    cfg.modulus = parse_modulus(modulus).value();
    if (gen->parsed()) {
      cfg.command = "generate";
      write_output(cfg.output, cmd_generate(cfg), out);
      return kExitOk;
    }
    if (an->parsed()) {
      cfg.command = "analyze";
      cfg.checks = parse_checks(checks);
      if (an_trials->count()) cfg.trials = trials;
      write_output(cfg.output, cmd_analyze(cfg), out);
      return kExitOk;
    }
    cfg.command = "verify";
    if (ver_trials->count()) cfg.trials = trials;
    bool passed = false;
    const std::string text = cmd_verify(cfg, passed);
    write_output(cfg.output, text, out);
    return passed ? kExitOk : kExitViolation;
  } catch (const InputError& e) {
    err << "genrig: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "genrig: engine error: " << e.what() << "\n";
    return kExitEngine;
  }
}

}  // namespace genrig

// Copyright 2026 The Antimagic Orientation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: gen, orient, verify, oracle, export-dot.
// Exit codes: 0 success/valid, 1 invalid result, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "antimagic/error.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/pipeline.hpp"

namespace {

using namespace antimagic;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kParse, path + ": " + ex.what());
  }
}

struct GenArgs {
  std::string kind;
  std::int32_t n = 0;
  std::vector<std::int32_t> offsets;
  std::int32_t degree = 0;
  std::uint64_t seed = 1;
  int max_attempts = kDefaultRegularAttempts;
  PaperFamilyOptions family;
  std::string output;
};

int run_gen(const GenArgs& a) {
  Graph g;
  if (a.kind == "circulant") {
    g = circulant(a.n, a.offsets);
  } else if (a.kind == "complete") {
    g = complete(a.n);
  } else if (a.kind == "random-regular") {
    g = random_regular(a.n, a.degree, a.seed, a.max_attempts);
  } else {
    PaperFamilyOptions opt = a.family;
    opt.seed = a.seed;
    g = paper_family(opt);
  }
  write_output(a.output, format_edge_list(g));
  return kExitOk;
}

struct OrientArgs {
  std::string input;
  std::string output;
  std::vector<std::string> batch;
  std::string output_dir;
  std::optional<std::uint64_t> seed;
};

// Runs the construction on one file; returns the exit status for it.
int orient_one(const std::string& input, const std::string& output, std::optional<std::uint64_t> seed) {
  const LoadedGraph loaded = read_edge_list_file(input);
  const PipelineResult result = run_pipeline(loaded.graph);
  write_output(output, dump_document(result_document(result, loaded.original_ids, seed)));
  if (!result.proven_regime) {
    std::cerr << input << ": " << result.decomposition.odd_count
              << " odd component(s); outside the proven regime (needs at least 3), result is verifier-gated\n";
  }
  if (!result.diagnostics.hard_pass()) {
    for (const CheckItem& item : result.diagnostics.items) {
      if (!item.pass && item.hard) std::cerr << input << ": check " << item.name << " failed: " << item.counterexample << "\n";
    }
  }
  return result.valid && result.diagnostics.hard_pass() ? kExitOk : kExitInvalid;
}

int run_orient(const OrientArgs& a) {
  if (a.batch.empty()) {
    if (a.input.empty()) throw CLI::RequiredError("--input");
    return orient_one(a.input, a.output, a.seed);
  }
  if (a.output_dir.empty()) throw CLI::RequiredError("--output-dir");
  std::filesystem::create_directories(a.output_dir);
  int status = kExitOk;
  for (const std::string& in : a.batch) {
    const auto out = std::filesystem::path(a.output_dir) / (std::filesystem::path(in).stem().string() + ".json");
    status = std::max(status, orient_one(in, out.string(), a.seed));
  }
  return status;
}

struct VerifyArgs {
  std::string input;
  std::string result;
};

int run_verify(const VerifyArgs& a) {
  const Json doc = read_json_file(a.result);
  std::optional<LoadedGraph> loaded;
  if (!a.input.empty()) loaded = read_edge_list_file(a.input);
  const VerifyOutcome outcome = verify_document(doc, loaded ? &loaded->graph : nullptr);
  std::cout << (outcome.valid ? "valid: " : "invalid: ") << outcome.message << "\n";
  return outcome.valid ? kExitOk : kExitInvalid;
}

struct OracleArgs {
  std::string input;
  std::string result;
  std::string mode = "fixed-orientation";
  std::optional<std::int32_t> max_edges;
  bool force = false;
  std::int64_t limit = kDefaultNodeLimit;
};

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNotFound: return "not_found";
    case SearchStatus::kExhausted: return "exhausted";
  }
  return "unknown";
}

int run_oracle(const OracleArgs& a) {
  Graph g;
  std::vector<std::uint8_t> forward;
  if (!a.result.empty()) {
    const Json doc = read_json_file(a.result);
    g = graph_from_document(doc);
    forward = labeling_from_document(doc).forward;
  } else if (!a.input.empty()) {
    g = read_edge_list_file(a.input).graph;
    if (a.mode == "fixed-orientation") forward = run_pipeline(g).labeling.graph_labeling.forward;
  } else {
    throw CLI::RequiredError("--input or --result");
  }

  Json out;
  out["mode"] = a.mode;
  OrientationAndLabeling witness;
  SearchStatus status;
  if (a.mode == "full") {
    OracleOptions opt{a.max_edges.value_or(kDefaultFullSearchMaxEdges), a.force, a.limit};
    const OrientationSearch r = search_orientation_and_labeling(g, opt);
    status = r.status;
    out["nodes"] = r.nodes;
    witness = r.witness;
  } else {
    OracleOptions opt{a.max_edges.value_or(kDefaultLabelingMaxEdges), a.force, a.limit};
    const LabelingSearch r = search_labeling(g, forward, opt);
    status = r.status;
    out["nodes"] = r.nodes;
    witness.forward = forward;
    witness.label = r.labels;
  }
  out["status"] = status_name(status);
  if (status == SearchStatus::kFound) {
    out["direction"] = witness.forward;
    out["labels"] = witness.label;
    out["vertex_sums"] = check_antimagic(g, witness).sums;
  }
  std::cout << dump_document(out);
  return status == SearchStatus::kFound ? kExitOk : kExitInvalid;
}

struct DotArgs {
  std::string result;
  std::string output;
};

int run_export_dot(const DotArgs& a) {
  const Json doc = read_json_file(a.result);
  const Graph g = graph_from_document(doc);
  const OrientationAndLabeling ol = labeling_from_document(doc);
  std::vector<Sum> sums;
  if (doc.contains("vertex_sums")) sums = doc["vertex_sums"].get<std::vector<Sum>>();
  write_output(a.output, export_dot(g, ol, sums));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antimagic orientations of 2d-regular graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen_cmd->add_option("kind", gen.kind, "circulant | complete | random-regular | paper-family")
      ->required()
      ->check(CLI::IsMember({"circulant", "complete", "random-regular", "paper-family"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--offsets", gen.offsets, "Circulant offsets")->delimiter(',');
  gen_cmd->add_option("--degree", gen.degree, "Degree for random-regular");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--max-attempts", gen.max_attempts, "Rejection limit for random-regular");
  gen_cmd->add_option("--odd", gen.family.odd_components, "paper-family: odd components");
  gen_cmd->add_option("--even", gen.family.even_components, "paper-family: even components");
  gen_cmd->add_option("--d", gen.family.half_degree, "paper-family: components are 2d-regular");
  gen_cmd->add_option("--min-size", gen.family.min_size, "paper-family: smallest component size");
  gen_cmd->add_option("--max-size", gen.family.max_size, "paper-family: largest component size");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  OrientArgs orient;
  auto* orient_cmd = app.add_subcommand("orient", "Construct an antimagic orientation and labeling");
  orient_cmd->add_option("-i,--input", orient.input, "Edge-list file");
  orient_cmd->add_option("-o,--output", orient.output, "Result JSON (default stdout)");
  orient_cmd->add_option("--seed", orient.seed, "Recorded in diagnostics; the construction is deterministic");
  orient_cmd->add_option("--batch", orient.batch, "Several edge-list files");
  orient_cmd->add_option("--output-dir", orient.output_dir, "Directory for --batch results");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a result document");
  verify_cmd->add_option("-r,--result", verify.result, "Result JSON")->required();
  verify_cmd->add_option("-i,--input", verify.input, "Edge-list file the result must match");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search on a small graph");
  oracle_cmd->add_option("-i,--input", oracle.input, "Edge-list file");
  oracle_cmd->add_option("-r,--result", oracle.result, "Take graph and orientation from a result JSON");
  oracle_cmd->add_option("--mode", oracle.mode, "full | fixed-orientation")
      ->check(CLI::IsMember({"full", "fixed-orientation"}));
  oracle_cmd->add_option("--max-edges", oracle.max_edges, "Edge cap (default 10 fixed, 8 full)");
  oracle_cmd->add_flag("--force", oracle.force, "Run above the edge cap");
  oracle_cmd->add_option("--limit", oracle.limit, "Maximum label placements before giving up");

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write a result as a Graphviz digraph");
  dot_cmd->add_option("-r,--result", dot.result, "Result JSON")->required();
  dot_cmd->add_option("-o,--output", dot.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*gen_cmd) return run_gen(gen);
    if (*orient_cmd) return run_orient(orient);
    if (*verify_cmd) return run_verify(verify);
    if (*oracle_cmd) return run_oracle(oracle);
    if (*dot_cmd) return run_export_dot(dot);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const antimagic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

// cvgraph: weighted graph states under local Gaussian operations.
//
// Exit status: 0 success/agreement, 1 verification mismatch or sequence not
// found within budget, 2 usage or parse errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <tuple>

#include "cvgraph/graph_io.hpp"
#include "cvgraph/orbit.hpp"
#include "cvgraph/pauli.hpp"
#include "cvgraph/rules.hpp"
#include "cvgraph/verify.hpp"

namespace fs = std::filesystem;
using namespace cvgraph;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(const std::string& bytes) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
  return out.str();
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto r = parse_rational(text);
  if (!r) {
    throw ParseError(0, flag + ": unparseable rational '" + text + "'");
  }
  return *r;
}

std::vector<Rational> parse_rational_list(const std::string& text,
                                          const std::string& flag) {
  std::vector<Rational> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) continue;
    values.push_back(parse_rational_flag(item, flag));
  }
  if (values.empty()) {
    throw ParseError(0, flag + ": expected a comma-separated rational list");
  }
  return values;
}

std::vector<RuleOp> load_ops(const std::string& script_path,
                             const std::string& inline_ops) {
  if (!script_path.empty()) {
    std::ifstream in(script_path);
    if (!in) throw ParseError(0, "cannot open op script '" + script_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ops(buffer.str());
  }
  // Inline form: ops separated by ';' or newlines.
  std::string text = inline_ops;
  for (char& c : text) {
    if (c == ';') c = '\n';
  }
  return parse_ops(text);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  out << text;
}

// G_a(xi) in the factor ordering X_a(xi) Z_b(w(a,b) xi), neighbors ascending.
std::string stabilizer_line(const WeightedGraph& g, int a, const Rational& xi) {
  std::string line = "G" + std::to_string(a) + ": X" + std::to_string(a) + "(" +
                     to_string(xi) + ")";
  for (int b : g.neighborhood(a)) {
    line += " Z" + std::to_string(b) + "(" + to_string(g.weight(a, b) * xi) + ")";
  }
  return line;
}

int cmd_apply(const std::string& input, const std::string& script,
              const std::string& inline_ops, const std::string& output,
              const std::string& trace_dir) {
  WeightedGraph g = read_graph_file(input);
  auto ops = load_ops(script, inline_ops);
  SequenceResult seq = apply_sequence(g, ops);
  if (!trace_dir.empty()) {
    fs::create_directories(trace_dir);
    write_graph_file((fs::path(trace_dir) / "step_0000.cvg").string(), g);
    for (size_t i = 0; i < seq.steps.size(); ++i) {
      std::ostringstream name;
      name << "step_" << std::setw(4) << std::setfill('0') << i + 1 << ".cvg";
      write_graph_file((fs::path(trace_dir) / name.str()).string(), seq.steps[i]);
    }
  }
  write_output(output, serialize_graph(seq.result));
  return kExitOk;
}

int cmd_stabilizers(const std::string& input, const std::string& xi_text) {
  WeightedGraph g = read_graph_file(input);
  Rational xi = parse_rational_flag(xi_text, "--xi");
  for (int a = 1; a <= g.vertex_count(); ++a) {
    std::cout << stabilizer_line(g, a, xi) << "\n";
  }
  return kExitOk;
}

constexpr std::string_view kScaleConventionNote =
    "note: under nullifier transport, the squeezing gate S(r) with "
    "x -> e^r x, p -> e^-r p multiplies the weights incident to its target "
    "by e^{+r}, so the common rule statement \"multiply by e^{-r}\" names "
    "the inverse gate S(-r). scale <a> <lambda> takes the multiplier "
    "directly and realizes S(ln lambda).";

int cmd_verify(const std::string& input, const std::string& script,
               const std::string& inline_ops, bool pauli_level) {
  WeightedGraph g = read_graph_file(input);
  auto ops = load_ops(script, inline_ops);
  const std::vector<Rational> xi_samples = {Rational(1), Rational(-1, 2),
                                            Rational(2, 3)};
  bool all_ok = true;
  bool scale_note_printed = false;

  for (size_t i = 0; i < ops.size(); ++i) {
    const RuleOp& op = ops[i];
    std::cout << "op " << i + 1 << " (" << op_to_string(op) << "): ";
    RuleCheck check = check_rule_against_oracle(g, op);
    if (!check.agree) {
      std::cout << "FAIL\n" << check.report() << "\n";
      all_ok = false;
      g = check.candidate;
      continue;
    }
    std::string extra;
    if (const auto* lg = std::get_if<LgOp>(&op)) {
      size_t passed = 0;
      for (const auto& xi : xi_samples) {
        TransportReport tr = verify_stabilizer_transport(g, lg->pivot, lg->delta, xi);
        if (tr.ok) {
          ++passed;
        } else {
          all_ok = false;
          extra += "\n  stabilizer transport FAILED at xi=" + to_string(xi) +
                   ": " + tr.detail;
        }
      }
      extra = "stabilizer transport " + std::to_string(passed) + "/" +
              std::to_string(xi_samples.size()) + extra;
      if (pauli_level) {
        const auto gates = expand_local_gaussian(g, lg->pivot, lg->delta);
        const WeightedGraph moved = apply_lg_rule(g, lg->pivot, lg->delta);
        for (int v = 1; v <= g.vertex_count(); ++v) {
          PauliElement e = conjugate_pauli(
              gates, nullifier_to_pauli(stabilizer_generator(g, v), xi_samples[0]));
          if (v != lg->pivot) {
            e = e * nullifier_to_pauli(
                        stabilizer_generator(moved, lg->pivot),
                        -g.weight(lg->pivot, v) * lg->delta * xi_samples[0]);
          }
          extra += "\n  G" + std::to_string(v) + " -> " + e.to_string();
        }
      }
    }
    if (std::holds_alternative<ScaleOp>(op) && !scale_note_printed) {
      extra += std::string(extra.empty() ? "" : "\n  ");
      extra += kScaleConventionNote;
      scale_note_printed = true;
    }
    std::cout << "OK oracle agreement"
              << (extra.empty() ? "" : "; " + extra) << "\n";
    g = check.candidate;
  }
  std::cout << (all_ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return all_ok ? kExitOk : kExitMismatch;
}

OrbitConfig make_config(const std::string& delta_text,
                        const std::string& lambda_text, bool f2, int depth,
                        long max_nodes) {
  OrbitConfig cfg;
  if (!delta_text.empty()) {
    cfg.delta_set = parse_rational_list(delta_text, "--delta");
  }
  if (!lambda_text.empty()) {
    cfg.lambda_set = parse_rational_list(lambda_text, "--lambda");
    cfg.include_scale = true;
    for (const auto& l : cfg.lambda_set) {
      if (l <= 0) throw ParseError(0, "--lambda: values must be positive");
    }
  }
  cfg.include_f2 = f2;
  cfg.max_depth = depth;
  cfg.max_nodes = max_nodes;
  return cfg;
}

int cmd_orbit(const std::string& input, const OrbitConfig& cfg,
              const std::string& dump_path) {
  WeightedGraph g = read_graph_file(input);
  OrbitResult result = explore(g, cfg);

  // One line per node: <depth> <hash> <via-op or root> <parent-hash or ->,
  // sorted by (depth, hash). Serialized graphs go to <dump>.graphs/.
  std::vector<std::tuple<int, std::string, std::string>> lines;
  const fs::path sidecar = dump_path + ".graphs";
  fs::create_directories(sidecar);
  for (const auto& [key, node] : result.nodes) {
    const std::string h = hash_hex(key);
    std::string via = node.via ? op_to_string(*node.via) : "root";
    std::string parent = node.parent_key ? hash_hex(*node.parent_key) : "-";
    lines.emplace_back(node.depth, h, std::to_string(node.depth) + " " + h +
                                          " " + via + " " + parent);
    write_graph_file((sidecar / (h + ".cvg")).string(), node.graph);
  }
  std::sort(lines.begin(), lines.end());
  std::string dump;
  for (const auto& [depth, hash, line] : lines) {
    dump += line;
    dump += '\n';
  }
  write_output(dump_path, dump);

  OrbitStats stats = orbit_stats(result);
  std::cerr << "orbit: " << stats.node_count << " node(s), truncated: "
            << (stats.truncated ? "yes" : "no") << "\n";
  std::cerr << "depth histogram:";
  for (const auto& [depth, count] : stats.depth_histogram) {
    std::cerr << " " << depth << ":" << count;
  }
  std::cerr << "\n";
  if (stats.min_abs_weight) {
    std::cerr << "edge |weight| range: " << to_string(*stats.min_abs_weight)
              << " .. " << to_string(*stats.max_abs_weight) << "\n";
  }
  return kExitOk;
}

int cmd_connect(const std::string& input_a, const std::string& input_b,
                const OrbitConfig& cfg, const std::string& output) {
  WeightedGraph g1 = read_graph_file(input_a);
  WeightedGraph g2 = read_graph_file(input_b);
  auto seq = find_sequence(g1, g2, cfg);
  if (!seq) {
    std::cerr << "connect: no sequence found within budget (this does not "
                 "prove the graphs are inequivalent)\n";
    return kExitMismatch;
  }
  write_output(output, serialize_ops(*seq));
  return kExitOk;
}

int cmd_export_dot(const std::string& input, const std::string& output) {
  WeightedGraph g = read_graph_file(input);
  std::string dot = "graph G {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) {
    dot += "  " + std::to_string(v) + ";\n";
  }
  for (auto [u, v] : g.edges()) {
    dot += "  " + std::to_string(u) + " -- " + std::to_string(v) + " [label=\"" +
           to_string(g.weight(u, v)) + "\"];\n";
  }
  dot += "}\n";
  write_output(output, dot);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted graph states under local Gaussian operations: "
               "rewrite rules, stabilizers, exact symplectic verification, "
               "and bounded orbit search."};
  app.require_subcommand(1);

  std::string input, input_b, output, script, inline_ops, trace_dir;
  std::string xi_text = "1";
  std::string delta_text, lambda_text;
  bool f2 = false, pauli_level = false;
  int depth = 3;
  long max_nodes = 10000;

  auto* apply = app.add_subcommand("apply", "Apply a rule script to a graph");
  apply->add_option("-i,--input", input, "input graph file")->required();
  auto* apply_s = apply->add_option("-s,--script", script, "op script file");
  apply->add_option("-e,--expr", inline_ops,
                    "inline ops, ';' or newline separated")
      ->excludes(apply_s);
  apply->add_option("-o,--output", output, "output graph file (default stdout)");
  apply->add_option("--trace", trace_dir, "directory for per-step graphs");

  auto* stab = app.add_subcommand("stabilizers",
                                  "Print the stabilizer generators G_a(xi)");
  stab->add_option("-i,--input", input, "input graph file")->required();
  stab->add_option("--xi", xi_text, "stabilizer parameter (default 1)");

  auto* verify = app.add_subcommand(
      "verify", "Check a rule script against exact symplectic transport");
  verify->add_option("-i,--input", input, "input graph file")->required();
  auto* verify_s = verify->add_option("-s,--script", script, "op script file");
  verify->add_option("-e,--expr", inline_ops,
                     "inline ops, ';' or newline separated")
      ->excludes(verify_s);
  verify->add_flag("--pauli-level", pauli_level,
                   "print transported stabilizer generators per vertex");

  auto* orbit = app.add_subcommand(
      "orbit", "Bounded BFS over the reachable set of a graph");
  orbit->add_option("-i,--input", input, "input graph file")->required();
  orbit->add_option("--delta", delta_text, "comma list of lg deltas")
      ->required();
  orbit->add_option("--lambda", lambda_text,
                    "comma list of scale factors (enables scale moves)");
  orbit->add_flag("--f2", f2, "enable f2 moves");
  orbit->add_option("--depth", depth, "BFS depth bound (default 3)");
  orbit->add_option("--max-nodes", max_nodes,
                    "node budget (default 10000)");
  orbit->add_option("-o,--output", output, "orbit dump file")->required();

  auto* connect = app.add_subcommand(
      "connect", "Search for a rule sequence between two graphs");
  connect->add_option("-a,--from", input, "first graph file")->required();
  connect->add_option("-b,--to", input_b, "second graph file")->required();
  connect->add_option("--delta", delta_text, "comma list of lg deltas");
  connect->add_option("--lambda", lambda_text,
                      "comma list of scale factors (enables scale moves)");
  connect->add_flag("--f2", f2, "enable f2 moves");
  connect->add_option("--depth", depth,
                      "total sequence length bound (default 3)");
  connect->add_option("--max-nodes", max_nodes,
                      "node budget across both frontiers (default 10000)");
  connect->add_option("-o,--output", output,
                      "sequence file (default stdout)");

  auto* dot = app.add_subcommand("export-dot", "Write the graph as DOT text");
  dot->add_option("-i,--input", input, "input graph file")->required();
  dot->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (apply->parsed()) {
      if (script.empty() && inline_ops.empty()) {
        std::cerr << "apply: one of --script/--expr is required\n";
        return kExitUsage;
      }
      return cmd_apply(input, script, inline_ops, output, trace_dir);
    }
    if (stab->parsed()) return cmd_stabilizers(input, xi_text);
    if (verify->parsed()) {
      if (script.empty() && inline_ops.empty()) {
        std::cerr << "verify: one of --script/--expr is required\n";
        return kExitUsage;
      }
      return cmd_verify(input, script, inline_ops, pauli_level);
    }
    if (orbit->parsed()) {
      return cmd_orbit(input,
                       make_config(delta_text, lambda_text, f2, depth, max_nodes),
                       output);
    }
    if (connect->parsed()) {
      return cmd_connect(input, input_b,
                         make_config(delta_text, lambda_text, f2, depth, max_nodes),
                         output);
    }
    if (dot->parsed()) return cmd_export_dot(input, output);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

// Command-line front end: hole/condition analysis, constructive k <= h+1
// certification, the exact exponential solver, witness verification, and
// corpus generation.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 parse/parameter error,
// 3 precondition violation, 4 internal verification bug, 5 budget exceeded,
// 6 generation failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "holecomp/constructor.hpp"
#include "holecomp/generators.hpp"
#include "holecomp/report.hpp"

namespace {

constexpr int kExitVerifyMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;
constexpr int kExitBudget = 5;
constexpr int kExitGeneration = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw holecomp::parse_error(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int exact_budget() {
  if (const char* env = std::getenv("HOLECOMP_BUDGET")) {
    int b = std::atoi(env);
    if (b > 0) return b;
  }
  return 12;
}

int cmd_analyze(const std::string& path, bool json, bool with_bound) {
  using namespace holecomp;
  auto started = std::chrono::steady_clock::now();
  std::string text = read_file(path);
  Graph g = Graph::parse(text);
  ConditionReport rep = analyze_conditions(g);
  auto holes = enumerate_holes(g);
  std::vector<HoleClass> classes;
  if (rep.e1)
    for (const auto& c : holes) classes.push_back(classify_hole(g, c));
  std::optional<WitnessResult> witness;
  if (with_bound && rep.e1) witness = build_witness(g);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                  .count();

  if (json) {
    ordered_json j;
    j["digest"] = hex_digest(g.to_edge_list());
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["conditions"] = to_json(rep);
    ordered_json hj = ordered_json::array();
    if (rep.e1)
      for (const auto& hc : classes) hj.push_back(to_json(hc));
    else
      for (const auto& c : holes) hj.push_back(ordered_json{{"hole", c.to_string()}});
    j["holes"] = hj;
    if (witness) {
      ordered_json w;
      w["k"] = witness->added_count;
      w["h"] = rep.hole_count;
      w["verified"] = true;
      j["witness"] = w;
    }
    j["timing_ms"] = ms;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
              << " digest=" << hex_digest(g.to_edge_list()) << '\n';
    std::cout << "holes: h=" << rep.hole_count << '\n';
    std::cout << "conditions: e0=" << rep.e0 << " e1=" << rep.e1 << " lc=" << rep.lc
              << " k=" << rep.k << " v2=" << rep.v2 << '\n';
    if (rep.e1_violation)
      std::cout << "  e1 violated by " << rep.e1_violation->first.to_string() << " / "
                << rep.e1_violation->second.to_string() << " (" << rep.e1_violation->shared_edges
                << " shared edges)\n";
    for (const auto& hc : classes)
      std::cout << "  hole " << hc.hole.to_string() << " class "
                << (hc.tag == HoleTag::A ? "A" : hc.tag == HoleTag::B ? "B" : "C") << '\n';
    if (witness)
      std::cout << "witness: k=" << witness->added_count << " (h+1=" << rep.hole_count + 1
                << "), verified\n";
    std::cout << "timing: " << ms << " ms\n";
  }
  return 0;
}

int cmd_bound(const std::string& path, const std::string& out_path, bool json,
              const std::string& trace_path) {
  using namespace holecomp;
  Graph g = Graph::parse(read_file(path));
  WitnessResult w = build_witness(g);  // throws precondition_error when (E1) fails
  auto check = verify_witness(g, w);
  if (!check.ok) {
    std::cerr << "internal verification failed: " << check.message << '\n';
    return kExitInternal;
  }
  int h = hole_count(g);
  if (!out_path.empty()) write_file(out_path, witness_to_text(w.digraph, w.added_count));
  if (!trace_path.empty()) write_file(trace_path, trace_to_json_lines(w.trace));
  if (json) {
    ordered_json j;
    j["k"] = w.added_count;
    j["h"] = h;
    j["verified"] = true;
    j["witness"] = witness_to_json(w.digraph, w.added_count);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "k=" << w.added_count << " h=" << h << " (bound h+1=" << h + 1
              << "), witness verified\n";
  }
  return 0;
}

int cmd_exact(const std::string& path, int max_k, bool force, const std::string& out_path) {
  using namespace holecomp;
  Graph g = Graph::parse(read_file(path));
  int budget = exact_budget();
  if (max_k < 0) max_k = std::max(0, budget - g.vertex_count());
  if (!force && g.vertex_count() + max_k > budget) {
    std::cerr << "refusing n + k = " << g.vertex_count() + max_k << " > budget " << budget
              << " (use --force or HOLECOMP_BUDGET)\n";
    return kExitBudget;
  }
  auto res = exact_competition_number(g, max_k);
  if (!res) {
    std::cout << "UNKNOWN(>" << max_k << ")\n";
    return 0;
  }
  std::cout << "k=" << res->k << '\n';
  std::string text = witness_to_text(res->witness, res->k);
  if (!out_path.empty())
    write_file(out_path, text);
  else
    std::cout << text;
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& witness_path) {
  using namespace holecomp;
  Graph g = Graph::parse(read_file(graph_path));
  auto [d, added] = parse_witness_text(read_file(witness_path));
  auto r = verify_witness(g, d, added);
  if (r.ok) {
    std::cout << "PASS: competition graph matches (k=" << added << ")\n";
    return 0;
  }
  std::cout << "FAIL: " << r.message << '\n';
  if (r.cycle) {
    std::cout << "  directed cycle:";
    for (int v : *r.cycle) std::cout << ' ' << v;
    std::cout << '\n';
  }
  for (const auto& [u, v] : r.missing) std::cout << "  missing edge " << u << ' ' << v << '\n';
  for (const auto& [u, v] : r.extra) std::cout << "  extra edge " << u << ' ' << v << '\n';
  return kExitVerifyMismatch;
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, uint64_t seed) {
  using namespace holecomp;
  auto need = [&](std::size_t c) {
    if (params.size() != c)
      throw precondition_error("kind '" + kind + "' expects " + std::to_string(c) +
                               " parameter(s)");
  };
  auto as_int = [&](std::size_t i) {
    try {
      return std::stoi(params.at(i));
    } catch (...) {
      throw precondition_error("parameter '" + params.at(i) + "' is not an integer");
    }
  };
  auto as_double = [&](std::size_t i) {
    try {
      return std::stod(params.at(i));
    } catch (...) {
      throw precondition_error("parameter '" + params.at(i) + "' is not a number");
    }
  };
  Graph g;
  if (kind == "cycle") {
    need(1);
    g = gen_cycle(as_int(0));
  } else if (kind == "k2m") {
    need(1);
    g = gen_k2m(as_int(0));
  } else if (kind == "ktbox") {
    need(1);
    g = gen_ktbox(as_int(0));
  } else if (kind == "chordal") {
    need(2);
    g = gen_random_chordal(as_int(0), as_double(1), seed);
  } else if (kind == "random-e1") {
    need(2);
    g = gen_random_e1(as_int(0), as_double(1), seed);
  } else {
    throw precondition_error("unknown kind '" + kind +
                             "' (cycle | k2m | ktbox | chordal | random-e1)");
  }
  std::cout << g.to_edge_list();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hole-structure analysis and competition-number certification"};
  app.require_subcommand(1);

  std::string path, out_path, trace_path, witness_path, kind;
  bool json = false, with_bound = false, force = false;
  int max_k = -1;
  uint64_t seed = 1;
  std::vector<std::string> params;

  auto* analyze = app.add_subcommand("analyze", "hole census, conditions, hole classes");
  analyze->add_option("input", path, "edge-list file")->required();
  analyze->add_flag("--json", json, "emit JSON");
  analyze->add_flag("--bound", with_bound, "also build and verify a witness");

  auto* bound = app.add_subcommand("bound", "certify k(G) <= h+1 with a witness digraph");
  bound->add_option("input", path, "edge-list file")->required();
  bound->add_option("--out", out_path, "write witness digraph file");
  bound->add_option("--trace", trace_path, "write construction trace (JSON lines)");
  bound->add_flag("--json", json, "emit JSON");

  auto* exact = app.add_subcommand("exact", "exact competition number (exponential)");
  exact->add_option("input", path, "edge-list file")->required();
  exact->add_option("--max-k", max_k, "largest k to certify");
  exact->add_option("--out", out_path, "write the oracle witness digraph file");
  exact->add_flag("--force", force, "ignore the size budget");

  auto* verify = app.add_subcommand("verify", "check a witness digraph against a graph");
  verify->add_option("graph", path, "edge-list file")->required();
  verify->add_option("witness", witness_path, "witness digraph file")->required();

  auto* gen = app.add_subcommand("gen", "emit a generated graph on stdout");
  gen->add_option("kind", kind, "cycle | k2m | ktbox | chordal | random-e1")->required();
  gen->add_option("params", params, "parameters for the kind (e.g. \"chordal 10 0.4\")");
  gen->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(path, json, with_bound);
    if (*bound) return cmd_bound(path, out_path, json, trace_path);
    if (*exact) return cmd_exact(path, max_k, force, out_path);
    if (*verify) return cmd_verify(path, witness_path);
    if (*gen) return cmd_gen(kind, params, seed);
  } catch (const holecomp::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const holecomp::generation_error& e) {
    std::cerr << "generation failed: " << e.what() << '\n';
    return kExitGeneration;
  } catch (const holecomp::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return *gen ? kExitParse : kExitPrecondition;
  } catch (const holecomp::internal_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}

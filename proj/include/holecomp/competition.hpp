#pragma once

// Competition graphs of digraphs, the chordal base-case witness with a
// protected clique, witness verification, and the exact (exponential)
// competition-number oracle used to cross-check the construction.

#include <map>
#include <unordered_map>
#include <unordered_set>

#include "holecomp/holes.hpp"

namespace holecomp {

// C(D): edge between distinct x, y iff they share an out-neighbor.
inline Graph competition_graph(const Digraph& d) {
  std::set<Edge> edges;
  for (int w = 0; w < d.vertex_count(); ++w) {
    const auto& in = d.in_neighbors(w);
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j) edges.insert(make_edge(in[i], in[j]));
  }
  return Graph::from_edges(d.vertex_count(), {edges.begin(), edges.end()});
}

struct ChordalCertificate {
  std::vector<int> order;  // elimination order v_1..v_n
  // Per position: the later neighbors of order[i], a clique at elimination time.
  std::vector<VertexSet> later_neighbors;
};

// Perfect elimination ordering in which every protected vertex appears after
// every vertex outside the protected clique; absent iff the graph has a hole.
// Greedy min-id simplicial elimination is complete here: a non-complete
// chordal graph has two non-adjacent simplicial vertices, so a simplicial
// vertex outside the protected clique exists until only a clique remains.
inline std::optional<ChordalCertificate> chordal_peo(const Graph& g,
                                                     const VertexSet& protected_clique) {
  VertexSet prot = make_set(protected_clique);
  if (!g.is_clique(prot)) throw precondition_error("protected set is not a clique");
  const int n = g.vertex_count();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  auto simplicial = [&](int v) {
    VertexSet nb;
    for (int w : g.neighbors(v))
      if (alive[static_cast<std::size_t>(w)]) nb.push_back(w);
    return g.is_clique(nb) ? std::optional<VertexSet>(nb) : std::nullopt;
  };
  ChordalCertificate cert;
  int remaining = n;
  int prot_remaining = static_cast<int>(prot.size());
  while (remaining > prot_remaining) {
    int pick = -1;
    std::optional<VertexSet> evidence;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[static_cast<std::size_t>(v)] || set_contains(prot, v)) continue;
      if (auto nb = simplicial(v)) {
        pick = v;
        evidence = nb;
      }
    }
    if (pick < 0) return std::nullopt;  // stuck: the remainder is not chordal
    cert.order.push_back(pick);
    cert.later_neighbors.push_back(*evidence);
    alive[static_cast<std::size_t>(pick)] = 0;
    --remaining;
  }
  for (int v : prot) {  // the protected clique empties in ascending order
    auto nb = simplicial(v);
    if (!nb) throw internal_error("protected clique member not simplicial at suffix");
    cert.order.push_back(v);
    cert.later_neighbors.push_back(*nb);
    alive[static_cast<std::size_t>(v)] = 0;
  }
  return cert;
}

inline bool is_chordal(const Graph& g) { return chordal_peo(g, {}).has_value(); }

struct TraceStep {
  int depth = 0;
  std::string case_label;   // "A", "B", "C"
  std::string action;       // "chordal-base", "split", "add-edge", "break-prism"
  std::vector<int> vertices;  // hole or gadget vertices involved
  int parameter = 0;        // t or m for gadget steps
  int holes_before = -1;
  int holes_after = -1;
  std::string note;
};

struct WitnessResult {
  Digraph digraph;   // on n + added_count vertices; added ids are n..n+k-1
  int added_count = 0;
  std::vector<TraceStep> trace;
};

// Roberts-style construction from a protected-last PEO v_1..v_n:
//   - clique Q_i = {v_i} + later neighbors preys on v_{i-1} (unprotected i >= 2),
//   - Q_1 preys on the single new vertex,
//   - the protected suffix clique preys on the last unprotected vertex
//     (or the new vertex when the whole graph is the protected clique).
// Preys are pairwise distinct, all arcs run from higher PEO position to
// lower (new vertex lowest), and no protected vertex ever becomes prey, so
// C(D) = g + one isolated vertex with the protected contract intact.
inline WitnessResult chordal_witness(const Graph& g, const VertexSet& protected_clique) {
  VertexSet prot = make_set(protected_clique);
  auto cert = chordal_peo(g, prot);
  if (!cert) throw precondition_error("graph is not chordal");
  const int n = g.vertex_count();
  const int z = n;  // the one new vertex
  const int q = static_cast<int>(prot.size());
  std::vector<Arc> arcs;
  auto clique_preys = [&](const VertexSet& clique, int prey) {
    for (int u : clique)
      if (u != prey) arcs.emplace_back(u, prey);
  };
  if (n > 0) {
    if (q == n) {
      clique_preys(g.vertices(), z);  // complete protected graph: one clique, one prey
    } else {
      const auto& order = cert->order;
      for (int i = 0; i + q < n; ++i) {
        VertexSet clique = cert->later_neighbors[static_cast<std::size_t>(i)];
        clique.push_back(order[static_cast<std::size_t>(i)]);
        clique = make_set(clique);
        clique_preys(clique, i == 0 ? z : order[static_cast<std::size_t>(i - 1)]);
      }
      if (q >= 1) clique_preys(prot, order[static_cast<std::size_t>(n - q - 1)]);
    }
  }
  WitnessResult w;
  w.digraph = Digraph::from_arcs(n + 1, std::move(arcs));
  w.added_count = 1;
  w.trace.push_back(TraceStep{0, "A", "none", prot, 0, 0, 0, "chordal base"});
  return w;
}

struct VerifyResult {
  bool ok = false;
  std::vector<Edge> missing;     // edges of g absent from C(D)
  std::vector<Edge> extra;       // C(D) edges not in g (or touching added vertices)
  std::optional<std::vector<int>> cycle;
  std::string message;
};

// A witness passes iff the digraph is acyclic, has exactly g.n + k vertices,
// and its competition graph is g plus k isolated vertices, checked by exact
// edge-set comparison.
inline VerifyResult verify_witness(const Graph& g, const Digraph& d, int added_count) {
  VerifyResult r;
  if (d.vertex_count() != g.vertex_count() + added_count) {
    r.message = "vertex count mismatch: digraph has " + std::to_string(d.vertex_count()) +
                ", expected " + std::to_string(g.vertex_count() + added_count);
    return r;
  }
  if (auto cyc = find_directed_cycle(d)) {
    r.cycle = cyc;
    r.message = "digraph has a directed cycle";
    return r;
  }
  Graph cd = competition_graph(d);
  const int n = g.vertex_count();
  std::set<Edge> want(g.edges().begin(), g.edges().end());
  std::set<Edge> got(cd.edges().begin(), cd.edges().end());
  for (const auto& e : want)
    if (!got.count(e)) r.missing.push_back(e);
  for (const auto& e : got)
    if (e.second >= n || !want.count(e)) r.extra.push_back(e);
  r.ok = r.missing.empty() && r.extra.empty();
  if (!r.ok)
    r.message = "competition graph differs: " + std::to_string(r.missing.size()) + " missing, " +
                std::to_string(r.extra.size()) + " extra";
  return r;
}

inline VerifyResult verify_witness(const Graph& g, const WitnessResult& w) {
  return verify_witness(g, w.digraph, w.added_count);
}

struct ExactResult {
  int k = 0;
  Digraph witness;
};

namespace detail {

// Maximal cliques (as vertex-bitmasks) of the subgraph induced by `allowed`.
inline void maximal_cliques(const Graph& g, uint32_t allowed, uint32_t cur, uint32_t cands,
                            uint32_t banned, std::vector<uint32_t>& out) {
  if (!cands && !banned) {
    out.push_back(cur);
    return;
  }
  uint32_t iter = cands;
  while (iter) {
    int v = __builtin_ctz(iter);
    iter &= iter - 1;
    uint32_t nb = 0;
    for (int w : g.neighbors(v))
      if (allowed & (1u << w)) nb |= 1u << w;
    maximal_cliques(g, allowed, cur | (1u << v), cands & nb, banned & nb, out);
    cands &= ~(1u << v);
    banned |= 1u << v;
  }
}

inline std::vector<uint32_t> maximal_cliques_of(const Graph& g, uint32_t allowed) {
  std::vector<uint32_t> out;
  if (allowed) maximal_cliques(g, allowed, 0, allowed, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleContext {
  const Graph& g;
  int n;
  std::vector<Edge> edge_list;
  std::map<Edge, int> edge_index;
  std::unordered_map<uint32_t, std::vector<uint32_t>> cliques_by_subset;
  std::unordered_map<uint64_t, int> ecc_memo;
  std::unordered_map<uint64_t, int> ecc_choice;
  std::map<std::pair<uint32_t, uint64_t>, int> state_memo;

  explicit OracleContext(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    edge_list = g.edges();
    for (std::size_t i = 0; i < edge_list.size(); ++i)
      edge_index[edge_list[i]] = static_cast<int>(i);
  }

  uint64_t clique_edges(uint32_t clique) const {
    uint64_t mask = 0;
    for (int u = 0; u < n; ++u) {
      if (!(clique & (1u << u))) continue;
      for (int v = u + 1; v < n; ++v)
        if (clique & (1u << v)) mask |= 1ull << edge_index.at(make_edge(u, v));
    }
    return mask;
  }

  const std::vector<uint32_t>& cliques(uint32_t subset) {
    auto it = cliques_by_subset.find(subset);
    if (it != cliques_by_subset.end()) return it->second;
    return cliques_by_subset.emplace(subset, maximal_cliques_of(g, subset)).first->second;
  }

  // Minimum number of maximal cliques of g covering the residual edge set.
  int min_ecc(uint64_t residual) {
    if (!residual) return 0;
    auto it = ecc_memo.find(residual);
    if (it != ecc_memo.end()) return it->second;
    int e = __builtin_ctzll(residual);
    const auto& full_cliques = cliques((1u << n) - 1);
    int best = 1 << 20;
    int best_choice = -1;
    for (std::size_t ci = 0; ci < full_cliques.size(); ++ci) {
      uint64_t cover = clique_edges(full_cliques[ci]);
      if (!(cover & (1ull << e))) continue;
      int sub = min_ecc(residual & ~cover);
      if (sub + 1 < best) {
        best = sub + 1;
        best_choice = static_cast<int>(ci);
      }
    }
    ecc_memo[residual] = best;
    ecc_choice[residual] = best_choice;
    return best;
  }

  // Minimum extra-vertex count over all completions from (placed, covered):
  // real vertices are placed one at a time, each preyed on by a maximal
  // clique of the already-placed subgraph (or nothing); added vertices go
  // last, one residual-cover clique each.
  int solve(uint32_t placed, uint64_t covered) {
    uint32_t full = (1u << n) - 1;
    uint64_t all_edges = edge_list.empty() ? 0 : (~0ull >> (64 - edge_list.size()));
    if (placed == full) return min_ecc(all_edges & ~covered);
    auto key = std::make_pair(placed, covered);
    auto it = state_memo.find(key);
    if (it != state_memo.end()) return it->second;
    state_memo[key] = 1 << 20;  // cycle guard; states form a DAG anyway
    int best = 1 << 20;
    for (int v = 0; v < n; ++v) {
      if (placed & (1u << v)) continue;
      if (placed == 0) {
        best = std::min(best, solve(1u << v, covered));
        continue;
      }
      for (uint32_t clique : cliques(placed))
        best = std::min(best, solve(placed | (1u << v), covered | clique_edges(clique)));
    }
    state_memo[key] = best;
    return best;
  }
};

}  // namespace detail

// Exact competition number by memoized exhaustive search, with a witness
// digraph attaining it. Desk-scale only; refuses graphs too large to encode.
inline std::optional<ExactResult> exact_competition_number(const Graph& g, int k_max) {
  if (k_max < 0) throw precondition_error("k_max must be nonnegative");
  if (g.vertex_count() > 20 || g.edge_count() > 62)
    throw precondition_error("exact oracle limited to n <= 20, m <= 62");
  detail::OracleContext ctx(g);
  const int n = g.vertex_count();
  int k = ctx.solve(0, 0);
  if (k > k_max) return std::nullopt;

  // Retrace the lexicographically-first optimal run to build the witness.
  std::vector<Arc> arcs;
  uint32_t placed = 0;
  uint64_t covered = 0;
  uint64_t all_edges = g.edge_count() == 0 ? 0 : (~0ull >> (64 - g.edge_count()));
  while (placed != (1u << n) - 1) {
    int target = ctx.solve(placed, covered);
    bool advanced = false;
    for (int v = 0; v < n && !advanced; ++v) {
      if (placed & (1u << v)) continue;
      if (placed == 0) {
        if (ctx.solve(1u << v, covered) == target) {
          placed = 1u << v;
          advanced = true;
        }
        continue;
      }
      for (uint32_t clique : ctx.cliques(placed)) {
        uint64_t cov = covered | ctx.clique_edges(clique);
        if (ctx.solve(placed | (1u << v), cov) == target) {
          for (int u = 0; u < n; ++u)
            if (clique & (1u << u)) arcs.emplace_back(u, v);
          placed |= 1u << v;
          covered = cov;
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) throw internal_error("oracle retrace failed");
  }
  uint64_t residual = all_edges & ~covered;
  int next_added = n;
  while (residual) {
    ctx.min_ecc(residual);
    int choice = ctx.ecc_choice.at(residual);
    if (choice < 0) throw internal_error("oracle cover retrace failed");
    uint32_t clique = ctx.cliques((1u << n) - 1)[static_cast<std::size_t>(choice)];
    for (int u = 0; u < n; ++u)
      if (clique & (1u << u)) arcs.emplace_back(u, next_added);
    residual &= ~ctx.clique_edges(clique);
    ++next_added;
  }
  ExactResult res;
  res.k = k;
  res.witness = Digraph::from_arcs(n + k, std::move(arcs));
  auto check = verify_witness(g, res.witness, k);
  if (!check.ok) throw internal_error("oracle produced an invalid witness: " + check.message);
  return res;
}

// --- Witness digraph file format -------------------------------------------
// Line 1: "N k" (total vertices, added count); then one "u v" line per arc.

inline std::string witness_to_text(const Digraph& d, int added_count) {
  std::ostringstream out;
  out << d.vertex_count() << ' ' << added_count << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::pair<Digraph, int> parse_witness_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  long total = -1, added = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    if (total < 0) {
      if (!(ls >> total >> added) || total < 0 || added < 0 || added > total)
        throw parse_error(line_no, "expected header \"N k\"");
      continue;
    }
    long u, v;
    if (!(ls >> u >> v)) throw parse_error(line_no, "expected arc \"u v\"");
    if (u < 0 || u >= total || v < 0 || v >= total)
      throw parse_error(line_no, "arc endpoint out of range");
    if (u == v) throw parse_error(line_no, "self-loop arc");
    arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (total < 0) throw parse_error(line_no + 1, "missing header \"N k\"");
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw parse_error(line_no, "duplicate arc");
  return {Digraph::from_arcs(static_cast<int>(total), std::move(arcs)), static_cast<int>(added)};
}

}  // namespace holecomp

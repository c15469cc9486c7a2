#pragma once

// Immutable simple-graph and digraph value types over dense integer
// vertex ids, plus the edge-list / DOT serializations used by the CLI.
// All surgeries return fresh copies; iteration order is ascending ids
// everywhere so downstream output is reproducible byte-for-byte.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holecomp {

using Vertex = int;
using Edge = std::pair<int, int>;  // normalized: first < second
using Arc = std::pair<int, int>;   // ordered (tail, head)
using VertexSet = std::vector<int>;  // sorted ascending, duplicate-free

struct parse_error : std::runtime_error {
  parse_error(std::size_t line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  std::size_t line;
};

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline VertexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw precondition_error("negative vertex count");
    Graph g;
    g.n_ = n;
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u == v) throw precondition_error("self-loop " + std::to_string(u));
      if (u < 0 || v >= n)
        throw precondition_error("edge endpoint out of range");
      if (i > 0 && edges[i] == edges[i - 1])
        throw precondition_error("duplicate edge");
    }
    g.edges_ = std::move(edges);
    g.rebuild();
    return g;
  }

  // Edge-list text: first data line "n m", then m lines "u v".
  // '#'-prefixed lines are comments; blank lines are skipped.
  static Graph parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::vector<char>> seen;
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      std::istringstream ls(line);
      if (n < 0) {
        if (!(ls >> n >> m) || n < 0 || m < 0)
          throw parse_error(line_no, "expected header \"n m\"");
        std::string rest;
        if (ls >> rest) throw parse_error(line_no, "trailing data after header");
        seen.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        continue;
      }
      long u, v;
      if (!(ls >> u >> v)) throw parse_error(line_no, "expected edge \"u v\"");
      std::string rest;
      if (ls >> rest) throw parse_error(line_no, "trailing data after edge");
      if (static_cast<long>(edges.size()) >= m)
        throw parse_error(line_no, "more than m edge lines");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw parse_error(line_no, "vertex id out of range");
      if (u == v) throw parse_error(line_no, "self-loop");
      if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        throw parse_error(line_no, "duplicate edge");
      seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
      edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    if (n < 0) throw parse_error(line_no + 1, "missing header \"n m\"");
    if (static_cast<long>(edges.size()) != m)
      throw parse_error(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                                         std::to_string(edges.size()));
    return from_edges(static_cast<int>(n), std::move(edges));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }

  bool has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1u;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet vertices() const {
    VertexSet out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
  }

  Graph add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw precondition_error("add_edge: self-loop");
    if (has_edge(u, v)) throw precondition_error("add_edge: edge already present");
    auto e = edges_;
    e.push_back(make_edge(u, v));
    return from_edges(n_, std::move(e));
  }

  Graph delete_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) throw precondition_error("delete_edge: edge absent");
    std::vector<Edge> e;
    e.reserve(edges_.size() - 1);
    for (const auto& x : edges_)
      if (x != make_edge(u, v)) e.push_back(x);
    return from_edges(n_, std::move(e));
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  // True iff every pair within s is adjacent; empty sets and singletons count.
  bool is_clique(const VertexSet& s) const {
    for (int v : s) check_vertex(v);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!has_edge(s[i], s[j])) return false;
    return true;
  }

  bool adjacent_to_all(int v, const VertexSet& s) const {
    for (int u : s)
      if (!has_edge(v, u)) return false;
    return true;
  }

  std::string to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
  }

  std::string to_dot() const {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < n_; ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : edges_) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
  }

 private:
  void check_vertex(int v) const {
    if (!has_vertex(v))
      throw precondition_error("vertex id " + std::to_string(v) + " out of range");
  }

  void rebuild() {
    adj_.assign(static_cast<std::size_t>(n_), {});
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (const auto& [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
      bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
      bits_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u >> 6)] |= 1ull << (u & 63);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;
  std::size_t words_ = 0;
};

// Induced subgraph plus the relabeling map: map[i] is the original id of
// the new vertex i (the inverse of the bijection s -> 0..|s|-1).
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s0) {
  VertexSet s = make_set(s0);
  for (int v : s)
    if (!g.has_vertex(v)) throw precondition_error("induced_subgraph: id out of range");
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) pos[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (pos[static_cast<std::size_t>(u)] >= 0 && pos[static_cast<std::size_t>(v)] >= 0)
      edges.push_back(make_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]));
  return {Graph::from_edges(static_cast<int>(s.size()), std::move(edges)), s};
}

inline bool is_clique(const Graph& g, const VertexSet& s) { return g.is_clique(s); }

// Component labels over an induced vertex subset; vertices outside `within`
// get label -1. `within` must be sorted.
inline std::vector<int> component_labels(const Graph& g, const VertexSet& within) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<char> inside(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : within) inside[static_cast<std::size_t>(v)] = 1;
  int next = 0;
  for (int s : within) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    std::queue<int> q;
    q.push(s);
    label[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (inside[static_cast<std::size_t>(w)] && label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

inline int component_count(const Graph& g, const VertexSet& within) {
  auto lab = component_labels(g, within);
  int c = 0;
  for (int v : within) c = std::max(c, lab[static_cast<std::size_t>(v)] + 1);
  return c;
}

inline int component_count(const Graph& g) { return component_count(g, g.vertices()); }

inline bool is_vertex_cut(const Graph& g, const VertexSet& s0) {
  VertexSet s = make_set(s0);
  for (int v : s)
    if (!g.has_vertex(v)) throw precondition_error("is_vertex_cut: id out of range");
  VertexSet rest = set_difference(g.vertices(), s);
  return component_count(g, rest) > component_count(g);
}

class Digraph {
 public:
  Digraph() = default;

  static Digraph from_arcs(int n, std::vector<Arc> arcs) {
    if (n < 0) throw precondition_error("negative vertex count");
    Digraph d;
    d.n_ = n;
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      auto [u, v] = arcs[i];
      if (u == v) throw precondition_error("self-loop arc");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw precondition_error("arc endpoint out of range");
      if (i > 0 && arcs[i] == arcs[i - 1]) throw precondition_error("duplicate arc");
    }
    d.arcs_ = std::move(arcs);
    d.out_.assign(static_cast<std::size_t>(n), {});
    d.in_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : d.arcs_) {
      d.out_[static_cast<std::size_t>(u)].push_back(v);
      d.in_[static_cast<std::size_t>(v)].push_back(u);
    }
    return d;
  }

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return out_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& in_neighbors(int v) const { return in_.at(static_cast<std::size_t>(v)); }

  bool has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
  }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

  std::string to_dot() const {
    std::ostringstream out;
    out << "digraph {\n";
    for (int v = 0; v < n_; ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : arcs_) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Kahn's algorithm with a min-id frontier: the returned order is the unique
// lexicographically-smallest topological order, or absent on a directed cycle.
inline std::optional<std::vector<int>> topological_order(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : d.arcs()) ++indeg[static_cast<std::size_t>(v)];
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!q.empty()) {
    int u = q.top();
    q.pop();
    order.push_back(u);
    for (int w : d.out_neighbors(u))
      if (--indeg[static_cast<std::size_t>(w)] == 0) q.push(w);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

inline bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

// A directed cycle as a vertex sequence (first == entry point), for diagnostics.
inline std::optional<std::vector<int>> find_directed_cycle(const Digraph& d) {
  int n = d.vertex_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 active, 2 done
  for (int s = 0; s < n; ++s) {
    if (state[static_cast<std::size_t>(s)] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      const auto& outs = d.out_neighbors(u);
      if (idx == outs.size()) {
        state[static_cast<std::size_t>(u)] = 2;
        stack.pop_back();
        continue;
      }
      int w = outs[idx++];
      if (state[static_cast<std::size_t>(w)] == 1) {
        std::vector<int> cyc{w};
        for (auto it = stack.rbegin(); it != stack.rend() && it->first != w; ++it)
          cyc.push_back(it->first);
        std::reverse(cyc.begin() + 1, cyc.end());
        return cyc;
      }
      if (state[static_cast<std::size_t>(w)] == 0) {
        state[static_cast<std::size_t>(w)] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return std::nullopt;
}

}  // namespace holecomp

#pragma once

// Chordless-cycle machinery: hole enumeration (subset brute force and a
// DFS enumerator, compared against each other in the tests), dominator
// sets X_C, C-avoiding path questions, sectors, and the two cycle
// decomposition utilities.

#include <map>
#include <optional>
#include <set>

#include "holecomp/graph.hpp"

namespace holecomp {

namespace detail {

// Canonical rotation: start at the minimum vertex and proceed toward its
// smaller-id cycle neighbor. Fixes rotation/reflection ambiguity.
inline std::vector<int> canonical_cycle(const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  int mi = 0;
  for (int i = 1; i < len; ++i)
    if (seq[static_cast<std::size_t>(i)] < seq[static_cast<std::size_t>(mi)]) mi = i;
  int fwd = seq[static_cast<std::size_t>((mi + 1) % len)];
  int bwd = seq[static_cast<std::size_t>((mi - 1 + len) % len)];
  int dir = fwd < bwd ? 1 : -1;
  std::vector<int> out(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j)
    out[static_cast<std::size_t>(j)] = seq[static_cast<std::size_t>(((mi + dir * j) % len + len) % len)];
  return out;
}

}  // namespace detail

// A chordless cycle of length >= 3 in canonical form.
class InducedCycle {
 public:
  InducedCycle(const Graph& g, std::vector<int> seq) {
    const int len = static_cast<int>(seq.size());
    if (len < 3) throw precondition_error("induced cycle needs length >= 3");
    VertexSet distinct = make_set(seq);
    if (static_cast<int>(distinct.size()) != len)
      throw precondition_error("cycle sequence repeats a vertex");
    for (int v : seq)
      if (!g.has_vertex(v)) throw precondition_error("cycle vertex out of range");
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        bool consecutive = (j - i == 1) || (i == 0 && j == len - 1);
        bool adj = g.has_edge(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(j)]);
        if (consecutive && !adj) throw precondition_error("cycle breaks adjacency");
        if (!consecutive && adj) throw precondition_error("cycle has a chord");
      }
    seq_ = detail::canonical_cycle(seq);
  }

  int length() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& vertices() const { return seq_; }

  // Subscript arithmetic is modulo the cycle length.
  int at(int i) const {
    int len = length();
    return seq_[static_cast<std::size_t>(((i % len) + len) % len)];
  }

  VertexSet vertex_set() const { return make_set(seq_); }

  std::vector<Edge> edge_set() const {
    std::vector<Edge> out;
    int len = length();
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.push_back(make_edge(at(i), at(i + 1)));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool contains_edge(int u, int v) const {
    int len = length();
    Edge e = make_edge(u, v);
    for (int i = 0; i < len; ++i)
      if (make_edge(at(i), at(i + 1)) == e) return true;
    return false;
  }

  bool contains_vertex(int v) const {
    return std::find(seq_.begin(), seq_.end(), v) != seq_.end();
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(seq_[i]);
    }
    return s;
  }

  bool operator==(const InducedCycle& o) const { return seq_ == o.seq_; }
  bool operator!=(const InducedCycle& o) const { return seq_ != o.seq_; }
  bool operator<(const InducedCycle& o) const { return seq_ < o.seq_; }

 protected:
  std::vector<int> seq_;
};

// A hole: chordless cycle of length >= 4.
class Hole : public InducedCycle {
 public:
  Hole(const Graph& g, std::vector<int> seq) : InducedCycle(g, std::move(seq)) {
    if (length() < 4) throw precondition_error("hole needs length >= 4");
  }
  explicit Hole(const Graph& g, const InducedCycle& c) : Hole(g, c.vertices()) {}
};

namespace detail {

// If `members` induces a single cycle, return its vertex sequence.
inline std::optional<std::vector<int>> cycle_sequence_of_subset(const Graph& g,
                                                                const VertexSet& members) {
  if (members.size() < 3) return std::nullopt;
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : members) in[static_cast<std::size_t>(v)] = 1;
  for (int v : members) {
    int deg = 0;
    for (int w : g.neighbors(v)) deg += in[static_cast<std::size_t>(w)];
    if (deg != 2) return std::nullopt;
  }
  // Degrees all 2: the subset is a disjoint union of cycles; walk one and
  // require it to exhaust the subset.
  std::vector<int> seq{members[0]};
  int prev = -1, cur = members[0];
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (in[static_cast<std::size_t>(w)] && w != prev) {
        next = w;
        break;
      }
    if (next == members[0]) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  if (seq.size() != members.size()) return std::nullopt;
  return seq;
}

template <typename Emit>
inline void chordless_cycles_by_subsets(const Graph& g, int min_len, Emit&& emit) {
  const int n = g.vertex_count();
  if (n > 25) throw precondition_error("subset enumeration limited to n <= 25");
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < min_len) continue;
    VertexSet members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    auto seq = cycle_sequence_of_subset(g, members);
    if (seq) emit(*seq);
  }
}

// DFS enumeration of chordless cycles: grow chordless paths from each start
// vertex s (the cycle minimum), second vertex smaller than the closing one.
template <typename Emit>
inline void chordless_cycles_by_dfs(const Graph& g, int min_len, Emit&& emit) {
  const int n = g.vertex_count();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    // Recursive lambda over the current chordless path.
    auto dfs = [&](auto&& self) -> void {
      int u = path.back();
      for (int w : g.neighbors(u)) {
        if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          if (g.has_edge(w, path[i])) {
            chord = true;
            break;
          }
        if (chord) continue;
        if (path.size() >= 2 && g.has_edge(w, s)) {
          if (static_cast<int>(path.size()) + 1 >= min_len && path[1] < w) {
            auto cyc = path;
            cyc.push_back(w);
            emit(cyc);
          }
          continue;  // any extension past w would leave the chord ws
        }
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = 1;
        self(self);
        on_path[static_cast<std::size_t>(w)] = 0;
        path.pop_back();
      }
    };
    if (path.size() == 1) dfs(dfs);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
}

}  // namespace detail

inline std::vector<Hole> enumerate_holes_subsets(const Graph& g) {
  std::vector<Hole> out;
  detail::chordless_cycles_by_subsets(g, 4, [&](const std::vector<int>& seq) {
    out.emplace_back(g, seq);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Hole> enumerate_holes_dfs(const Graph& g) {
  std::vector<Hole> out;
  detail::chordless_cycles_by_dfs(g, 4, [&](const std::vector<int>& seq) {
    out.emplace_back(g, seq);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Hole> enumerate_holes(const Graph& g) {
  return g.vertex_count() <= 12 ? enumerate_holes_subsets(g) : enumerate_holes_dfs(g);
}

inline std::vector<InducedCycle> enumerate_induced_cycles_subsets(const Graph& g) {
  std::vector<InducedCycle> out;
  detail::chordless_cycles_by_subsets(g, 3, [&](const std::vector<int>& seq) {
    out.emplace_back(g, seq);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<InducedCycle> enumerate_induced_cycles_dfs(const Graph& g) {
  std::vector<InducedCycle> out;
  detail::chordless_cycles_by_dfs(g, 3, [&](const std::vector<int>& seq) {
    out.emplace_back(g, seq);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g) {
  return g.vertex_count() <= 12 ? enumerate_induced_cycles_subsets(g)
                                : enumerate_induced_cycles_dfs(g);
}

inline int hole_count(const Graph& g) { return static_cast<int>(enumerate_holes(g).size()); }

inline bool is_hole_of(const Graph& g, const Hole& c) {
  const auto& seq = c.vertices();
  int len = c.length();
  for (int v : seq)
    if (!g.has_vertex(v)) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      bool consecutive = (j - i == 1) || (i == 0 && j == len - 1);
      if (g.has_edge(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(j)]) != consecutive)
        return false;
    }
  return true;
}

// Vertices adjacent to every vertex of a set (dominators). Disjoint from
// the set itself by definition.
inline VertexSet dominators_of(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (set_contains(s, v)) continue;
    if (g.adjacent_to_all(v, s)) out.push_back(v);
  }
  return out;
}

// X_C: vertices adjacent to all vertices of the hole.
inline VertexSet hole_dominators(const Graph& g, const Hole& c) {
  if (!is_hole_of(g, c)) throw precondition_error("not a hole of this graph");
  return dominators_of(g, c.vertex_set());
}

namespace detail {

// Component labels of G - (V(C) u X_C); vertices inside the removed set
// get label -1.
inline std::vector<int> avoid_region_labels(const Graph& g, const Hole& c) {
  VertexSet removed = set_union(c.vertex_set(), hole_dominators(g, c));
  VertexSet rest = set_difference(g.vertices(), removed);
  return component_labels(g, rest);
}

}  // namespace detail

// True iff a C-avoiding (a,b)-path exists for a, b on C. Both endpoints lie
// on C, so only the length->=2 clause of the definition can apply: some
// component of G - (V(C) u X_C) must meet both N(a) and N(b).
inline bool c_avoiding_path_exists(const Graph& g, const Hole& c, int a, int b) {
  if (!is_hole_of(g, c)) throw precondition_error("not a hole of this graph");
  if (!c.contains_vertex(a) || !c.contains_vertex(b) || a == b)
    throw precondition_error("endpoints must be distinct vertices of the hole");
  auto lab = detail::avoid_region_labels(g, c);
  std::set<int> comps_a, comps_b;
  for (int w : g.neighbors(a))
    if (lab[static_cast<std::size_t>(w)] >= 0) comps_a.insert(lab[static_cast<std::size_t>(w)]);
  for (int w : g.neighbors(b))
    if (lab[static_cast<std::size_t>(w)] >= 0) comps_b.insert(lab[static_cast<std::size_t>(w)]);
  for (int x : comps_a)
    if (comps_b.count(x)) return true;
  return false;
}

struct Sector {
  Hole hole;
  int index;
  VertexSet members;
};

// S_{t,i}: internal vertices of C-avoiding (v_i, v_{i+1})-walks. Walks may
// repeat vertices, so a whole component of G - (V(C) u X_C) floods as soon
// as it touches both N(v_i) and N(v_{i+1}).
inline Sector sector(const Graph& g, const Hole& c, int i) {
  if (!is_hole_of(g, c)) throw precondition_error("not a hole of this graph");
  if (i < 0 || i >= c.length()) throw precondition_error("sector index out of range");
  auto lab = detail::avoid_region_labels(g, c);
  int a = c.at(i), b = c.at(i + 1);
  std::set<int> comps_a, comps_b;
  for (int w : g.neighbors(a))
    if (lab[static_cast<std::size_t>(w)] >= 0) comps_a.insert(lab[static_cast<std::size_t>(w)]);
  for (int w : g.neighbors(b))
    if (lab[static_cast<std::size_t>(w)] >= 0) comps_b.insert(lab[static_cast<std::size_t>(w)]);
  VertexSet members;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int l = lab[static_cast<std::size_t>(v)];
    if (l >= 0 && comps_a.count(l) && comps_b.count(l)) members.push_back(v);
  }
  return Sector{c, i, members};
}

// All shortest C-avoiding (a,b)-paths, as vertex sequences from a to b.
// Used by the structure checks on 4-holes.
inline std::vector<std::vector<int>> shortest_avoiding_paths(const Graph& g, const Hole& c,
                                                             int a, int b) {
  if (!is_hole_of(g, c)) throw precondition_error("not a hole of this graph");
  auto lab = detail::avoid_region_labels(g, c);
  const int n = g.vertex_count();
  auto passable = [&](int v) { return lab[static_cast<std::size_t>(v)] >= 0; };
  // BFS from a through passable internals.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(a)] = 0;
  q.push(a);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == b) continue;
    for (int w : g.neighbors(u)) {
      if (w != b && !passable(w)) continue;
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  std::vector<std::vector<int>> out;
  if (dist[static_cast<std::size_t>(b)] < 2) return out;  // direct edge is not C-avoiding here
  std::vector<int> path{a};
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == b) {
      out.push_back(path);
      return;
    }
    for (int w : g.neighbors(u)) {
      if (w != b && !passable(w)) continue;
      if (dist[static_cast<std::size_t>(w)] != dist[static_cast<std::size_t>(u)] + 1) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  dfs(dfs, a);
  return out;
}

// Decomposition of an arbitrary cycle into induced cycles by the
// minimum-chord recursion: either the input is already chordless, or the
// result is a family C_1..C_s of proper-subset induced cycles covering
// every cycle edge once and every used chord exactly twice.
inline std::vector<InducedCycle> decompose_cycle(const Graph& g, const std::vector<int>& cycle) {
  const int len0 = static_cast<int>(cycle.size());
  if (len0 < 3) throw precondition_error("cycle needs length >= 3");
  if (static_cast<int>(make_set(cycle).size()) != len0)
    throw precondition_error("cycle repeats a vertex");
  for (int i = 0; i < len0; ++i)
    if (!g.has_edge(cycle[static_cast<std::size_t>(i)],
                    cycle[static_cast<std::size_t>((i + 1) % len0)]))
      throw precondition_error("input is not a cycle of the graph");

  std::vector<InducedCycle> out;
  std::vector<int> cur = cycle;
  while (true) {
    const int len = static_cast<int>(cur.size());
    // Find the chord minimizing cyclic distance, tie-broken lexicographically.
    int best_i = -1, best_j = -1, best_d = len;
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) {
        bool consecutive = (j - i == 1) || (i == 0 && j == len - 1);
        if (consecutive) continue;
        if (!g.has_edge(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(j)])) continue;
        int d = std::min(j - i, len - (j - i));
        Edge e = make_edge(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(j)]);
        Edge be = best_i < 0 ? Edge{-1, -1}
                             : make_edge(cur[static_cast<std::size_t>(best_i)],
                                         cur[static_cast<std::size_t>(best_j)]);
        if (best_i < 0 || d < best_d || (d == best_d && e < be)) {
          best_i = i;
          best_j = j;
          best_d = d;
        }
      }
    if (best_i < 0) {
      out.emplace_back(g, cur);
      break;
    }
    // Split along the chord: the short section plus the chord is an induced
    // cycle (a smaller chord inside it would contradict minimality).
    std::vector<int> short_sec, long_sec;
    if (best_j - best_i <= len - (best_j - best_i)) {
      for (int p = best_i; p <= best_j; ++p) short_sec.push_back(cur[static_cast<std::size_t>(p)]);
      for (int p = best_j; p != best_i; p = (p + 1) % len)
        long_sec.push_back(cur[static_cast<std::size_t>(p)]);
      long_sec.push_back(cur[static_cast<std::size_t>(best_i)]);
    } else {
      for (int p = best_j; p != best_i; p = (p + 1) % len)
        short_sec.push_back(cur[static_cast<std::size_t>(p)]);
      short_sec.push_back(cur[static_cast<std::size_t>(best_i)]);
      for (int p = best_i; p <= best_j; ++p) long_sec.push_back(cur[static_cast<std::size_t>(p)]);
    }
    out.emplace_back(g, short_sec);  // throws internal inconsistency as precondition_error
    cur = long_sec;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Partition of the symmetric difference E(c1) ^ E(c2) into edge-disjoint
// cycles. Every vertex of the difference has even degree, so the peeling
// walk below always closes cycles.
inline std::vector<std::vector<int>> symmetric_difference_components(const Graph& g,
                                                                     const InducedCycle& c1,
                                                                     const InducedCycle& c2) {
  if (c1 == c2) throw precondition_error("cycles must be distinct");
  auto e1 = c1.edge_set(), e2 = c2.edge_set();
  std::set<Edge> diff;
  for (const auto& e : e1)
    if (!std::binary_search(e2.begin(), e2.end(), e)) diff.insert(e);
  for (const auto& e : e2)
    if (!std::binary_search(e1.begin(), e1.end(), e)) diff.insert(e);
  for (const auto& [u, v] : diff)
    if (!g.has_edge(u, v)) throw internal_error("symmetric difference edge missing from graph");

  std::map<int, std::set<int>> adj;
  for (const auto& [u, v] : diff) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<std::vector<int>> cycles;
  while (!adj.empty()) {
    int start = adj.begin()->first;
    std::vector<int> walk{start};
    std::map<int, int> pos{{start, 0}};
    while (true) {
      int u = walk.back();
      auto it = adj.find(u);
      if (it == adj.end() || it->second.empty()) {
        if (walk.size() != 1) throw internal_error("difference walk stuck off-cycle");
        adj.erase(u);
        break;
      }
      int w = *it->second.begin();
      it->second.erase(w);
      adj[w].erase(u);
      if (adj[u].empty()) adj.erase(u);
      if (adj.count(w) && adj[w].empty()) adj.erase(w);
      auto hit = pos.find(w);
      if (hit != pos.end()) {
        std::vector<int> cyc(walk.begin() + hit->second, walk.end());
        cycles.push_back(detail::canonical_cycle(cyc));
        while (static_cast<int>(walk.size()) > hit->second + 1) {
          pos.erase(walk.back());
          walk.pop_back();
        }
        if (walk.size() == 1 && !adj.count(walk[0])) break;
      } else {
        pos[w] = static_cast<int>(walk.size());
        walk.push_back(w);
      }
    }
  }
  std::sort(cycles.begin(), cycles.end());
  // Sanity: the cycles partition the difference exactly.
  std::set<Edge> covered;
  for (const auto& cyc : cycles) {
    int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i) {
      Edge e = make_edge(cyc[static_cast<std::size_t>(i)], cyc[static_cast<std::size_t>((i + 1) % len)]);
      if (covered.count(e)) throw internal_error("difference cycles overlap");
      covered.insert(e);
    }
  }
  if (covered != diff) throw internal_error("difference cycles do not cover the difference");
  return cycles;
}

}  // namespace holecomp

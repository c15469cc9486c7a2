#pragma once

// The hole-interaction conditions (E0), (E1), (LC), (K), (V2), detection of
// the K_2^m and K_t[]K_2 gadgets, and the per-hole A/B/C classification.

#include <array>
#include <optional>

#include "holecomp/holes.hpp"

namespace holecomp {

inline int shared_edge_count(const Hole& a, const Hole& b) {
  auto ea = a.edge_set(), eb = b.edge_set();
  int c = 0;
  for (const auto& e : ea)
    if (std::binary_search(eb.begin(), eb.end(), e)) ++c;
  return c;
}

inline int shared_vertex_count(const Hole& a, const Hole& b) {
  return static_cast<int>(set_intersection(a.vertex_set(), b.vertex_set()).size());
}

struct HolePairWitness {
  Hole first, second;
  int shared_edges;
  int shared_vertices;
};

struct KViolation {
  Hole hole;
  // For each hole edge, some other induced cycle containing it.
  std::vector<std::pair<Edge, InducedCycle>> edge_covers;
};

struct ConditionReport {
  int hole_count = 0;
  bool e0 = true, e1 = true, lc = true, k = true, v2 = true;
  std::optional<HolePairWitness> e0_violation, e1_violation, lc_violation, v2_violation;
  std::optional<KViolation> k_violation;
};

inline std::pair<bool, std::optional<HolePairWitness>> check_e1(const Graph& g) {
  auto holes = enumerate_holes(g);
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j)
      if (shared_edge_count(holes[i], holes[j]) > 1)
        return {false, HolePairWitness{holes[i], holes[j], shared_edge_count(holes[i], holes[j]),
                                       shared_vertex_count(holes[i], holes[j])}};
  return {true, std::nullopt};
}

inline std::pair<bool, std::optional<HolePairWitness>> check_e0(const Graph& g) {
  auto holes = enumerate_holes(g);
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j)
      if (shared_edge_count(holes[i], holes[j]) > 0)
        return {false, HolePairWitness{holes[i], holes[j], shared_edge_count(holes[i], holes[j]),
                                       shared_vertex_count(holes[i], holes[j])}};
  return {true, std::nullopt};
}

inline std::pair<bool, std::optional<HolePairWitness>> check_v2(const Graph& g) {
  auto holes = enumerate_holes(g);
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j)
      if (shared_vertex_count(holes[i], holes[j]) > 2)
        return {false, HolePairWitness{holes[i], holes[j], shared_edge_count(holes[i], holes[j]),
                                       shared_vertex_count(holes[i], holes[j])}};
  return {true, std::nullopt};
}

// A hole C is independent iff for every other hole C': they share at most
// two vertices, and sharing exactly two forces one shared edge and |C| >= 5.
inline std::pair<bool, std::optional<HolePairWitness>> check_lc(const Graph& g) {
  auto holes = enumerate_holes(g);
  for (const auto& c : holes)
    for (const auto& other : holes) {
      if (c == other) continue;
      int sv = shared_vertex_count(c, other);
      int se = shared_edge_count(c, other);
      bool ok = sv <= 2 && (sv != 2 || (se == 1 && c.length() >= 5));
      if (!ok) return {false, HolePairWitness{c, other, se, sv}};
    }
  return {true, std::nullopt};
}

// (K): every hole owns an edge contained in no other induced cycle
// (triangles included, per the prism remark).
inline std::pair<bool, std::optional<KViolation>> check_k(const Graph& g) {
  auto holes = enumerate_holes(g);
  auto cycles = enumerate_induced_cycles(g);
  for (const auto& c : holes) {
    bool has_private_edge = false;
    std::vector<std::pair<Edge, InducedCycle>> covers;
    for (const auto& e : c.edge_set()) {
      const InducedCycle* cover = nullptr;
      for (const auto& other : cycles) {
        if (other == static_cast<const InducedCycle&>(c)) continue;
        if (other.contains_edge(e.first, e.second)) {
          cover = &other;
          break;
        }
      }
      if (!cover) {
        has_private_edge = true;
        break;
      }
      covers.emplace_back(e, *cover);
    }
    if (!has_private_edge) return {false, KViolation{c, std::move(covers)}};
  }
  return {true, std::nullopt};
}

inline ConditionReport analyze_conditions(const Graph& g) {
  ConditionReport r;
  r.hole_count = static_cast<int>(enumerate_holes(g).size());
  std::tie(r.e0, r.e0_violation) = check_e0(g);
  std::tie(r.e1, r.e1_violation) = check_e1(g);
  std::tie(r.lc, r.lc_violation) = check_lc(g);
  std::tie(r.v2, r.v2_violation) = check_v2(g);
  std::tie(r.k, r.k_violation) = check_k(g);
  return r;
}

// ---------------------------------------------------------------------------
// Gadget detection.
//
// Both gadgets reduce to maximum-clique search over a small compatibility
// graph: parts {u,v} for K_2^m, oriented columns (x,y) for K_t[]K_2. All
// defining constraints are pairwise, so pairwise compatibility characterizes
// the induced gadget exactly. The subset brute force in the tests doubles as
// the correctness oracle.
// ---------------------------------------------------------------------------

enum class GadgetKind { K2m, KtBoxK2 };

struct GadgetWitness {
  GadgetKind kind;
  int parameter;  // m for K_2^m, t for K_t[]K_2
  // K2m: each group is a non-adjacent part {a,b} with a < b.
  // KtBoxK2: each group is a column [x_i, y_i]; x-sides form one K_t.
  std::vector<std::array<int, 2>> groups;

  VertexSet vertices() const {
    std::vector<int> v;
    for (const auto& gr : groups) {
      v.push_back(gr[0]);
      v.push_back(gr[1]);
    }
    return make_set(v);
  }
};

namespace detail {

// Lexicographically-first maximum clique in a compatibility graph, with an
// optional required seed. Plain branch and bound; candidate counts here are
// tiny (pairs or oriented columns of a desk-scale graph).
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::vector<char>> compat)
      : compat_(std::move(compat)) {}

  std::vector<int> max_clique(const std::vector<int>& required) const {
    std::vector<int> cands;
    const int n = static_cast<int>(compat_.size());
    for (int i = 0; i < n; ++i) {
      bool ok = std::find(required.begin(), required.end(), i) == required.end();
      for (int r : required) ok = ok && compat_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
      if (ok) cands.push_back(i);
    }
    for (std::size_t i = 0; i < required.size(); ++i)
      for (std::size_t j = i + 1; j < required.size(); ++j)
        if (!compat_[static_cast<std::size_t>(required[i])][static_cast<std::size_t>(required[j])])
          return {};  // seed itself incompatible
    std::vector<int> cur = required, best = required;
    extend(cur, cands, best);
    return best;
  }

 private:
  void extend(std::vector<int>& cur, const std::vector<int>& cands, std::vector<int>& best) const {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() + cands.size() <= best.size()) return;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cur.size() + (cands.size() - i) <= best.size()) return;
      int c = cands[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (compat_[static_cast<std::size_t>(c)][static_cast<std::size_t>(cands[j])])
          next.push_back(cands[j]);
      cur.push_back(c);
      extend(cur, next, best);
      cur.pop_back();
    }
  }

  std::vector<std::vector<char>> compat_;
};

inline std::vector<std::array<int, 2>> k2m_part_candidates(const Graph& g) {
  std::vector<std::array<int, 2>> parts;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) parts.push_back({u, v});
  return parts;
}

inline CliqueSearch k2m_search(const Graph& g, const std::vector<std::array<int, 2>>& parts) {
  const int np = static_cast<int>(parts.size());
  std::vector<std::vector<char>> compat(static_cast<std::size_t>(np),
                                        std::vector<char>(static_cast<std::size_t>(np), 0));
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      const auto &a = parts[static_cast<std::size_t>(i)], &b = parts[static_cast<std::size_t>(j)];
      bool disjoint = a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
      bool complete = disjoint && g.has_edge(a[0], b[0]) && g.has_edge(a[0], b[1]) &&
                      g.has_edge(a[1], b[0]) && g.has_edge(a[1], b[1]);
      compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          compat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = complete ? 1 : 0;
    }
  return CliqueSearch(std::move(compat));
}

inline std::vector<std::array<int, 2>> column_candidates(const Graph& g) {
  std::vector<std::array<int, 2>> cols;
  for (const auto& [u, v] : g.edges()) {
    cols.push_back({u, v});
    cols.push_back({v, u});
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

inline CliqueSearch ktbox_search(const Graph& g, const std::vector<std::array<int, 2>>& cols) {
  const int nc = static_cast<int>(cols.size());
  std::vector<std::vector<char>> compat(static_cast<std::size_t>(nc),
                                        std::vector<char>(static_cast<std::size_t>(nc), 0));
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      const auto &a = cols[static_cast<std::size_t>(i)], &b = cols[static_cast<std::size_t>(j)];
      bool disjoint = a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
      bool ok = disjoint && g.has_edge(a[0], b[0]) && g.has_edge(a[1], b[1]) &&
                !g.has_edge(a[0], b[1]) && !g.has_edge(a[1], b[0]);
      compat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          compat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = ok ? 1 : 0;
    }
  return CliqueSearch(std::move(compat));
}

inline GadgetWitness normalize_ktbox(std::vector<std::array<int, 2>> columns) {
  // Consistent global orientation: make the first column's x its smaller
  // endpoint, then sort columns by x-side id.
  std::sort(columns.begin(), columns.end(),
            [](const auto& a, const auto& b) { return std::min(a[0], a[1]) < std::min(b[0], b[1]); });
  if (columns[0][0] > columns[0][1])
    for (auto& c : columns) std::swap(c[0], c[1]);
  std::sort(columns.begin(), columns.end());
  return GadgetWitness{GadgetKind::KtBoxK2, static_cast<int>(columns.size()), std::move(columns)};
}

}  // namespace detail

// Maximum induced K_2^m, m >= 2; absent when the graph has no 4-hole.
inline std::optional<GadgetWitness> find_max_k2m(const Graph& g) {
  auto parts = detail::k2m_part_candidates(g);
  auto found = detail::k2m_search(g, parts).max_clique({});
  if (found.size() < 2) return std::nullopt;
  std::vector<std::array<int, 2>> groups;
  for (int i : found) groups.push_back(parts[static_cast<std::size_t>(i)]);
  std::sort(groups.begin(), groups.end());
  return GadgetWitness{GadgetKind::K2m, static_cast<int>(groups.size()), std::move(groups)};
}

// Maximum induced K_t[]K_2, t >= 3; absent when the graph is prism-free.
inline std::optional<GadgetWitness> find_max_ktbox(const Graph& g) {
  auto cols = detail::column_candidates(g);
  auto found = detail::ktbox_search(g, cols).max_clique({});
  if (found.size() < 3) return std::nullopt;
  std::vector<std::array<int, 2>> columns;
  for (int i : found) columns.push_back(cols[static_cast<std::size_t>(i)]);
  return detail::normalize_ktbox(std::move(columns));
}

inline bool validate_gadget(const Graph& g, const GadgetWitness& w) {
  const auto& gr = w.groups;
  if (static_cast<int>(gr.size()) != w.parameter) return false;
  VertexSet all = w.vertices();
  if (static_cast<int>(all.size()) != 2 * w.parameter) return false;
  for (std::size_t i = 0; i < gr.size(); ++i) {
    if (!g.has_vertex(gr[i][0]) || !g.has_vertex(gr[i][1])) return false;
    bool in_group = g.has_edge(gr[i][0], gr[i][1]);
    if (w.kind == GadgetKind::K2m && in_group) return false;
    if (w.kind == GadgetKind::KtBoxK2 && !in_group) return false;
    for (std::size_t j = i + 1; j < gr.size(); ++j) {
      if (w.kind == GadgetKind::K2m) {
        if (!g.has_edge(gr[i][0], gr[j][0]) || !g.has_edge(gr[i][0], gr[j][1]) ||
            !g.has_edge(gr[i][1], gr[j][0]) || !g.has_edge(gr[i][1], gr[j][1]))
          return false;
      } else {
        if (!g.has_edge(gr[i][0], gr[j][0]) || !g.has_edge(gr[i][1], gr[j][1]) ||
            g.has_edge(gr[i][0], gr[j][1]) || g.has_edge(gr[i][1], gr[j][0]))
          return false;
      }
    }
  }
  return true;
}

// X_K for an induced K_2^m witness (and, for internal use, the dominator
// set of any gadget's vertex set).
inline VertexSet gadget_dominators(const Graph& g, const GadgetWitness& w) {
  if (!validate_gadget(g, w)) throw precondition_error("invalid gadget witness");
  return dominators_of(g, w.vertices());
}

inline bool is_k222_free(const Graph& g) {
  auto w = find_max_k2m(g);
  return !w || w->parameter < 3;
}

inline bool is_prism_free(const Graph& g) { return !find_max_ktbox(g).has_value(); }

// Induced K_{2,3} detector: two non-adjacent "centers" with three pairwise
// non-adjacent common neighbors.
inline bool has_induced_k23(const Graph& g) {
  const int n = g.vertex_count();
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = x1 + 1; x2 < n; ++x2) {
      if (g.has_edge(x1, x2)) continue;
      VertexSet common;
      for (int y = 0; y < n; ++y)
        if (y != x1 && y != x2 && g.has_edge(x1, y) && g.has_edge(x2, y)) common.push_back(y);
      for (std::size_t a = 0; a < common.size(); ++a)
        for (std::size_t b = a + 1; b < common.size(); ++b)
          for (std::size_t c = b + 1; c < common.size(); ++c)
            if (!g.has_edge(common[a], common[b]) && !g.has_edge(common[a], common[c]) &&
                !g.has_edge(common[b], common[c]))
              return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// Hole classification (valid on graphs satisfying (E1)).
// ---------------------------------------------------------------------------

enum class HoleTag { A, B, C };

struct HoleClass {
  Hole hole;
  HoleTag tag;
  std::optional<GadgetWitness> gadget;  // for B and C
};

// Induced K_t[]K_2 (t >= 3) containing the 4-hole, if any. The hole's two
// opposite-edge pairs are the only candidate column pairs.
inline std::optional<GadgetWitness> ktbox_containing_hole(const Graph& g, const Hole& c) {
  if (c.length() != 4) return std::nullopt;
  auto cols = detail::column_candidates(g);
  auto search = detail::ktbox_search(g, cols);
  auto index_of = [&](std::array<int, 2> col) {
    auto it = std::lower_bound(cols.begin(), cols.end(), col);
    return static_cast<int>(it - cols.begin());
  };
  std::optional<GadgetWitness> best;
  int v0 = c.at(0), v1 = c.at(1), v2 = c.at(2), v3 = c.at(3);
  const std::array<std::array<std::array<int, 2>, 2>, 2> pairings = {{
      {{{v0, v3}, {v1, v2}}},
      {{{v0, v1}, {v3, v2}}},
  }};
  for (const auto& seed_cols : pairings) {
    std::vector<int> seed{index_of(seed_cols[0]), index_of(seed_cols[1])};
    auto found = search.max_clique(seed);
    if (found.size() >= 3) {
      std::vector<std::array<int, 2>> columns;
      for (int i : found) columns.push_back(cols[static_cast<std::size_t>(i)]);
      auto w = detail::normalize_ktbox(std::move(columns));
      if (!best || w.parameter > best->parameter) best = w;
    }
  }
  return best;
}

// Induced K_2^m (m >= 3) containing the 4-hole, if any. The hole's two
// diagonal pairs are the seed parts.
inline std::optional<GadgetWitness> k2m_containing_hole(const Graph& g, const Hole& c) {
  if (c.length() != 4) return std::nullopt;
  auto parts = detail::k2m_part_candidates(g);
  auto search = detail::k2m_search(g, parts);
  auto index_of = [&](int a, int b) {
    std::array<int, 2> p{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(parts.begin(), parts.end(), p);
    return static_cast<int>(it - parts.begin());
  };
  std::vector<int> seed{index_of(c.at(0), c.at(2)), index_of(c.at(1), c.at(3))};
  auto found = search.max_clique(seed);
  if (found.size() < 3) return std::nullopt;
  std::vector<std::array<int, 2>> groups;
  for (int i : found) groups.push_back(parts[static_cast<std::size_t>(i)]);
  std::sort(groups.begin(), groups.end());
  return GadgetWitness{GadgetKind::K2m, static_cast<int>(groups.size()), std::move(groups)};
}

inline bool no_avoiding_path_between_nonadjacent(const Graph& g, const Hole& c) {
  int len = c.length();
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (c_avoiding_path_exists(g, c, c.at(i), c.at(j))) return false;
    }
  return true;
}

// Classify a hole of an (E1) graph as A, B, or C. Both defining predicates
// and the gadget witnesses are computed independently, then the structure
// theorem's "moreover" clauses are cross-asserted, so a violation of the
// trichotomy surfaces as an internal error (meaning (E1) was false upstream
// or there is a bug).
inline HoleClass classify_hole(const Graph& g, const Hole& c) {
  if (!is_hole_of(g, c)) throw precondition_error("not a hole of this graph");
  bool path_free = no_avoiding_path_between_nonadjacent(g, c);
  bool xc_clique = g.is_clique(hole_dominators(g, c));
  auto in_box = ktbox_containing_hole(g, c);
  auto in_k2m = k2m_containing_hole(g, c);

  bool tag_a = path_free && xc_clique;
  bool tag_b = in_box.has_value();
  bool tag_c = in_k2m.has_value();
  int count = static_cast<int>(tag_a) + static_cast<int>(tag_b) + static_cast<int>(tag_c);
  if (count != 1)
    throw internal_error("hole classification trichotomy violated on " + c.to_string());
  if (tag_b) {
    if (!xc_clique) throw internal_error("class B hole with non-clique X_C: " + c.to_string());
    if (path_free) throw internal_error("class B hole without avoiding path: " + c.to_string());
    return HoleClass{c, HoleTag::B, in_box};
  }
  if (tag_c) {
    if (!path_free) throw internal_error("class C hole with avoiding path: " + c.to_string());
    if (xc_clique) throw internal_error("class C hole with clique X_C: " + c.to_string());
    return HoleClass{c, HoleTag::C, in_k2m};
  }
  return HoleClass{c, HoleTag::A, std::nullopt};
}

}  // namespace holecomp

#pragma once

// Deterministic fixture and corpus generators. All randomness flows from a
// single 64-bit seed through std::mt19937_64; every generator asserts the
// defining property of what it emits.

#include <random>

#include "holecomp/competition.hpp"
#include "holecomp/conditions.hpp"

namespace holecomp {

inline Graph gen_cycle(int n) {
  if (n < 3) throw precondition_error("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edges(n, std::move(edges));
}

inline Graph gen_path(int n) {
  if (n < 1) throw precondition_error("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph gen_complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

// K_2^m: parts {2i, 2i+1}; all cross-part pairs adjacent.
inline Graph gen_k2m(int m) {
  if (m < 2) throw precondition_error("k2m needs m >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j)
      if (i / 2 != j / 2) edges.push_back({i, j});
  Graph g = Graph::from_edges(2 * m, std::move(edges));
  auto w = find_max_k2m(g);
  if (!w || w->parameter != m) throw internal_error("gen_k2m: self-check failed");
  return g;
}

// K_t[]K_2: x_i = i, y_i = t + i; two K_t sides joined by the column matching.
inline Graph gen_ktbox(int t) {
  if (t < 2) throw precondition_error("ktbox needs t >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      edges.push_back({i, j});
      edges.push_back({t + i, t + j});
    }
  for (int i = 0; i < t; ++i) edges.push_back({i, t + i});
  Graph g = Graph::from_edges(2 * t, std::move(edges));
  if (t >= 3) {
    auto w = find_max_ktbox(g);
    if (!w || w->parameter != t) throw internal_error("gen_ktbox: self-check failed");
  }
  return g;
}

inline Graph gen_random(int n, double p, uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw precondition_error("bad random graph parameters");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.push_back({i, j});
  return Graph::from_edges(n, std::move(edges));
}

// Random chordal graph built along a reverse elimination order: each vertex
// attaches to a random clique inside the neighborhood of a later anchor.
inline Graph gen_random_chordal(int n, double p, uint64_t seed) {
  if (n < 1 || p < 0.0 || p > 1.0) throw precondition_error("bad chordal parameters");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  auto connect = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    edges.push_back(make_edge(a, b));
  };
  for (int i = n - 2; i >= 0; --i) {
    std::uniform_int_distribution<int> pick(i + 1, n - 1);
    int anchor = pick(rng);
    std::vector<int> clique{anchor};
    for (int w = i + 1; w < n; ++w) {
      if (w == anchor || !adj[static_cast<std::size_t>(anchor)][static_cast<std::size_t>(w)]) continue;
      bool joined = true;
      for (int c : clique) joined = joined && adj[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)];
      if (joined && coin(rng) < p) clique.push_back(w);
    }
    if (coin(rng) < 0.9)  // leave a few isolated-ish vertices in the corpus
      for (int c : clique) connect(i, c);
  }
  Graph g = Graph::from_edges(n, std::move(edges));
  if (!is_chordal(g)) throw internal_error("gen_random_chordal: self-check failed");
  return g;
}

// Seeded Erdos-Renyi graphs filtered by (E1); throws generation_error when
// the rejection budget runs out.
inline Graph gen_random_e1(int n, double p, uint64_t seed, int budget = 10000) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) edges.push_back({i, j});
    Graph g = Graph::from_edges(n, std::move(edges));
    if (check_e1(g).first) return g;
  }
  throw generation_error("rejection budget exhausted without an (E1) graph");
}

}  // namespace holecomp

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "misenum/graph.hpp"
#include "misenum/ordering.hpp"

namespace misenum {

// Deterministic graph families for benchmarks and randomized tests.  All
// randomness comes from a caller-provided seed through mt19937 with modulo
// reduction, so the same seed gives the same graph on every platform.

inline Graph triangles(int t) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t; ++i) {
    const int b = 3 * i;
    edges.push_back({b, b + 1});
    edges.push_back({b, b + 2});
    edges.push_back({b + 1, b + 2});
  }
  return Graph(3 * t, edges);
}

inline Graph grid(int s) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < s; ++c) {
      const int id = r * s + c;
      if (c + 1 < s) edges.push_back({id, id + 1});
      if (r + 1 < s) edges.push_back({id, id + s});
    }
  return Graph(s * s, edges);
}

// Every vertex picks up to k distinct earlier neighbors, so every induced
// subgraph has a vertex of degree at most k.
inline Graph random_degenerate(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    const int picks = std::min(v, k);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < picks) {
      const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
      bool fresh = true;
      for (int c : chosen)
        if (c == u) fresh = false;
      if (fresh) {
        chosen.push_back(u);
        edges.push_back({u, v});
      }
    }
  }
  return Graph(n, edges);
}

// Erdos-Renyi style: each pair becomes an edge with probability
// percent / 100.
inline Graph random_graph(int n, int percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.push_back({u, v});
  return Graph(n, edges);
}

// Graph plus an explicit orientation of out-degree at most two: every vertex
// tries to point at two random distinct others, skipping pairs already used.
inline std::pair<Graph, Orientation> random_two_oriented(int n,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
  for (auto& row : used) row.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> directed;
  for (int v = 0; v < n && n > 1; ++v) {
    for (int round = 0; round < 2; ++round) {
      const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      if (u == v || used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
        continue;
      used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
      used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      directed.push_back({v, u});
    }
  }
  Graph g(n, directed);
  Orientation o = Orientation::from_directed_edges(g, directed);
  return {std::move(g), std::move(o)};
}

}  // namespace misenum

#include "misenum/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace misenum {

namespace {

void collect(const std::vector<std::uint32_t>& adj, int n, int v,
             std::uint32_t chosen, std::vector<std::vector<int>>& out) {
  if (v == n) {
    // Maximal iff every outside vertex has a chosen neighbor.
    for (int u = 0; u < n; ++u) {
      if (chosen & (1u << u)) continue;
      if ((adj[static_cast<std::size_t>(u)] & chosen) == 0) return;
    }
    std::vector<int> set;
    for (int u = 0; u < n; ++u)
      if (chosen & (1u << u)) set.push_back(u);
    out.push_back(std::move(set));
    return;
  }
  collect(adj, n, v + 1, chosen, out);
  if ((adj[static_cast<std::size_t>(v)] & chosen) == 0)
    collect(adj, n, v + 1, chosen | (1u << v), out);
}

}  // namespace

std::vector<std::vector<int>> brute_mis(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("brute force limited to 24 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  std::vector<std::vector<int>> out;
  collect(adj, n, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

int naive_undominated(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  int count = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    bool dominated = false;
    for (int w : g.neighbors(v))
      if (in[static_cast<std::size_t>(w)]) {
        dominated = true;
        break;
      }
    if (!dominated) ++count;
  }
  return count;
}

bool naive_is_independent(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

bool naive_is_maximal_independent(const Graph& g, const std::vector<int>& s) {
  return naive_is_independent(g, s) && naive_undominated(g, s) == 0;
}

}  // namespace misenum

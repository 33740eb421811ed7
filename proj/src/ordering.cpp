#include "misenum/ordering.hpp"

#include <algorithm>
#include <set>

namespace misenum {

VertexOrdering::VertexOrdering(std::vector<int> order) : order_(std::move(order)) {
  pos_.assign(order_.size(), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    int v = order_[i];
    if (v < 0 || v >= static_cast<int>(order_.size()) ||
        pos_[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("ordering is not a permutation");
    pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return VertexOrdering(std::move(order));
}

std::pair<VertexOrdering, int> degeneracy_ordering(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  // (degree, id) pairs give smallest-id tie-breaking for free.
  std::set<std::pair<int, int>> pending;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    pending.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  int k = 0;
  while (!pending.empty()) {
    auto [d, v] = *pending.begin();
    pending.erase(pending.begin());
    k = std::max(k, d);
    order.push_back(v);
    removed[static_cast<std::size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      pending.erase({deg[static_cast<std::size_t>(w)], w});
      --deg[static_cast<std::size_t>(w)];
      pending.emplace(deg[static_cast<std::size_t>(w)], w);
    }
  }
  return {VertexOrdering(std::move(order)), k};
}

Orientation::Orientation(const Graph& g, const VertexOrdering& ordering) {
  if (ordering.size() != g.num_vertices())
    throw std::invalid_argument("ordering size does not match graph");
  const int n = g.num_vertices();
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : g.edges()) {
    if (ordering.position(u) < ordering.position(v))
      out_[static_cast<std::size_t>(u)].push_back(v);
    else
      out_[static_cast<std::size_t>(v)].push_back(u);
  }
  finalize();
}

Orientation Orientation::from_directed_edges(
    const Graph& g, const std::vector<std::pair<int, int>>& directed) {
  Orientation o;
  const int n = g.num_vertices();
  o.out_.assign(static_cast<std::size_t>(n), {});
  o.in_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : directed) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("directed edge endpoint out of range");
    if (!g.has_edge(u, v))
      throw std::invalid_argument("directed edge not present in graph");
    o.out_[static_cast<std::size_t>(u)].push_back(v);
  }
  o.finalize();
  return o;
}

void Orientation::finalize() {
  for (auto& nbrs : out_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("edge oriented twice");
  }
  for (std::size_t u = 0; u < out_.size(); ++u)
    for (int v : out_[u]) in_[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
  for (auto& nbrs : in_) std::sort(nbrs.begin(), nbrs.end());
  k_ = 0;
  for (const auto& nbrs : out_) k_ = std::max(k_, static_cast<int>(nbrs.size()));
}

}  // namespace misenum

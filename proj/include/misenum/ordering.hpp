#pragma once

#include <span>
#include <utility>
#include <vector>

#include "misenum/graph.hpp"

namespace misenum {

// A total order on the vertices.  order[i] is the vertex at position i and
// position[v] is the inverse map; both are kept so either direction is O(1).
class VertexOrdering {
 public:
  VertexOrdering() = default;
  explicit VertexOrdering(std::vector<int> order);

  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int vertex_at(int pos) const { return order_[static_cast<std::size_t>(pos)]; }
  int position(int v) const { return pos_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& order() const { return order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

// Greedy minimum-degree removal ordering.  Repeatedly removes a vertex of
// smallest residual degree (smallest id on ties) and records it; the result
// lists vertices in removal order and k is the largest residual degree seen
// at any removal.  Every vertex then has at most k neighbors later than
// itself in the ordering.
std::pair<VertexOrdering, int> degeneracy_ordering(const Graph& g);

// Per-edge direction assignment with bounded out-degree.
class Orientation {
 public:
  Orientation() = default;

  // Directs every edge from the endpoint earlier in o to the later one.
  Orientation(const Graph& g, const VertexOrdering& o);

  // Explicit directions: each pair (u, v) directs the edge u->v.  The pairs
  // must cover every edge of g exactly once.
  static Orientation from_directed_edges(
      const Graph& g, const std::vector<std::pair<int, int>>& directed);

  std::span<const int> out_neighbors(int v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  std::span<const int> in_neighbors(int v) const {
    return in_[static_cast<std::size_t>(v)];
  }
  int out_degree(int v) const {
    return static_cast<int>(out_[static_cast<std::size_t>(v)].size());
  }
  // Maximum out-degree over all vertices.
  int k() const { return k_; }
  int num_vertices() const { return static_cast<int>(out_.size()); }

 private:
  void finalize();

  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  int k_ = 0;
};

inline Orientation orient_by_ordering(const Graph& g, const VertexOrdering& o) {
  return Orientation(g, o);
}

}  // namespace misenum

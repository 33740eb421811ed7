#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "misenum/graph.hpp"
#include "misenum/ordering.hpp"
#include "misenum/oriented_dominance.hpp"

namespace misenum {

// Dynamic independence test for a set S in an oriented graph: each vertex
// stores the number of in-edges arriving from S, so an update only walks the
// out-neighbors of the changed vertex and the conflict count (edges with
// both ends in S) stays exact in O(max out-degree) time per update.
class IndependenceCounter {
 public:
  IndependenceCounter(const Graph& g, const Orientation& o);

  void insert(int v);
  void erase(int v);
  bool is_independent() const { return conflicts_ == 0; }
  std::int64_t conflicts() const { return conflicts_; }

  bool contains(int v) const {
    return member_[static_cast<std::size_t>(v)] != 0;
  }
  // In-edges from current members; a vertex is addable iff it is outside S,
  // this count is zero, and no out-neighbor is a member.
  int in_count(int v) const { return incount_[static_cast<std::size_t>(v)]; }
  bool addable(int v) const;
  int size() const { return size_; }

  std::uint64_t* op_counter = nullptr;

 private:
  void bump() {
    if (op_counter) ++*op_counter;
  }

  const Graph* g_;
  const Orientation* o_;
  std::vector<char> member_;
  std::vector<int> incount_;
  std::int64_t conflicts_ = 0;
  int size_ = 0;
};

// Reduction from independence to domination.  The pair graph has a vertex
// for every set of at most two vertices of g that is empty, a singleton, or
// an edge; sets differing by one element are adjacent, and orienting each
// edge from the larger set to the smaller bounds the out-degree by two.
// Maintaining the complement set {empty} + {singletons of non-members of S}
// makes an edge-pair vertex undominated exactly when both its endpoints are
// in S, so S is independent iff the dominance query answers zero.
struct PairGraph {
  Graph graph;             // 1 + n + m vertices
  Orientation orientation; // out-degree <= 2
  int base_n = 0;          // n of the source graph
  std::vector<std::pair<int, int>> pair_edges;  // source edges, lex sorted

  int empty_id() const { return 0; }
  int singleton_id(int v) const { return 1 + v; }
  int pair_id(int edge_index) const { return 1 + base_n + edge_index; }
};

PairGraph build_pair_graph(const Graph& g);

// Independence testing through the pair-graph reduction; one update to S
// costs one dominance update.  delta <= 0 keeps the dominance default.
class PairGraphIndependence {
 public:
  explicit PairGraphIndependence(const Graph& g, int delta = 0);

  // The dominance structure points into the owned pair graph.
  PairGraphIndependence(const PairGraphIndependence&) = delete;
  PairGraphIndependence& operator=(const PairGraphIndependence&) = delete;

  void insert(int v);  // v joins S
  void erase(int v);   // v leaves S
  bool is_independent() const { return dom_.undominated_count() == 0; }
  // Edges with both endpoints in S.
  std::int64_t conflicts() const { return dom_.undominated_count(); }
  bool contains(int v) const {
    return !dom_.contains(pg_.singleton_id(v));
  }

  const PairGraph& pair_graph() const { return pg_; }
  void set_op_counter(std::uint64_t* c) { dom_.op_counter = c; }

 private:
  PairGraph pg_;
  OrientedDominance dom_;
};

}  // namespace misenum

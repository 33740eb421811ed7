#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "misenum/dominance.hpp"
#include "misenum/graph.hpp"

namespace misenum {

// Hierarchical dominance structure.  The graph is compressed level by level:
// high-degree vertices (degree >= delta) survive to the next level, the rest
// are grouped into classes with equal high-degree neighborhoods and replaced
// by one supervertex per class, until a single degree-zero supervertex (the
// root) remains.  Every node keeps
//
//   nadj(w)  = members of S among original vertices v with w in nbr(v),
//   undom(w) = for an original vertex, 1 iff it is outside S; for a
//              supervertex, the sum of undom over children with nadj zero,
//
// and changes are pushed along sv (parent) chains, stopping at the first
// node whose own nadj blocks its contribution.  The query answer is
// undom(root), so queries are O(1) and updates touch O(delta^2) nodes.
class HierarchicalDominance : public DominanceTester {
 public:
  struct LevelRecord {
    int level = 0;       // 1-based level being formed
    int size_before = 0; // node count of the previous level's graph
    int q_size = 0;      // high-degree survivors
    int classes = 0;     // equivalence classes among the rest
    int delta = 0;       // threshold used for this attempt
    bool accepted = false;  // false when the shrink rule forced a retry
  };
  struct BuildStats {
    std::vector<LevelRecord> attempts;  // every attempt, retries included
    int levels = 0;
    int total_nodes = 0;
  };

  // delta >= 2 required; a level that shrinks the graph by less than the
  // factor 0.9 is rebuilt with delta doubled (the threshold never decreases
  // across levels), so construction terminates on every input.
  static HierarchicalDominance build(const Graph& g, int delta = 16);

  void insert(int v) override;
  void erase(int v) override;
  std::int64_t undominated_count() const override;

  int num_nodes() const { return static_cast<int>(kind_.size()); }
  const BuildStats& build_stats() const { return build_stats_; }
  int max_delta() const { return max_delta_; }
  bool contains(int v) const {
    return member_[static_cast<std::size_t>(v)] != 0;
  }

  // Nodes touched by the last insert/erase.
  std::uint64_t touched_last() const { return touched_last_; }

  // Hash of the full counter state; equal update histories ending in the
  // same S must agree on it.
  std::uint64_t state_hash() const;

  // One node per line: id, kind, level, sv, nadj, undom.
  void dump(std::ostream& out) const;

 private:
  HierarchicalDominance() = default;

  void bump() {
    ++touched_last_;
    if (op_counter) ++*op_counter;
  }
  void propagate(int x, std::int64_t d);
  void incr_nadj(int w);
  void decr_nadj(int w);

  int n_ = 0;     // original vertices; node ids >= n_ are supervertices
  int root_ = -1;
  std::vector<char> kind_;            // 0 original, 1 supervertex
  std::vector<int> level_;
  std::vector<int> sv_;               // parent pointer; -1 at the root
  std::vector<std::vector<int>> nbr_; // original vertices only
  std::vector<std::int64_t> nadj_;
  std::vector<std::int64_t> undom_;
  std::vector<char> member_;
  int max_delta_ = 0;
  BuildStats build_stats_;
  std::uint64_t touched_last_ = 0;
};

}  // namespace misenum

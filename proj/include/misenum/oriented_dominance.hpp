#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "misenum/dominance.hpp"
#include "misenum/graph.hpp"
#include "misenum/ordering.hpp"

namespace misenum {

// Flat dominance structure for graphs given with a bounded-out-degree
// orientation.  Vertices of total degree >= delta are "high"; all vertices
// are grouped into classes by their set of high out-neighbors, and each
// class carries two counters:
//
//   nundom(s) = members not in S whose lowdom count is zero, where
//               lowdom(v) counts edges uv with u in S that either point
//               u->v or have a low-degree u;
//   hidom(s)  = members of the shared high out-neighbor set that are in S.
//
// A vertex is undominated exactly when it is not in S, its lowdom count is
// zero, and its class's hidom count is zero, so the query answer is the sum
// of nundom over classes with hidom zero, kept incrementally.
class OrientedDominance : public DominanceTester {
 public:
  struct ClassInfo {
    std::vector<int> outset;   // shared high out-neighbors, sorted
    std::vector<int> members;  // vertices in the class, ascending
    std::int64_t nundom = 0;
    std::int64_t hidom = 0;
  };

  // delta <= 0 selects ceil(n^(1-1/k)) from the orientation's out-degree
  // bound k (clamped to >= 1).  Classes are numbered in first-appearance
  // order over ascending vertex ids, so the layout is deterministic.
  static OrientedDominance build(const Graph& g, const Orientation& o,
                                 int delta = 0);

  void insert(int v) override;
  void erase(int v) override;
  std::int64_t undominated_count() const override { return total_; }

  int delta() const { return delta_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int v) const { return class_of_[static_cast<std::size_t>(v)]; }
  const ClassInfo& class_info(int s) const {
    return classes_[static_cast<std::size_t>(s)];
  }
  int index_size(int q) const {
    return static_cast<int>(index_[static_cast<std::size_t>(q)].size());
  }
  bool contains(int v) const {
    return member_[static_cast<std::size_t>(v)] != 0;
  }

  // Entities (vertices, classes, counters) touched by the last insert/erase;
  // the empirical handle on the n^(1-1/k) update-cost claim.
  std::uint64_t touched_last() const { return touched_last_; }

  // One line per vertex, then one per class, for debugging and golden tests.
  void dump(std::ostream& out) const;

 private:
  OrientedDominance() = default;

  void bump() {
    ++touched_last_;
    if (op_counter) ++*op_counter;
  }
  void nundom_change(int s, std::int64_t d);
  void hidom_incr(int s);
  void hidom_decr(int s);
  void lowdom_incr(int w);
  void lowdom_decr(int w);

  const Graph* g_ = nullptr;
  const Orientation* o_ = nullptr;
  int delta_ = 1;
  std::vector<char> high_;
  std::vector<int> class_of_;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<int>> index_;  // high vertex -> classes listing it
  std::vector<char> member_;
  std::vector<std::int64_t> lowdom_;
  std::int64_t total_ = 0;
  std::uint64_t touched_last_ = 0;
};

}  // namespace misenum

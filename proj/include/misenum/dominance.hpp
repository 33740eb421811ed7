#pragma once

#include <cstdint>

namespace misenum {

// Dynamic dominance oracle: maintains a vertex set S under single-vertex
// insertions and deletions and answers, in O(1), how many vertices are
// undominated (not in S and with no neighbor in S).  Zero undominated
// vertices means S is dominating; an independent dominating set is exactly
// a maximal independent set, which is how the enumeration drivers use it.
//
// insert/erase throw std::invalid_argument on redundant membership changes
// ("already member" / "not a member").
class DominanceTester {
 public:
  virtual ~DominanceTester() = default;
  virtual void insert(int v) = 0;
  virtual void erase(int v) = 0;
  virtual std::int64_t undominated_count() const = 0;

  // When set, implementations add one to the target per elementary internal
  // step (counter change, propagation hop, ...).  Enumeration drivers point
  // this at RunStats::total_ops so tester-internal work feeds the same
  // delay accounting as their own operations.
  std::uint64_t* op_counter = nullptr;
};

}  // namespace misenum

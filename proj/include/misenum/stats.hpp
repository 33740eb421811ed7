#pragma once

#include <cstdint>

namespace misenum {

// Instrumentation shared by the enumeration drivers.  Counters are
// monotonically non-decreasing over a run; total_ops is the unified
// elementary-operation counter used for delay accounting (tester updates,
// counter maintenance, greedy scans, subset generation, viability checks,
// sort comparisons).  Output materialization is not counted: the cost of
// printing a set is inherent to the output size, not to the search.
struct RunStats {
  std::uint64_t sets_emitted = 0;
  std::uint64_t tester_updates = 0;
  std::uint64_t parent_computations = 0;
  std::uint64_t fertility_checks = 0;
  std::uint64_t total_ops = 0;
  std::uint64_t max_inter_output_ops = 0;
  double wall_time_s = 0.0;

  // Delay bookkeeping: ops_at_last_emit tracks the counter value at the
  // previous emission so gaps before the first set, between sets, and after
  // the last set all feed max_inter_output_ops.
  std::uint64_t ops_at_last_emit = 0;

  void note_emit() {
    ++sets_emitted;
    bump_gap();
    ops_at_last_emit = total_ops;
  }
  void finish() { bump_gap(); }

 private:
  void bump_gap() {
    const std::uint64_t gap = total_ops - ops_at_last_emit;
    if (gap > max_inter_output_ops) max_inter_output_ops = gap;
  }
};

}  // namespace misenum

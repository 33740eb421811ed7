#pragma once

#include <vector>

#include "misenum/graph.hpp"

namespace misenum {

// Brute-force references used as ground truth in tests and by --verify.
// Deliberately implemented from first principles (subset backtracking and
// direct scans) so a bug in the main algorithms cannot hide here too.

// All maximal independent sets, each sorted ascending, the list sorted
// lexicographically.  Guarded to n <= 24; throws std::invalid_argument above.
std::vector<std::vector<int>> brute_mis(const Graph& g);

// Number of vertices that are neither in s nor adjacent to a member of s.
int naive_undominated(const Graph& g, const std::vector<int>& s);

// True iff s is independent and dominates every vertex.
bool naive_is_maximal_independent(const Graph& g, const std::vector<int>& s);

// True iff no two members of s are adjacent.
bool naive_is_independent(const Graph& g, const std::vector<int>& s);

}  // namespace misenum

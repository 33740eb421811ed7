#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "misenum/graph.hpp"
#include "misenum/ordering.hpp"
#include "misenum/reverse_search.hpp"
#include "misenum/stats.hpp"

namespace misenum {

// A pair (v, N) — v in the lex-first set, N a nonempty independent subset of
// pool[v] — is viable for the current set S when the generated candidate
// T = (S + N) - neighbors(N) is maximal and re-closing (T + v) - N greedily
// gives back exactly S.  With the maximum degree bounded, both conditions
// depend only on S within distance four of v, so viability can be kept up to
// date under set changes at constant cost per affected vertex.
bool is_fertile_local(const Graph& g, const VertexOrdering& o, const MISet& s,
                      int v, const std::vector<int>& n_set,
                      RunStats* stats = nullptr);

// Table of viable pairs, stored as subset masks over pool positions.
// Entries are never physically deleted: a frame of the search reads only
// vertices no later than last_common, and everything past that gate is
// either rewritten by an update before it becomes visible again or owes its
// validity to S having been restored exactly.
class FertilePairs {
 public:
  bool contains(int v, const std::vector<int>& n_set) const;
  // Pairs at positions <= last_common, ordered by (position of v, mask).
  std::vector<std::pair<int, std::vector<int>>> entries() const;
  int last_common() const { return last_common_; }

 private:
  friend FertilePairs initial_fertile_pairs(const Graph&, const VertexOrdering&,
                                            const MISet&, const CandidatePools&,
                                            RunStats*);
  friend void update_fertile_pairs(FertilePairs&, const Graph&,
                                   const VertexOrdering&, const MISet&,
                                   const std::vector<int>&, int, RunStats*);
  friend class BoundedDegreeEnumerator;

  std::uint64_t mask_of(int v, const std::vector<int>& n_set) const;
  std::vector<int> decode(int v, std::uint64_t mask) const;

  std::vector<std::vector<int>> pool_;           // by vertex, position-sorted
  std::vector<std::vector<std::uint64_t>> independent_masks_;
  std::vector<std::set<std::uint64_t>> table_;   // fertile masks per vertex
  std::vector<int> seq_;                          // pool owners in order
  std::vector<int> pos_;                          // ordering position by vertex
  std::set<int> nonempty_;                        // positions with fertile masks
  int last_common_ = -1;                          // gate, as ordering position
};

// Evaluates every pair of the lex-first set against S = lfmis itself; the
// gate starts at the last member of the lex-first set.
FertilePairs initial_fertile_pairs(const Graph& g, const VertexOrdering& o,
                                   const MISet& lfmis,
                                   const CandidatePools& pools,
                                   RunStats* stats = nullptr);

// After S changed by the symmetric difference `changed`, re-evaluates every
// pair whose vertex lies within distance four of a changed vertex and no
// later than last_common (the new gate position); s is the set after the
// change.
void update_fertile_pairs(FertilePairs& fp, const Graph& g,
                          const VertexOrdering& o, const MISet& s,
                          const std::vector<int>& changed, int last_common,
                          RunStats* stats = nullptr);

struct BoundedOptions {
  // Refuse graphs whose maximum degree exceeds this; the amortized-cost
  // argument needs the bound, correctness aside.
  int max_degree = 4;
  RunStats* stats = nullptr;
  // Assert table-vs-scratch equality, gate correctness, and exact state
  // restoration while running; test-only.
  bool check_invariants = false;
  // Test hook: called once per search node with (depth, viable vertex
  // count at entry).
  std::function<void(int, int)> frame_probe;
};

// Enumerates all maximal independent sets sharing the viable-pair table and
// the current set down the recursion; children are taken in reverse vertex
// order (table keys sorted descending at each node).  Emits the same sets as
// the generic drivers, in its own order.
void enumerate_bounded_degree(const Graph& g, const VertexOrdering& o,
                              const MisCallback& emit,
                              const BoundedOptions& opts = {});

}  // namespace misenum

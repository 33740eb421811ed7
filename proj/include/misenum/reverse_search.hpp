#pragma once

#include <functional>
#include <vector>

#include "misenum/dominance.hpp"
#include "misenum/graph.hpp"
#include "misenum/independence.hpp"
#include "misenum/ordering.hpp"
#include "misenum/stats.hpp"

namespace misenum {

// Vertex set with O(1) membership, used for the sets the enumeration moves
// between.  insert/erase are idempotent; size is maintained.
class MISet {
 public:
  MISet() = default;
  explicit MISet(int n) : in_(static_cast<std::size_t>(n), 0) {}
  MISet(int n, const std::vector<int>& members) : MISet(n) {
    for (int v : members) insert(v);
  }

  int universe_size() const { return static_cast<int>(in_.size()); }
  int size() const { return size_; }
  bool contains(int v) const { return in_[static_cast<std::size_t>(v)] != 0; }
  void insert(int v) {
    auto& f = in_[static_cast<std::size_t>(v)];
    size_ += 1 - f;
    f = 1;
  }
  void erase(int v) {
    auto& f = in_[static_cast<std::size_t>(v)];
    size_ -= f;
    f = 0;
  }
  std::vector<int> to_sorted_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int v = 0; v < universe_size(); ++v)
      if (in_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  }
  bool operator==(const MISet& other) const {
    return in_ == other.in_;
  }

 private:
  std::vector<char> in_;
  int size_ = 0;
};

// The non-members of the lex-first set, partitioned by their earliest
// member neighbor: pool[v] holds, sorted by ordering position, the vertices
// whose first-ordered neighbor inside the lex-first set is v.  seq lists the
// vertices with nonempty pools in ordering order.
struct CandidatePools {
  std::vector<std::vector<int>> pool;
  std::vector<int> seq;
};

using MisCallback = std::function<void(const std::vector<int>&)>;

struct EnumerateOptions {
  RunStats* stats = nullptr;
  // Replace the incremental (counter-based) parent check with a full
  // from-scratch greedy; for differential testing.
  bool slow_parent_check = false;
  // Cross-check both parent paths and assert structural invariants as the
  // search runs; slow, test-only.
  bool check_invariants = false;
};

// Greedy sweep in ordering order: add every vertex compatible with what has
// been added so far.  With an empty base this is the canonical root set;
// throws std::invalid_argument if base is not independent.
MISet lex_first_superset(const Graph& g, const VertexOrdering& o,
                         const MISet& base, RunStats* stats = nullptr);
MISet lex_first_mis(const Graph& g, const VertexOrdering& o,
                    RunStats* stats = nullptr);

CandidatePools compute_pools(const Graph& g, const VertexOrdering& o,
                             const MISet& lfmis);

// The set one step closer to the root: restore the earliest missing member
// v of the lex-first set, drop its neighbors inside s, re-close greedily.
// Throws std::invalid_argument when s is the root itself.
MISet parent_set(const Graph& g, const VertexOrdering& o, const MISet& lfmis,
                 const MISet& s, RunStats* stats = nullptr);

// Streams (N, T) for every nonempty independent N inside pool[v], in
// increasing binary-counter order over pool positions, with
// T = (s + N) - neighbors(N).  Pools wider than 62 vertices are refused
// (the subset counter is a 64-bit word).
void for_each_candidate_child(
    const Graph& g, const VertexOrdering& o, const CandidatePools& pools,
    const MISet& s, int v,
    const std::function<void(const std::vector<int>&, const MISet&)>& cb);

// True iff t is maximal (tester query after moving it from s to t by
// symmetric difference) and the parent of t is s.  The tester must mirror s
// on entry and is restored to s before returning.  The parent check runs on
// the incremental counter path unless opts.slow_parent_check is set.
bool is_child(const Graph& g, const VertexOrdering& o, const MISet& lfmis,
              const MISet& s, const MISet& t, DominanceTester& tester,
              const EnumerateOptions& opts = {});

// Computes lex_first_superset(g, o, base) touching only the candidate
// vertices, which must cover everything addable to base.  counter must
// mirror base on entry and is left mirroring the result.
MISet lex_superset_restricted(const Graph& g, const VertexOrdering& o,
                              const MISet& base,
                              const std::vector<int>& candidates,
                              IndependenceCounter& counter,
                              RunStats* stats = nullptr);

// Depth-first enumeration of all maximal independent sets, rooted at the
// lex-first set.  Children of the current set are generated from the pools
// of its members, scanning the ordering and stopping at the first lex-first
// vertex not present; each emitted set reaches the callback as an ascending
// vertex list.  The tester must mirror the empty set on entry; it is
// returned to that state.  Both drivers emit the identical sequence; the
// nonrecursive one keeps no stack and recovers its position after each
// descent from the parent computation alone.
void enumerate_recursive(const Graph& g, const VertexOrdering& o,
                         DominanceTester& tester, const MisCallback& emit,
                         const EnumerateOptions& opts = {});
void enumerate_nonrecursive(const Graph& g, const VertexOrdering& o,
                            DominanceTester& tester, const MisCallback& emit,
                            const EnumerateOptions& opts = {});

}  // namespace misenum

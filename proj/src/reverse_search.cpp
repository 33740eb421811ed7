#include "misenum/reverse_search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>

namespace misenum {

namespace {

void bump(RunStats* st, std::uint64_t d = 1) {
  if (st) st->total_ops += d;
}

void check_ordering(const Graph& g, const VertexOrdering& o) {
  if (o.size() != g.num_vertices())
    throw std::invalid_argument("ordering does not match graph");
}

// Position of the earliest-ordered vertex of lfmis missing from s, or -1
// when s contains all of lfmis.
int first_missing_position(const VertexOrdering& o, const MISet& lfmis,
                           const MISet& s, RunStats* st) {
  for (int p = 0; p < o.size(); ++p) {
    bump(st);
    const int v = o.vertex_at(p);
    if (lfmis.contains(v) && !s.contains(v)) return p;
  }
  return -1;
}

// (s + {v}) - neighbors(v): the closure seed both parent paths share.
MISet parent_base(const Graph& g, const MISet& s, int v, RunStats* st) {
  MISet base = s;
  bump(st);
  base.insert(v);
  for (int w : g.neighbors(v)) {
    bump(st);
    base.erase(w);
  }
  return base;
}

// Decodes mask over pool positions into n_out, filters non-independent
// subsets, and assembles t_out = (s + N) - neighbors(N).  Counted work: bit
// extraction, pairwise adjacency probes, and the symmetric difference.
bool build_candidate(const Graph& g, const std::vector<int>& pool,
                     const MISet& s, std::uint64_t mask, RunStats* st,
                     std::vector<int>& n_out, MISet& t_out) {
  n_out.clear();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1) {
      bump(st);
      n_out.push_back(pool[i]);
    }
  }
  for (std::size_t i = 0; i < n_out.size(); ++i)
    for (std::size_t j = i + 1; j < n_out.size(); ++j) {
      bump(st);
      if (g.has_edge(n_out[i], n_out[j])) return false;
    }
  t_out = s;
  for (int u : n_out) {
    bump(st);
    t_out.insert(u);
  }
  for (int u : n_out)
    for (int w : g.neighbors(u)) {
      bump(st);
      t_out.erase(w);
    }
  return true;
}

// Applies insert/erase calls moving the tester from one mirrored set to the
// other; every call is a counted tester update.
void move_tester(DominanceTester& tester, const MISet& from, const MISet& to,
                 RunStats* st) {
  const int n = from.universe_size();
  for (int v = 0; v < n; ++v) {
    bump(st);
    if (from.contains(v) && !to.contains(v)) {
      tester.erase(v);
      if (st) ++st->tester_updates;
    }
  }
  for (int v = 0; v < n; ++v) {
    bump(st);
    if (!from.contains(v) && to.contains(v)) {
      tester.insert(v);
      if (st) ++st->tester_updates;
    }
  }
}

void assert_independent(const Graph& g, const MISet& s, const char* what) {
  const auto members = s.to_sorted_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.has_edge(members[i], members[j])) throw std::logic_error(what);
}

}  // namespace

MISet lex_first_superset(const Graph& g, const VertexOrdering& o,
                         const MISet& base, RunStats* stats) {
  check_ordering(g, o);
  MISet result = base;
  for (int p = 0; p < o.size(); ++p) {
    bump(stats);
    const int v = o.vertex_at(p);
    if (base.contains(v)) {
      for (int w : g.neighbors(v)) {
        bump(stats);
        if (result.contains(w) && base.contains(w))
          throw std::invalid_argument("base is not independent");
      }
      continue;
    }
    bool blocked = false;
    for (int w : g.neighbors(v)) {
      bump(stats);
      if (result.contains(w)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) result.insert(v);
  }
  return result;
}

MISet lex_first_mis(const Graph& g, const VertexOrdering& o, RunStats* stats) {
  return lex_first_superset(g, o, MISet(g.num_vertices()), stats);
}

CandidatePools compute_pools(const Graph& g, const VertexOrdering& o,
                             const MISet& lfmis) {
  check_ordering(g, o);
  CandidatePools pools;
  pools.pool.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int p = 0; p < o.size(); ++p) {
    const int w = o.vertex_at(p);
    if (lfmis.contains(w)) continue;
    int best = -1;
    for (int u : g.neighbors(w))
      if (lfmis.contains(u) && (best < 0 || o.position(u) < o.position(best)))
        best = u;
    // Every non-member has a member neighbor because lfmis is maximal.
    pools.pool[static_cast<std::size_t>(best)].push_back(w);
  }
  for (int p = 0; p < o.size(); ++p) {
    const int v = o.vertex_at(p);
    if (!pools.pool[static_cast<std::size_t>(v)].empty())
      pools.seq.push_back(v);
  }
  return pools;
}

MISet parent_set(const Graph& g, const VertexOrdering& o, const MISet& lfmis,
                 const MISet& s, RunStats* stats) {
  check_ordering(g, o);
  const std::uint64_t before = stats ? stats->total_ops : 0;
  const int p = first_missing_position(o, lfmis, s, stats);
  if (p < 0) throw std::invalid_argument("root has no parent");
  const MISet base = parent_base(g, s, o.vertex_at(p), stats);
  MISet result = lex_first_superset(g, o, base, stats);
  if (stats) stats->parent_computations += stats->total_ops - before;
  return result;
}

void for_each_candidate_child(
    const Graph& g, const VertexOrdering& o, const CandidatePools& pools,
    const MISet& s, int v,
    const std::function<void(const std::vector<int>&, const MISet&)>& cb) {
  check_ordering(g, o);
  const auto& pool = pools.pool[static_cast<std::size_t>(v)];
  if (pool.size() > 62)
    throw std::invalid_argument(
        "pool wider than 62 vertices; use a degeneracy ordering");
  std::vector<int> n_set;
  MISet t;
  const std::uint64_t end = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 1; mask < end; ++mask)
    if (build_candidate(g, pool, s, mask, nullptr, n_set, t)) cb(n_set, t);
}

MISet lex_superset_restricted(const Graph& g, const VertexOrdering& o,
                              const MISet& base,
                              const std::vector<int>& candidates,
                              IndependenceCounter& counter, RunStats* stats) {
  check_ordering(g, o);
  std::vector<int> order = candidates;
  std::sort(order.begin(), order.end(), [&o, stats](int a, int b) {
    bump(stats);
    return o.position(a) < o.position(b);
  });
  order.erase(std::unique(order.begin(), order.end()), order.end());
  MISet result = base;
  for (int u : order) {
    bump(stats);
    if (!counter.addable(u)) continue;
    counter.insert(u);
    result.insert(u);
  }
  return result;
}

bool is_child(const Graph& g, const VertexOrdering& o, const MISet& lfmis,
              const MISet& s, const MISet& t, DominanceTester& tester,
              const EnumerateOptions& opts) {
  check_ordering(g, o);
  RunStats* st = opts.stats;
  move_tester(tester, s, t, st);
  bump(st);
  const bool dominating = tester.undominated_count() == 0;

  bool parent_ok = false;
  if (dominating) {
    const std::uint64_t before = st ? st->total_ops : 0;
    const int p = first_missing_position(o, lfmis, t, st);
    if (p >= 0) {
      const int v = o.vertex_at(p);
      const MISet base = parent_base(g, t, v, st);
      bool have_fast = false, fast_ok = false;
      if (!opts.slow_parent_check) {
        // Joiners of the closure all neighbor a dropped vertex, so the
        // greedy only needs to look at neighbors of neighbors of v inside t.
        std::vector<int> cands;
        for (int u : g.neighbors(v)) {
          bump(st);
          if (!t.contains(u)) continue;
          for (int w : g.neighbors(u)) {
            bump(st);
            cands.push_back(w);
          }
        }
        const Orientation orient(g, o);
        IndependenceCounter counter(g, orient);
        counter.op_counter = st ? &st->total_ops : nullptr;
        for (int u = 0; u < g.num_vertices(); ++u) {
          bump(st);
          if (base.contains(u)) counter.insert(u);
        }
        const MISet parent =
            lex_superset_restricted(g, o, base, cands, counter, st);
        bump(st);
        fast_ok = parent == s;
        have_fast = true;
      }
      bool have_slow = false, slow_ok = false;
      if (opts.slow_parent_check || opts.check_invariants) {
        MISet parent = lex_first_superset(g, o, base, st);
        bump(st);
        slow_ok = parent == s;
        have_slow = true;
      }
      if (have_fast && have_slow && fast_ok != slow_ok)
        throw std::logic_error("parent check mismatch");
      parent_ok = have_fast ? fast_ok : slow_ok;
    }
    if (st) st->parent_computations += st->total_ops - before;
  }

  move_tester(tester, t, s, st);
  return dominating && parent_ok;
}

namespace {

// Shared run scaffolding: root set, pools, tester loading/unloading, timing.
struct DriverRun {
  DriverRun(const Graph& g, const VertexOrdering& o, DominanceTester& tester,
            const EnumerateOptions& opts)
      : g_(g), o_(o), tester_(tester), opts_(opts) {
    check_ordering(g, o);
    st = opts.stats ? opts.stats : &local_;
    start_ = std::chrono::steady_clock::now();
    prev_hook_ = tester.op_counter;
    tester.op_counter = &st->total_ops;
    lfmis = lex_first_superset(g, o, MISet(g.num_vertices()), st);
    pools = compute_pools(g, o, lfmis);
    move_tester(tester, MISet(g.num_vertices()), lfmis, st);
    if (opts.check_invariants && tester.undominated_count() != 0)
      throw std::logic_error("tester disagrees on root maximality");
  }

  ~DriverRun() {
    // After a throw the tester no longer mirrors the root set; skip the
    // teardown rather than risk a second throw during unwinding.
    if (std::uncaught_exceptions() == 0) {
      move_tester(tester_, lfmis, MISet(g_.num_vertices()), st);
      st->finish();
      st->wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start_)
              .count();
    }
    tester_.op_counter = prev_hook_;
  }

  const std::vector<int>& pool_at(int v) const {
    const auto& pool = pools.pool[static_cast<std::size_t>(v)];
    if (pool.size() > 62)
      throw std::invalid_argument(
          "pool wider than 62 vertices; use a degeneracy ordering");
    return pool;
  }

  void emit_set(const MisCallback& emit, const MISet& s) const {
    st->note_emit();
    emit(s.to_sorted_vector());
  }

  RunStats* st = nullptr;
  MISet lfmis;
  CandidatePools pools;

 private:
  const Graph& g_;
  const VertexOrdering& o_;
  DominanceTester& tester_;
  const EnumerateOptions& opts_;
  RunStats local_;
  std::uint64_t* prev_hook_ = nullptr;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void enumerate_recursive(const Graph& g, const VertexOrdering& o,
                         DominanceTester& tester, const MisCallback& emit,
                         const EnumerateOptions& opts) {
  DriverRun run(g, o, tester, opts);
  RunStats* st = run.st;
  const int n = g.num_vertices();

  std::vector<int> n_set;
  MISet t;
  const std::function<void(const MISet&)> recurse = [&](const MISet& s) {
    run.emit_set(emit, s);
    for (int p = 0; p < n; ++p) {
      bump(st);
      const int v = o.vertex_at(p);
      if (!run.lfmis.contains(v)) continue;
      if (!s.contains(v)) break;
      const auto& pool = run.pool_at(v);
      if (pool.empty()) continue;
      const std::uint64_t end = std::uint64_t{1} << pool.size();
      for (std::uint64_t mask = 1; mask < end; ++mask) {
        bump(st);
        if (!build_candidate(g, pool, s, mask, st, n_set, t)) continue;
        if (opts.check_invariants)
          assert_independent(g, t, "candidate set not independent");
        if (is_child(g, o, run.lfmis, s, t, tester, opts)) {
          // Deeper frames reuse the shared scratch, so the accepted set
          // needs its own storage for the restore after the descent.
          const MISet child = t;
          move_tester(tester, s, child, st);
          recurse(child);
          move_tester(tester, child, s, st);
        }
      }
    }
  };
  recurse(run.lfmis);
}

void enumerate_nonrecursive(const Graph& g, const VertexOrdering& o,
                            DominanceTester& tester, const MisCallback& emit,
                            const EnumerateOptions& opts) {
  DriverRun run(g, o, tester, opts);
  RunStats* st = run.st;
  const int n = g.num_vertices();

  MISet s = run.lfmis;
  run.emit_set(emit, s);
  int pos = 0;
  std::uint64_t mask = 0;
  std::vector<int> n_set;
  MISet t;
  for (;;) {
    while (pos < n) {
      bump(st);
      const int v = o.vertex_at(pos);
      if (!run.lfmis.contains(v)) {
        ++pos;
        mask = 0;
        continue;
      }
      if (!s.contains(v)) {
        pos = n;
        break;
      }
      const auto& pool = run.pool_at(v);
      ++mask;
      if (pool.empty() || mask >= std::uint64_t{1} << pool.size()) {
        ++pos;
        mask = 0;
        continue;
      }
      bump(st);
      if (!build_candidate(g, pool, s, mask, st, n_set, t)) continue;
      if (opts.check_invariants)
        assert_independent(g, t, "candidate set not independent");
      if (is_child(g, o, run.lfmis, s, t, tester, opts)) {
        move_tester(tester, s, t, st);
        s = t;
        run.emit_set(emit, s);
        pos = 0;
        mask = 0;
      }
    }
    bump(st);
    if (s == run.lfmis) break;

    // Climb one level: the parent recomputation tells us both where the
    // descent happened (first pool-owning vertex regained) and which subset
    // was used (the members given up), so the scan resumes exactly after
    // the move that produced s.
    MISet parent = parent_set(g, o, run.lfmis, s, st);
    int rv = -1;
    for (int q : run.pools.seq) {
      bump(st);
      if (parent.contains(q) && !s.contains(q)) {
        rv = q;
        break;
      }
    }
    if (rv < 0) throw std::logic_error("resume vertex not found");
    const auto& pool = run.pool_at(rv);
    std::uint64_t m = 0;
    int dropped = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      bump(st);
      if (s.contains(pool[i]) && !parent.contains(pool[i])) {
        m |= std::uint64_t{1} << i;
        ++dropped;
      }
    }
    if (opts.check_invariants) {
      int want = 0;
      for (int u = 0; u < n; ++u)
        if (s.contains(u) && !parent.contains(u)) ++want;
      if (want != dropped)
        throw std::logic_error("resume subset not inside pool");
    }
    move_tester(tester, s, parent, st);
    s = std::move(parent);
    pos = o.position(rv);
    mask = m;
  }
}

}  // namespace misenum

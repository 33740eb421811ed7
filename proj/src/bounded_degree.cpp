#include "misenum/bounded_degree.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace misenum {

namespace {

void bump(RunStats* st, std::uint64_t d = 1) {
  if (st) st->total_ops += d;
}

// Vertices within the given distance of any changed vertex, without touching
// the rest of the graph: layered expansion over a sorted visited set.
std::vector<int> vicinity(const Graph& g, const std::vector<int>& changed,
                          int radius, RunStats* st) {
  std::vector<int> visited = changed;
  std::sort(visited.begin(), visited.end());
  visited.erase(std::unique(visited.begin(), visited.end()), visited.end());
  std::vector<int> frontier = visited;
  for (int step = 0; step < radius && !frontier.empty(); ++step) {
    std::vector<int> next;
    for (int u : frontier)
      for (int w : g.neighbors(u)) {
        bump(st);
        if (!std::binary_search(visited.begin(), visited.end(), w))
          next.push_back(w);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<int> merged;
    std::merge(visited.begin(), visited.end(), next.begin(), next.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    visited = std::move(merged);
    frontier = std::move(next);
  }
  return visited;
}

}  // namespace

bool is_fertile_local(const Graph& g, const VertexOrdering& o, const MISet& s,
                      int v, const std::vector<int>& n_set, RunStats* stats) {
  if (stats) ++stats->fertility_checks;
  bump(stats);
  if (!s.contains(v)) return false;

  // Neighborhood of N; removals from S and the blocked zone of T.
  std::vector<int> nn;
  for (int u : n_set)
    for (int w : g.neighbors(u)) {
      bump(stats);
      nn.push_back(w);
    }
  std::sort(nn.begin(), nn.end());
  nn.erase(std::unique(nn.begin(), nn.end()), nn.end());
  auto in_nn = [&nn](int x) {
    return std::binary_search(nn.begin(), nn.end(), x);
  };
  auto in_n = [&n_set](int x) {
    return std::find(n_set.begin(), n_set.end(), x) != n_set.end();
  };
  auto in_t = [&](int x) {
    return (s.contains(x) || in_n(x)) && !in_nn(x);
  };

  // Condition 1: nothing within distance three of v can join T.  With S
  // maximal, any joinable vertex either left S (distance <= 2) or neighbors
  // a vertex that left (distance <= 3), so this radius is exhaustive.
  for (int u : ball(g, v, 3)) {
    bump(stats);
    if (in_t(u)) continue;
    bool blocked = false;
    for (int w : g.neighbors(u)) {
      bump(stats);
      if (in_t(w)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }

  // Condition 2: re-closing (T + v) - N must restore S exactly.  Given
  // condition 1, every joiner neighbors N, so candidates within distance two
  // of v cover the greedy; it must add back exactly the other removals.
  int removed = 0;
  for (int w : nn) {
    bump(stats);
    if (s.contains(w) && w != v) ++removed;
  }
  auto in_base = [&](int x) {
    return s.contains(x) && (x == v || !in_nn(x));
  };
  std::vector<int> order = nn;
  std::sort(order.begin(), order.end(), [&o, stats](int a, int b) {
    bump(stats);
    return o.position(a) < o.position(b);
  });
  std::vector<int> adds;
  auto in_cur = [&](int x) {
    return in_base(x) ||
           std::find(adds.begin(), adds.end(), x) != adds.end();
  };
  for (int u : order) {
    bump(stats);
    if (in_cur(u)) continue;
    bool blocked = false;
    for (int w : g.neighbors(u)) {
      bump(stats);
      if (in_cur(w)) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    if (!s.contains(u)) return false;
    adds.push_back(u);
  }
  return static_cast<int>(adds.size()) == removed;
}

std::uint64_t FertilePairs::mask_of(int v, const std::vector<int>& n_set) const {
  const auto& pool = pool_[static_cast<std::size_t>(v)];
  std::uint64_t mask = 0;
  for (int u : n_set) {
    const auto it = std::find(pool.begin(), pool.end(), u);
    if (it == pool.end()) return ~std::uint64_t{0};
    mask |= std::uint64_t{1} << (it - pool.begin());
  }
  return mask;
}

std::vector<int> FertilePairs::decode(int v, std::uint64_t mask) const {
  const auto& pool = pool_[static_cast<std::size_t>(v)];
  std::vector<int> n_set;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (mask >> i & 1) n_set.push_back(pool[i]);
  return n_set;
}

bool FertilePairs::contains(int v, const std::vector<int>& n_set) const {
  if (v < 0 || v >= static_cast<int>(pool_.size())) return false;
  const std::uint64_t mask = mask_of(v, n_set);
  if (mask == ~std::uint64_t{0}) return false;
  return table_[static_cast<std::size_t>(v)].count(mask) != 0;
}

std::vector<std::pair<int, std::vector<int>>> FertilePairs::entries() const {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int v : seq_) {
    if (pos_[static_cast<std::size_t>(v)] > last_common_) continue;
    for (std::uint64_t mask : table_[static_cast<std::size_t>(v)])
      out.emplace_back(v, decode(v, mask));
  }
  return out;
}

FertilePairs initial_fertile_pairs(const Graph& g, const VertexOrdering& o,
                                   const MISet& lfmis,
                                   const CandidatePools& pools,
                                   RunStats* stats) {
  const int n = g.num_vertices();
  FertilePairs fp;
  fp.pool_ = pools.pool;
  fp.seq_ = pools.seq;
  fp.pos_.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    fp.pos_[static_cast<std::size_t>(v)] = o.position(v);
  fp.table_.assign(static_cast<std::size_t>(n), {});
  fp.independent_masks_.assign(static_cast<std::size_t>(n), {});
  for (int v : fp.seq_) {
    const auto& pool = fp.pool_[static_cast<std::size_t>(v)];
    if (pool.size() > 62)
      throw std::invalid_argument(
          "pool wider than 62 vertices; use a degeneracy ordering");
    const std::uint64_t end = std::uint64_t{1} << pool.size();
    for (std::uint64_t mask = 1; mask < end; ++mask) {
      bump(stats);
      const auto n_set = fp.decode(v, mask);
      bool independent = true;
      for (std::size_t i = 0; i < n_set.size() && independent; ++i)
        for (std::size_t j = i + 1; j < n_set.size(); ++j) {
          bump(stats);
          if (g.has_edge(n_set[i], n_set[j])) {
            independent = false;
            break;
          }
        }
      if (independent)
        fp.independent_masks_[static_cast<std::size_t>(v)].push_back(mask);
    }
  }
  for (int v : fp.seq_) {
    for (std::uint64_t mask : fp.independent_masks_[static_cast<std::size_t>(v)])
      if (is_fertile_local(g, o, lfmis, v, fp.decode(v, mask), stats))
        fp.table_[static_cast<std::size_t>(v)].insert(mask);
    if (!fp.table_[static_cast<std::size_t>(v)].empty())
      fp.nonempty_.insert(fp.pos_[static_cast<std::size_t>(v)]);
  }
  fp.last_common_ = -1;
  for (int v = 0; v < n; ++v)
    if (lfmis.contains(v))
      fp.last_common_ = std::max(fp.last_common_, o.position(v));
  return fp;
}

void update_fertile_pairs(FertilePairs& fp, const Graph& g,
                          const VertexOrdering& o, const MISet& s,
                          const std::vector<int>& changed, int last_common,
                          RunStats* stats) {
  fp.last_common_ = last_common;
  if (changed.empty()) return;
  for (int w : vicinity(g, changed, 4, stats)) {
    bump(stats);
    auto& tbl = fp.table_[static_cast<std::size_t>(w)];
    const auto& masks = fp.independent_masks_[static_cast<std::size_t>(w)];
    if (masks.empty()) continue;
    if (fp.pos_[static_cast<std::size_t>(w)] > last_common) continue;
    for (std::uint64_t mask : masks) {
      bump(stats);
      if (is_fertile_local(g, o, s, w, fp.decode(w, mask), stats))
        tbl.insert(mask);
      else
        tbl.erase(mask);
    }
    if (tbl.empty())
      fp.nonempty_.erase(fp.pos_[static_cast<std::size_t>(w)]);
    else
      fp.nonempty_.insert(fp.pos_[static_cast<std::size_t>(w)]);
  }
}

namespace {

// Last matching position of the ordered member lists of lfmis and s, for the
// gate assertion in check mode.
int true_last_common(const VertexOrdering& o, const MISet& lfmis,
                     const MISet& s) {
  int last = -1;
  for (int p = 0; p < o.size(); ++p) {
    const int v = o.vertex_at(p);
    const bool a = lfmis.contains(v), b = s.contains(v);
    if (!a && !b) continue;
    if (a && b) {
      last = p;
      continue;
    }
    break;
  }
  return last;
}

}  // namespace

// Named (rather than file-local) for the friendship that grants table access.
struct BoundedDegreeEnumerator {
  const Graph& g;
  const VertexOrdering& o;
  const MisCallback& emit;
  const BoundedOptions& opts;
  RunStats* st;
  MISet lfmis;
  MISet s;
  FertilePairs fp;
  std::vector<int> prev_member_pos;  // by position: previous lfmis position

  void check_tables() const {
    for (int v : fp.seq_) {
      if (fp.pos_[static_cast<std::size_t>(v)] > fp.last_common_) continue;
      for (std::uint64_t mask :
           fp.independent_masks_[static_cast<std::size_t>(v)]) {
        const bool want = is_fertile_local(g, o, s, v, fp.decode(v, mask));
        const bool have =
            fp.table_[static_cast<std::size_t>(v)].count(mask) != 0;
        if (want != have)
          throw std::logic_error("fertile table out of sync");
      }
    }
  }

  void recurse(int depth) {
    st->note_emit();
    emit(s.to_sorted_vector());
    if (opts.check_invariants) {
      if (true_last_common(o, lfmis, s) != fp.last_common_)
        throw std::logic_error("stale common-prefix gate");
      check_tables();
    }

    // Keys present now, taken in reverse vertex order; pairs appearing for
    // later vertices during the loop belong to deeper levels and stay behind
    // the gate.
    std::vector<int> keys;
    for (int p : fp.nonempty_) {
      bump(st);
      if (p > fp.last_common_) break;
      keys.push_back(o.vertex_at(p));
    }
    std::sort(keys.begin(), keys.end(), [this](int a, int b) {
      bump(st);
      return fp.pos_[static_cast<std::size_t>(a)] >
             fp.pos_[static_cast<std::size_t>(b)];
    });
    if (opts.frame_probe) opts.frame_probe(depth, static_cast<int>(keys.size()));

    for (int v : keys) {
      const int vpos = fp.pos_[static_cast<std::size_t>(v)];
      const int gate = prev_member_pos[static_cast<std::size_t>(vpos)];
      const std::vector<std::uint64_t> masks(
          fp.table_[static_cast<std::size_t>(v)].begin(),
          fp.table_[static_cast<std::size_t>(v)].end());
      for (std::uint64_t mask : masks) {
        bump(st);
        const auto n_set = fp.decode(v, mask);
        // Move to the child: drop the dominated members, add N.
        std::vector<int> drops;
        for (int u : n_set)
          for (int w : g.neighbors(u)) {
            bump(st);
            if (s.contains(w)) drops.push_back(w);
          }
        std::sort(drops.begin(), drops.end());
        drops.erase(std::unique(drops.begin(), drops.end()), drops.end());
        std::vector<int> changed = drops;
        changed.insert(changed.end(), n_set.begin(), n_set.end());

        MISet saved;
        if (opts.check_invariants) saved = s;

        for (int w : drops) {
          bump(st);
          s.erase(w);
        }
        for (int u : n_set) {
          bump(st);
          s.insert(u);
        }
        update_fertile_pairs(fp, g, o, s, changed, gate, st);
        recurse(depth + 1);
        for (int u : n_set) {
          bump(st);
          s.erase(u);
        }
        for (int w : drops) {
          bump(st);
          s.insert(w);
        }
        update_fertile_pairs(fp, g, o, s, changed, gate, st);
        if (opts.check_invariants && !(saved == s))
          throw std::logic_error("set not restored after descent");
      }
    }
  }
};

void enumerate_bounded_degree(const Graph& g, const VertexOrdering& o,
                              const MisCallback& emit,
                              const BoundedOptions& opts) {
  if (o.size() != g.num_vertices())
    throw std::invalid_argument("ordering does not match graph");
  if (g.max_degree() > opts.max_degree)
    throw std::invalid_argument(
        "max degree " + std::to_string(g.max_degree()) + " exceeds bound " +
        std::to_string(opts.max_degree) + "; use the generic enumerator");
  RunStats local;
  RunStats* st = opts.stats ? opts.stats : &local;
  const auto start = std::chrono::steady_clock::now();

  const MISet lfmis = lex_first_superset(g, o, MISet(g.num_vertices()), st);
  const CandidatePools pools = compute_pools(g, o, lfmis);
  FertilePairs fp = initial_fertile_pairs(g, o, lfmis, pools, st);

  // Previous lex-first member strictly before each position, as the gate for
  // descents happening at that position.
  std::vector<int> prev_member_pos(static_cast<std::size_t>(o.size()), -1);
  int last_seen = -1;
  for (int p = 0; p < o.size(); ++p) {
    prev_member_pos[static_cast<std::size_t>(p)] = last_seen;
    if (lfmis.contains(o.vertex_at(p))) last_seen = p;
  }

  BoundedDegreeEnumerator run{g, o, emit, opts, st, lfmis, lfmis,
                              std::move(fp), std::move(prev_member_pos)};
  run.recurse(0);
  st->finish();
  st->wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
}

}  // namespace misenum

#include "misenum/hierarchical_dominance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace misenum {

namespace {

// One level of the shrinking graph sequence: node ids (ascending) with their
// adjacency lists, also as ids.
struct LevelGraph {
  std::vector<int> ids;
  std::vector<std::vector<int>> adj;  // parallel to ids
};

}  // namespace

HierarchicalDominance HierarchicalDominance::build(const Graph& g, int delta) {
  if (delta < 2) throw std::invalid_argument("delta must be at least 2");
  const int n = g.num_vertices();

  HierarchicalDominance ds;
  ds.n_ = n;
  ds.kind_.assign(static_cast<std::size_t>(n), 0);
  ds.level_.assign(static_cast<std::size_t>(n), 0);
  ds.sv_.assign(static_cast<std::size_t>(n), -1);
  ds.nbr_.resize(static_cast<std::size_t>(n));
  ds.member_.assign(static_cast<std::size_t>(n), 0);
  ds.max_delta_ = delta;
  if (n == 0) return ds;

  LevelGraph cur;
  cur.ids.resize(static_cast<std::size_t>(n));
  std::iota(cur.ids.begin(), cur.ids.end(), 0);
  cur.adj.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    cur.adj[static_cast<std::size_t>(v)].assign(nbrs.begin(), nbrs.end());
  }

  int level = 0;
  while (!(cur.ids.size() == 1 &&
           ds.kind_[static_cast<std::size_t>(cur.ids[0])] == 1)) {
    ++level;
    const int before = static_cast<int>(cur.ids.size());

    // Split into high-degree survivors and the rest; a level that does not
    // shrink enough is retried with the threshold doubled, which always
    // terminates because eventually no vertex is high and a single class
    // remains.
    std::vector<std::size_t> high_idx, rest_idx;
    std::vector<std::vector<int>> keys;       // per class, sorted member ids
    std::vector<std::vector<std::size_t>> class_members;  // local indices
    for (;;) {
      high_idx.clear();
      rest_idx.clear();
      std::vector<char> is_high(cur.ids.size(), 0);
      for (std::size_t i = 0; i < cur.ids.size(); ++i) {
        if (static_cast<int>(cur.adj[i].size()) >= delta) {
          is_high[i] = 1;
          high_idx.push_back(i);
        } else {
          rest_idx.push_back(i);
        }
      }
      keys.clear();
      class_members.clear();
      std::map<std::vector<int>, int> key_to_class;
      for (std::size_t i : rest_idx) {
        std::vector<int> key;
        for (int w : cur.adj[i]) key.push_back(w);
        // Adjacency lists are id-sorted; keep only high neighbors.
        std::erase_if(key, [&](int w) {
          auto it = std::lower_bound(cur.ids.begin(), cur.ids.end(), w);
          return !is_high[static_cast<std::size_t>(it - cur.ids.begin())];
        });
        auto [it, fresh] = key_to_class.try_emplace(
            std::move(key), static_cast<int>(keys.size()));
        if (fresh) {
          keys.push_back(it->first);
          class_members.emplace_back();
        }
        class_members[static_cast<std::size_t>(it->second)].push_back(i);
      }
      const int q_size = static_cast<int>(high_idx.size());
      const int classes = static_cast<int>(keys.size());
      const int after = q_size + classes;
      const bool shrinks = before < 2 || 10 * after <= 9 * before;
      ds.build_stats_.attempts.push_back(
          {level, before, q_size, classes, delta, shrinks});
      if (shrinks) break;
      delta *= 2;
      ds.max_delta_ = delta;
    }

    // Original vertices leaving at this step keep their current adjacency as
    // nbr; that list is what updates walk.
    for (std::size_t i : rest_idx) {
      const int id = cur.ids[i];
      if (ds.kind_[static_cast<std::size_t>(id)] == 0)
        ds.nbr_[static_cast<std::size_t>(id)] = cur.adj[i];
    }

    // One node per class: reuse a contained supervertex of equal degree
    // (there is at most one; ties broken by smallest id defensively),
    // otherwise mint a fresh one.
    std::vector<int> reps(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) {
      int rep = -1;
      for (std::size_t i : class_members[c]) {
        const int id = cur.ids[i];
        if (ds.kind_[static_cast<std::size_t>(id)] == 1 &&
            cur.adj[i].size() == keys[c].size() && (rep < 0 || id < rep))
          rep = id;
      }
      if (rep < 0) {
        rep = static_cast<int>(ds.kind_.size());
        ds.kind_.push_back(1);
        ds.level_.push_back(level);
        ds.sv_.push_back(-1);
      } else {
        ds.level_[static_cast<std::size_t>(rep)] = level;
      }
      reps[c] = rep;
      for (std::size_t i : class_members[c]) {
        const int id = cur.ids[i];
        if (id != rep) ds.sv_[static_cast<std::size_t>(id)] = rep;
      }
    }

    // Assemble the next graph: survivors keep their mutual edges, each class
    // node connects to its shared high neighborhood.
    LevelGraph next;
    next.ids.reserve(high_idx.size() + reps.size());
    for (std::size_t i : high_idx) next.ids.push_back(cur.ids[i]);
    for (int rep : reps) next.ids.push_back(rep);
    std::sort(next.ids.begin(), next.ids.end());
    next.adj.assign(next.ids.size(), {});
    auto local = [&next](int id) {
      return static_cast<std::size_t>(
          std::lower_bound(next.ids.begin(), next.ids.end(), id) -
          next.ids.begin());
    };
    std::vector<char> survives(ds.kind_.size(), 0);
    for (std::size_t i : high_idx) {
      survives[static_cast<std::size_t>(cur.ids[i])] = 1;
      ds.level_[static_cast<std::size_t>(cur.ids[i])] = level;
    }
    for (std::size_t i : high_idx) {
      const int u = cur.ids[i];
      for (int w : cur.adj[i])
        if (survives[static_cast<std::size_t>(w)])
          next.adj[local(u)].push_back(w);
    }
    for (std::size_t c = 0; c < keys.size(); ++c) {
      for (int h : keys[c]) {
        next.adj[local(reps[c])].push_back(h);
        next.adj[local(h)].push_back(reps[c]);
      }
    }
    for (auto& lst : next.adj) std::sort(lst.begin(), lst.end());
    cur = std::move(next);
  }

  ds.root_ = cur.ids[0];
  ds.build_stats_.levels = level;
  ds.build_stats_.total_nodes = static_cast<int>(ds.kind_.size());

  // Counter baseline for the empty set: every original vertex undominated,
  // sums pushed up the parent chains (no blocking yet, all nadj zero).
  ds.nadj_.assign(ds.kind_.size(), 0);
  ds.undom_.assign(ds.kind_.size(), 0);
  std::vector<int> order(ds.kind_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&ds](int a, int b) {
    return ds.level_[static_cast<std::size_t>(a)] <
           ds.level_[static_cast<std::size_t>(b)];
  });
  for (int x : order) {
    if (ds.kind_[static_cast<std::size_t>(x)] == 0)
      ds.undom_[static_cast<std::size_t>(x)] += 1;
    if (x != ds.root_)
      ds.undom_[static_cast<std::size_t>(ds.sv_[static_cast<std::size_t>(x)])] +=
          ds.undom_[static_cast<std::size_t>(x)];
  }
  return ds;
}

std::int64_t HierarchicalDominance::undominated_count() const {
  return root_ < 0 ? 0 : undom_[static_cast<std::size_t>(root_)];
}

void HierarchicalDominance::propagate(int x, std::int64_t d) {
  for (;;) {
    bump();
    undom_[static_cast<std::size_t>(x)] += d;
    if (x == root_ || nadj_[static_cast<std::size_t>(x)] != 0) return;
    x = sv_[static_cast<std::size_t>(x)];
  }
}

void HierarchicalDominance::incr_nadj(int w) {
  bump();
  if (w != root_ && nadj_[static_cast<std::size_t>(w)] == 0 &&
      undom_[static_cast<std::size_t>(w)] != 0)
    propagate(sv_[static_cast<std::size_t>(w)],
              -undom_[static_cast<std::size_t>(w)]);
  ++nadj_[static_cast<std::size_t>(w)];
}

void HierarchicalDominance::decr_nadj(int w) {
  bump();
  --nadj_[static_cast<std::size_t>(w)];
  if (w != root_ && nadj_[static_cast<std::size_t>(w)] == 0 &&
      undom_[static_cast<std::size_t>(w)] != 0)
    propagate(sv_[static_cast<std::size_t>(w)],
              +undom_[static_cast<std::size_t>(w)]);
}

void HierarchicalDominance::insert(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  auto& f = member_[static_cast<std::size_t>(v)];
  if (f) throw std::invalid_argument("already member");
  touched_last_ = 0;
  f = 1;
  propagate(v, -1);
  for (int w : nbr_[static_cast<std::size_t>(v)]) incr_nadj(w);
}

void HierarchicalDominance::erase(int v) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  auto& f = member_[static_cast<std::size_t>(v)];
  if (!f) throw std::invalid_argument("not a member");
  touched_last_ = 0;
  f = 0;
  propagate(v, +1);
  for (int w : nbr_[static_cast<std::size_t>(v)]) decr_nadj(w);
}

std::uint64_t HierarchicalDominance::state_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (char c : member_) mix(static_cast<std::uint64_t>(c));
  for (std::int64_t x : nadj_) mix(static_cast<std::uint64_t>(x));
  for (std::int64_t x : undom_) mix(static_cast<std::uint64_t>(x));
  return h;
}

void HierarchicalDominance::dump(std::ostream& out) const {
  for (int x = 0; x < num_nodes(); ++x) {
    out << x << ' '
        << (kind_[static_cast<std::size_t>(x)] ? "supervertex" : "vertex")
        << ' ' << level_[static_cast<std::size_t>(x)] << ' ';
    if (x == root_)
      out << '-';
    else
      out << sv_[static_cast<std::size_t>(x)];
    out << ' ' << nadj_[static_cast<std::size_t>(x)] << ' '
        << undom_[static_cast<std::size_t>(x)] << "\n";
  }
}

}  // namespace misenum

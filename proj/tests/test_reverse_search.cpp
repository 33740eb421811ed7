#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "doctest.h"
#include "misenum/graph.hpp"
#include "misenum/hierarchical_dominance.hpp"
#include "misenum/oracle.hpp"
#include "misenum/ordering.hpp"
#include "misenum/oriented_dominance.hpp"
#include "misenum/reverse_search.hpp"
#include "tools/generators.hpp"

using namespace misenum;

using SetList = std::vector<std::vector<int>>;

namespace {

Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
Graph c5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
Graph k3() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

enum class Tester { minor, sparse };

SetList run_enum(const Graph& g, const VertexOrdering& o, Tester which,
                 bool recursive, const EnumerateOptions& opts = {}) {
  SetList out;
  const MisCallback emit = [&out](const std::vector<int>& s) {
    out.push_back(s);
  };
  const auto driver = recursive ? enumerate_recursive : enumerate_nonrecursive;
  if (which == Tester::minor) {
    auto tester = HierarchicalDominance::build(g, 16);
    driver(g, o, tester, emit, opts);
    CHECK(tester.undominated_count() == g.num_vertices());
  } else {
    const Orientation orient(g, o);
    auto tester = OrientedDominance::build(g, orient);
    driver(g, o, tester, emit, opts);
    CHECK(tester.undominated_count() == g.num_vertices());
  }
  return out;
}

MISet set_of(int n, const std::vector<int>& members) {
  return MISet(n, members);
}

}  // namespace

TEST_CASE("lex-first supersets by greedy sweep") {
  const Graph g = p4();
  const auto o = VertexOrdering::identity(4);
  CHECK(lex_first_mis(g, o).to_sorted_vector() == std::vector<int>{0, 2});
  CHECK(lex_first_superset(g, o, set_of(4, {})).to_sorted_vector() ==
        std::vector<int>{0, 2});
  CHECK(lex_first_superset(g, o, set_of(4, {0, 3})).to_sorted_vector() ==
        std::vector<int>{0, 3});
  CHECK(lex_first_superset(g, o, set_of(4, {3})).to_sorted_vector() ==
        std::vector<int>{0, 3});
  CHECK(lex_first_superset(g, o, set_of(4, {1})).to_sorted_vector() ==
        std::vector<int>{1, 3});
  CHECK_THROWS_AS(lex_first_superset(g, o, set_of(4, {0, 1})),
                  std::invalid_argument);

  const Graph edgeless(3, {});
  CHECK(lex_first_mis(edgeless, VertexOrdering::identity(3))
            .to_sorted_vector() == std::vector<int>{0, 1, 2});

  // Orderings change which set is lex-first.
  const VertexOrdering rev({3, 2, 1, 0});
  CHECK(lex_first_mis(g, rev).to_sorted_vector() == std::vector<int>{1, 3});
}

TEST_CASE("lex-first set is minimal in position order") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Graph g = random_graph(9, 30, seed);
    const auto [o, k] = degeneracy_ordering(g);
    const MISet lfmis = lex_first_mis(g, o);
    auto positions = [&o](const std::vector<int>& s) {
      std::vector<int> p;
      for (int v : s) p.push_back(o.position(v));
      std::sort(p.begin(), p.end());
      return p;
    };
    const auto root = positions(lfmis.to_sorted_vector());
    for (const auto& s : brute_mis(g)) {
      if (s == lfmis.to_sorted_vector()) continue;
      CHECK(root < positions(s));
    }
  }
}

TEST_CASE("pools partition the non-members by first member neighbor") {
  const Graph g = c5();
  const auto o = VertexOrdering::identity(5);
  const MISet lfmis = lex_first_mis(g, o);
  const CandidatePools pools = compute_pools(g, o, lfmis);
  CHECK(pools.seq == std::vector<int>{0, 2});
  CHECK(pools.pool[0] == std::vector<int>{1, 4});
  CHECK(pools.pool[2] == std::vector<int>{3});
  CHECK(pools.pool[1].empty());

  const Graph path = p4();
  const auto op = VertexOrdering::identity(4);
  const CandidatePools pp = compute_pools(path, op, lex_first_mis(path, op));
  CHECK(pp.seq == std::vector<int>{0, 2});
  CHECK(pp.pool[0] == std::vector<int>{1});
  CHECK(pp.pool[2] == std::vector<int>{3});

  SUBCASE("pools cover exactly the non-members") {
    for (std::uint64_t seed = 2; seed <= 10; ++seed) {
      const Graph rg = random_graph(11, 25, seed);
      const auto [ord, k] = degeneracy_ordering(rg);
      const MISet root = lex_first_mis(rg, ord);
      const CandidatePools rp = compute_pools(rg, ord, root);
      std::vector<int> covered;
      for (int v = 0; v < 11; ++v) {
        for (int u : rp.pool[static_cast<std::size_t>(v)]) {
          covered.push_back(u);
          // The owner is the earliest-positioned root neighbor of u.
          int earliest = -1;
          for (int w : rg.neighbors(u))
            if (root.contains(w) &&
                (earliest < 0 || ord.position(w) < ord.position(earliest)))
              earliest = w;
          CHECK(earliest == v);
        }
        if (!rp.pool[static_cast<std::size_t>(v)].empty())
          CHECK(root.contains(v));
      }
      std::sort(covered.begin(), covered.end());
      std::vector<int> outside;
      for (int v = 0; v < 11; ++v)
        if (!root.contains(v)) outside.push_back(v);
      CHECK(covered == outside);
    }
  }
}

TEST_CASE("parent restores the earliest missing root vertex") {
  const Graph g = p4();
  const auto o = VertexOrdering::identity(4);
  const MISet lfmis = lex_first_mis(g, o);
  CHECK(parent_set(g, o, lfmis, set_of(4, {1, 3})).to_sorted_vector() ==
        std::vector<int>{0, 3});
  CHECK(parent_set(g, o, lfmis, set_of(4, {0, 3})).to_sorted_vector() ==
        std::vector<int>{0, 2});
  CHECK_THROWS_AS(parent_set(g, o, lfmis, set_of(4, {0, 2})),
                  std::invalid_argument);

  const Graph c = c5();
  const auto oc = VertexOrdering::identity(5);
  const MISet lc = lex_first_mis(c, oc);
  CHECK(parent_set(c, oc, lc, set_of(5, {1, 4})).to_sorted_vector() ==
        std::vector<int>{0, 2});
  CHECK(parent_set(c, oc, lc, set_of(5, {2, 4})).to_sorted_vector() ==
        std::vector<int>{0, 2});
  CHECK(parent_set(c, oc, lc, set_of(5, {1, 3})).to_sorted_vector() ==
        std::vector<int>{0, 3});
}

TEST_CASE("parent chains reach the root within its size") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = random_graph(12, 28, seed);
    const auto [o, k] = degeneracy_ordering(g);
    const MISet lfmis = lex_first_mis(g, o);
    for (const auto& members : brute_mis(g)) {
      MISet s = set_of(12, members);
      int steps = 0;
      while (!(s == lfmis)) {
        s = parent_set(g, o, lfmis, s);
        ++steps;
        REQUIRE(steps <= lfmis.size());
      }
    }
  }
}

TEST_CASE("candidate children enumerate pool subsets in counter order") {
  const Graph g = c5();
  const auto o = VertexOrdering::identity(5);
  const MISet lfmis = lex_first_mis(g, o);
  const CandidatePools pools = compute_pools(g, o, lfmis);

  std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
  for_each_candidate_child(g, o, pools, lfmis, 0,
                           [&](const std::vector<int>& n, const MISet& t) {
                             seen.push_back({n, t.to_sorted_vector()});
                           });
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == std::pair(std::vector<int>{1}, std::vector<int>{1}));
  CHECK(seen[1] == std::pair(std::vector<int>{4}, std::vector<int>{2, 4}));
  CHECK(seen[2] == std::pair(std::vector<int>{1, 4}, std::vector<int>{1, 4}));

  seen.clear();
  for_each_candidate_child(g, o, pools, lfmis, 2,
                           [&](const std::vector<int>& n, const MISet& t) {
                             seen.push_back({n, t.to_sorted_vector()});
                           });
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] == std::pair(std::vector<int>{3}, std::vector<int>{0, 3}));

  SUBCASE("adjacent pool pairs are filtered") {
    const Graph k = k3();
    const auto ok = VertexOrdering::identity(3);
    const MISet lk = lex_first_mis(k, ok);  // {0}
    const CandidatePools pk = compute_pools(k, ok, lk);
    CHECK(pk.pool[0] == std::vector<int>{1, 2});
    std::vector<std::vector<int>> ns;
    for_each_candidate_child(k, ok, pk, lk, 0,
                             [&](const std::vector<int>& n, const MISet&) {
                               ns.push_back(n);
                             });
    CHECK(ns == SetList{{1}, {2}});  // {1,2} is not independent
  }
}

TEST_CASE("restricted closure agrees with the full greedy") {
  const Graph g = p4();
  const auto o = VertexOrdering::identity(4);
  const Orientation orient(g, o);

  SUBCASE("already maximal base stays put") {
    IndependenceCounter counter(g, orient);
    counter.insert(0);
    counter.insert(3);
    const MISet base = set_of(4, {0, 3});
    const MISet r = lex_superset_restricted(g, o, base, {1, 2}, counter);
    CHECK(r.to_sorted_vector() == std::vector<int>{0, 3});
    CHECK(counter.contains(0));
    CHECK(counter.contains(3));
    CHECK_FALSE(counter.contains(1));
  }
  SUBCASE("candidates join in position order") {
    IndependenceCounter counter(g, orient);
    counter.insert(0);
    const MISet base = set_of(4, {0});
    const MISet r = lex_superset_restricted(g, o, base, {3, 2}, counter);
    CHECK(r.to_sorted_vector() == std::vector<int>{0, 2});
    CHECK(counter.contains(2));  // counter mirrors the result
    CHECK_FALSE(counter.contains(3));
  }
  SUBCASE("random agreement with the unrestricted sweep") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph rg = random_graph(10, 30, seed);
      const auto [ord, k] = degeneracy_ordering(rg);
      const Orientation ror(rg, ord);
      const MISet full = lex_first_mis(rg, ord);
      // Base: every other member of the root set; candidates: everything.
      std::vector<int> base_members;
      bool take = false;
      for (const int v : full.to_sorted_vector()) {
        if (take) base_members.push_back(v);
        take = !take;
      }
      const MISet base = set_of(10, base_members);
      IndependenceCounter counter(rg, ror);
      for (int v : base_members) counter.insert(v);
      std::vector<int> all(10);
      for (int v = 0; v < 10; ++v) all[static_cast<std::size_t>(v)] = v;
      const MISet restricted =
          lex_superset_restricted(rg, ord, base, all, counter);
      const MISet reference = lex_first_superset(rg, ord, base);
      CHECK(restricted == reference);
    }
  }
}

TEST_CASE("is_child accepts exactly the tree edges") {
  const Graph g = c5();
  const auto o = VertexOrdering::identity(5);
  const MISet lfmis = lex_first_mis(g, o);
  auto tester = HierarchicalDominance::build(g, 16);

  const MISet root = set_of(5, {0, 2});
  for (int v : {0, 2}) tester.insert(v);
  CHECK(is_child(g, o, lfmis, root, set_of(5, {2, 4}), tester));
  CHECK(is_child(g, o, lfmis, root, set_of(5, {1, 4}), tester));
  CHECK(is_child(g, o, lfmis, root, set_of(5, {0, 3}), tester));
  CHECK_FALSE(is_child(g, o, lfmis, root, set_of(5, {1}), tester));  // not maximal
  CHECK_FALSE(is_child(g, o, lfmis, root, set_of(5, {1, 3}), tester));
  CHECK_FALSE(is_child(g, o, lfmis, root, set_of(5, {0, 2}), tester));  // the root
  // The tester still mirrors the entry set afterwards.
  CHECK(tester.undominated_count() == 0);
  tester.erase(0);
  tester.erase(2);
  CHECK(tester.undominated_count() == 5);
}

TEST_CASE("every non-root set has exactly one accepting parent") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = random_graph(8, 35, seed);
    const auto [o, k] = degeneracy_ordering(g);
    const MISet lfmis = lex_first_mis(g, o);
    const SetList all = brute_mis(g);
    auto tester = HierarchicalDominance::build(g, 16);
    EnumerateOptions opts;
    opts.check_invariants = true;  // cross-checks both parent paths
    for (const auto& t : all) {
      int accepters = 0;
      for (const auto& s : all) {
        const MISet ms = set_of(8, s);
        for (int v : s) tester.insert(v);
        if (is_child(g, o, lfmis, ms, set_of(8, t), tester, opts)) ++accepters;
        for (int v : s) tester.erase(v);
      }
      if (set_of(8, t) == lfmis)
        CHECK(accepters == 0);
      else
        CHECK(accepters == 1);
    }
  }
}

TEST_CASE("frozen enumeration sequences") {
  const auto o4 = VertexOrdering::identity(4);
  const auto o5 = VertexOrdering::identity(5);
  const auto o3 = VertexOrdering::identity(3);
  const SetList p4_seq{{0, 2}, {0, 3}, {1, 3}};
  const SetList c5_seq{{0, 2}, {2, 4}, {1, 4}, {0, 3}, {1, 3}};
  const SetList k3_seq{{0}, {1}, {2}};
  for (const Tester which : {Tester::minor, Tester::sparse}) {
    for (const bool recursive : {true, false}) {
      CHECK(run_enum(p4(), o4, which, recursive) == p4_seq);
      CHECK(run_enum(c5(), o5, which, recursive) == c5_seq);
      CHECK(run_enum(k3(), o3, which, recursive) == k3_seq);
    }
  }
}

TEST_CASE("drivers and testers agree with brute force") {
  for (std::uint64_t seed = 1; seed <= 18; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const Graph g = random_graph(n, 15 + static_cast<int>(seed * 4 % 50), seed);
    const SetList expected = brute_mis(g);
    for (const bool identity : {true, false}) {
      const VertexOrdering o = identity ? VertexOrdering::identity(n)
                                        : degeneracy_ordering(g).first;
      EnumerateOptions opts;
      opts.check_invariants = seed % 3 == 0;
      const SetList rec = run_enum(g, o, Tester::minor, true, opts);
      const SetList nonrec = run_enum(g, o, Tester::minor, false, opts);
      const SetList sparse_rec = run_enum(g, o, Tester::sparse, true, opts);
      CHECK(rec == nonrec);          // same sequence, not just same sets
      CHECK(rec == sparse_rec);      // tester choice never changes the walk
      SetList sorted = rec;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == expected);
    }
  }
}

TEST_CASE("slow and fast parent checks agree over whole runs") {
  for (std::uint64_t seed = 20; seed <= 26; ++seed) {
    const Graph g = random_graph(10, 30, seed);
    const auto [o, k] = degeneracy_ordering(g);
    EnumerateOptions fast;
    EnumerateOptions slow;
    slow.slow_parent_check = true;
    CHECK(run_enum(g, o, Tester::minor, true, fast) ==
          run_enum(g, o, Tester::minor, true, slow));
  }
}

TEST_CASE("degenerate graphs") {
  const auto empty = Graph(0, {});
  CHECK(run_enum(empty, VertexOrdering::identity(0), Tester::minor, true) ==
        SetList{{}});
  const Graph edgeless(4, {});
  CHECK(run_enum(edgeless, VertexOrdering::identity(4), Tester::minor, false) ==
        SetList{{0, 1, 2, 3}});
  const Graph single(1, {});
  CHECK(run_enum(single, VertexOrdering::identity(1), Tester::sparse, true) ==
        SetList{{0}});
}

TEST_CASE("ordering must match the graph") {
  const Graph g = p4();
  auto tester = HierarchicalDominance::build(g, 16);
  const MisCallback ignore = [](const std::vector<int>&) {};
  CHECK_THROWS_AS(
      enumerate_recursive(g, VertexOrdering::identity(3), tester, ignore),
      std::invalid_argument);
  CHECK_THROWS_AS(
      enumerate_nonrecursive(g, VertexOrdering::identity(5), tester, ignore),
      std::invalid_argument);
}

TEST_CASE("oversized pools are refused with identity order but fine with degeneracy") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 63; ++i) edges.push_back({0, i});
  const Graph star(64, edges);
  auto tester = HierarchicalDominance::build(star, 16);
  SetList out;
  const MisCallback emit = [&out](const std::vector<int>& s) {
    out.push_back(s);
  };
  CHECK_THROWS_AS(
      enumerate_recursive(star, VertexOrdering::identity(64), tester, emit),
      std::invalid_argument);

  auto fresh = HierarchicalDominance::build(star, 16);
  out.clear();
  enumerate_recursive(star, degeneracy_ordering(star).first, fresh, emit);
  CHECK(out.size() == 2);  // all leaves, or the center alone
}

TEST_CASE("run statistics are filled in") {
  const Graph g = c5();
  const auto o = VertexOrdering::identity(5);
  RunStats rs;
  EnumerateOptions opts;
  opts.stats = &rs;
  auto tester = HierarchicalDominance::build(g, 16);
  SetList out;
  enumerate_nonrecursive(g, o, tester,
                         [&out](const std::vector<int>& s) { out.push_back(s); },
                         opts);
  CHECK(rs.sets_emitted == 5);
  CHECK(rs.total_ops > 0);
  CHECK(rs.tester_updates >= 4);  // at least the root in and out
  CHECK(rs.parent_computations > 0);
  CHECK(rs.max_inter_output_ops > 0);
  CHECK(rs.max_inter_output_ops <= rs.total_ops);
  CHECK(rs.wall_time_s >= 0.0);
}

TEST_CASE("concurrent enumerations share one immutable graph") {
  const Graph g = random_graph(11, 30, 5);
  const auto [o, k] = degeneracy_ordering(g);
  SetList a, b;
  std::thread ta([&] {
    auto tester = HierarchicalDominance::build(g, 16);
    enumerate_recursive(g, o, tester,
                        [&a](const std::vector<int>& s) { a.push_back(s); });
  });
  std::thread tb([&] {
    const Orientation orient(g, o);
    auto tester = OrientedDominance::build(g, orient);
    enumerate_nonrecursive(g, o, tester,
                           [&b](const std::vector<int>& s) { b.push_back(s); });
  });
  ta.join();
  tb.join();
  CHECK(a == b);
  SetList sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == brute_mis(g));
}

#include "misenum/independence.hpp"

#include <algorithm>
#include <stdexcept>

namespace misenum {

IndependenceCounter::IndependenceCounter(const Graph& g, const Orientation& o)
    : g_(&g),
      o_(&o),
      member_(static_cast<std::size_t>(g.num_vertices()), 0),
      incount_(static_cast<std::size_t>(g.num_vertices()), 0) {
  if (o.num_vertices() != g.num_vertices())
    throw std::invalid_argument("orientation does not match graph");
}

void IndependenceCounter::insert(int v) {
  auto& f = member_[static_cast<std::size_t>(v)];
  if (f) throw std::invalid_argument("already member");
  f = 1;
  ++size_;
  bump();
  conflicts_ += incount_[static_cast<std::size_t>(v)];
  for (int w : o_->out_neighbors(v)) {
    bump();
    if (member_[static_cast<std::size_t>(w)]) ++conflicts_;
    ++incount_[static_cast<std::size_t>(w)];
  }
}

void IndependenceCounter::erase(int v) {
  auto& f = member_[static_cast<std::size_t>(v)];
  if (!f) throw std::invalid_argument("not a member");
  f = 0;
  --size_;
  bump();
  conflicts_ -= incount_[static_cast<std::size_t>(v)];
  for (int w : o_->out_neighbors(v)) {
    bump();
    if (member_[static_cast<std::size_t>(w)]) --conflicts_;
    --incount_[static_cast<std::size_t>(w)];
  }
}

bool IndependenceCounter::addable(int v) const {
  if (op_counter) ++*op_counter;
  if (member_[static_cast<std::size_t>(v)]) return false;
  if (incount_[static_cast<std::size_t>(v)] != 0) return false;
  for (int w : o_->out_neighbors(v)) {
    if (op_counter) ++*op_counter;
    if (member_[static_cast<std::size_t>(w)]) return false;
  }
  return true;
}

PairGraph build_pair_graph(const Graph& g) {
  const int n = g.num_vertices();
  auto pair_edges = g.edges();  // already lex sorted
  const int m = static_cast<int>(pair_edges.size());

  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> directed;
  edges.reserve(static_cast<std::size_t>(n + 2 * m));
  directed.reserve(edges.capacity());
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(0, 1 + v);
    directed.emplace_back(1 + v, 0);  // singleton -> empty set
  }
  for (int i = 0; i < m; ++i) {
    const auto& [u, v] = pair_edges[static_cast<std::size_t>(i)];
    const int p = 1 + n + i;
    edges.emplace_back(1 + u, p);
    edges.emplace_back(1 + v, p);
    directed.emplace_back(p, 1 + u);  // pair -> each singleton
    directed.emplace_back(p, 1 + v);
  }
  Graph pg(1 + n + m, edges);
  Orientation orient = Orientation::from_directed_edges(pg, directed);
  return PairGraph{std::move(pg), std::move(orient), n, std::move(pair_edges)};
}

PairGraphIndependence::PairGraphIndependence(const Graph& g, int delta)
    : pg_(build_pair_graph(g)),
      dom_(OrientedDominance::build(pg_.graph, pg_.orientation, delta)) {
  // S empty: the complement set holds the empty-set vertex and every
  // singleton.
  dom_.insert(pg_.empty_id());
  for (int v = 0; v < pg_.base_n; ++v) dom_.insert(pg_.singleton_id(v));
}

void PairGraphIndependence::insert(int v) {
  if (contains(v)) throw std::invalid_argument("already member");
  dom_.erase(pg_.singleton_id(v));
}

void PairGraphIndependence::erase(int v) {
  if (!contains(v)) throw std::invalid_argument("not a member");
  dom_.insert(pg_.singleton_id(v));
}

}  // namespace misenum

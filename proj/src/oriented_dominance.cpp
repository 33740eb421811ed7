#include "misenum/oriented_dominance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace misenum {

OrientedDominance OrientedDominance::build(const Graph& g,
                                           const Orientation& o, int delta) {
  if (o.num_vertices() != g.num_vertices())
    throw std::invalid_argument("orientation does not match graph");
  const int n = g.num_vertices();
  if (delta <= 0) {
    const int k = std::max(1, o.k());
    delta = n > 0 ? static_cast<int>(
                        std::ceil(std::pow(n, 1.0 - 1.0 / k) - 1e-9))
                  : 1;
    delta = std::max(delta, 1);
  }

  OrientedDominance ds;
  ds.g_ = &g;
  ds.o_ = &o;
  ds.delta_ = delta;
  ds.high_.assign(static_cast<std::size_t>(n), 0);
  ds.class_of_.assign(static_cast<std::size_t>(n), -1);
  ds.member_.assign(static_cast<std::size_t>(n), 0);
  ds.lowdom_.assign(static_cast<std::size_t>(n), 0);
  ds.index_.assign(static_cast<std::size_t>(n), {});
  for (int v = 0; v < n; ++v)
    ds.high_[static_cast<std::size_t>(v)] = g.degree(v) >= delta;

  // Classes keyed by the sorted high out-neighborhood, numbered in first
  // appearance order over ascending vertex ids.
  std::map<std::vector<int>, int> key_to_class;
  for (int v = 0; v < n; ++v) {
    std::vector<int> key;
    for (int w : o.out_neighbors(v))
      if (ds.high_[static_cast<std::size_t>(w)]) key.push_back(w);
    auto [it, fresh] =
        key_to_class.try_emplace(std::move(key), ds.num_classes());
    if (fresh) {
      ds.classes_.emplace_back();
      ds.classes_.back().outset = it->first;
    }
    ds.class_of_[static_cast<std::size_t>(v)] = it->second;
    ds.classes_[static_cast<std::size_t>(it->second)].members.push_back(v);
  }
  for (int s = 0; s < ds.num_classes(); ++s) {
    auto& c = ds.classes_[static_cast<std::size_t>(s)];
    c.nundom = static_cast<std::int64_t>(c.members.size());
    ds.total_ += c.nundom;
    for (int q : c.outset) ds.index_[static_cast<std::size_t>(q)].push_back(s);
  }
  return ds;
}

void OrientedDominance::nundom_change(int s, std::int64_t d) {
  bump();
  auto& c = classes_[static_cast<std::size_t>(s)];
  c.nundom += d;
  if (c.hidom == 0) total_ += d;
}

void OrientedDominance::hidom_incr(int s) {
  bump();
  auto& c = classes_[static_cast<std::size_t>(s)];
  if (c.hidom == 0) total_ -= c.nundom;
  ++c.hidom;
}

void OrientedDominance::hidom_decr(int s) {
  bump();
  auto& c = classes_[static_cast<std::size_t>(s)];
  --c.hidom;
  if (c.hidom == 0) total_ += c.nundom;
}

void OrientedDominance::lowdom_incr(int w) {
  bump();
  auto& d = lowdom_[static_cast<std::size_t>(w)];
  if (d == 0 && !member_[static_cast<std::size_t>(w)])
    nundom_change(class_of_[static_cast<std::size_t>(w)], -1);
  ++d;
}

void OrientedDominance::lowdom_decr(int w) {
  bump();
  auto& d = lowdom_[static_cast<std::size_t>(w)];
  --d;
  if (d == 0 && !member_[static_cast<std::size_t>(w)])
    nundom_change(class_of_[static_cast<std::size_t>(w)], +1);
}

void OrientedDominance::insert(int v) {
  auto& f = member_[static_cast<std::size_t>(v)];
  if (f) throw std::invalid_argument("already member");
  touched_last_ = 0;
  f = 1;
  bump();
  if (lowdom_[static_cast<std::size_t>(v)] == 0)
    nundom_change(class_of_[static_cast<std::size_t>(v)], -1);
  if (high_[static_cast<std::size_t>(v)]) {
    for (int w : o_->out_neighbors(v)) lowdom_incr(w);
    for (int s : index_[static_cast<std::size_t>(v)]) hidom_incr(s);
  } else {
    for (int w : g_->neighbors(v)) lowdom_incr(w);
  }
}

void OrientedDominance::erase(int v) {
  auto& f = member_[static_cast<std::size_t>(v)];
  if (!f) throw std::invalid_argument("not a member");
  touched_last_ = 0;
  f = 0;
  bump();
  if (lowdom_[static_cast<std::size_t>(v)] == 0)
    nundom_change(class_of_[static_cast<std::size_t>(v)], +1);
  if (high_[static_cast<std::size_t>(v)]) {
    for (int w : o_->out_neighbors(v)) lowdom_decr(w);
    for (int s : index_[static_cast<std::size_t>(v)]) hidom_decr(s);
  } else {
    for (int w : g_->neighbors(v)) lowdom_decr(w);
  }
}

void OrientedDominance::dump(std::ostream& out) const {
  for (int v = 0; v < g_->num_vertices(); ++v)
    out << "v " << v << " member=" << int(member_[static_cast<std::size_t>(v)])
        << " lowdom=" << lowdom_[static_cast<std::size_t>(v)]
        << " class=" << class_of_[static_cast<std::size_t>(v)] << "\n";
  for (int s = 0; s < num_classes(); ++s) {
    const auto& c = classes_[static_cast<std::size_t>(s)];
    out << "s " << s << " hidom=" << c.hidom << " nundom=" << c.nundom
        << " outset=";
    for (std::size_t i = 0; i < c.outset.size(); ++i)
      out << (i ? "," : "") << c.outset[i];
    out << "\n";
  }
}

}  // namespace misenum

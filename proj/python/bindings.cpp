#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "misenum/bounded_degree.hpp"
#include "misenum/graph.hpp"
#include "misenum/hierarchical_dominance.hpp"
#include "misenum/independence.hpp"
#include "misenum/oracle.hpp"
#include "misenum/ordering.hpp"
#include "misenum/oriented_dominance.hpp"
#include "misenum/reverse_search.hpp"

namespace py = pybind11;
using namespace misenum;

namespace {

// Owns the graph and orientation the flat dominance structure points into,
// so the Python object is self-contained.
class SparseDominance {
 public:
  explicit SparseDominance(const Graph& g, int delta = 0)
      : g_(std::make_unique<Graph>(g)),
        ori_(std::make_unique<Orientation>(*g_, degeneracy_ordering(*g_).first)) {
    dom_.emplace(OrientedDominance::build(*g_, *ori_, delta));
  }

  void insert(int v) { dom_->insert(v); }
  void erase(int v) { dom_->erase(v); }
  std::int64_t undominated_count() const { return dom_->undominated_count(); }
  bool contains(int v) const { return dom_->contains(v); }
  std::uint64_t touched_last() const { return dom_->touched_last(); }
  int delta() const { return dom_->delta(); }
  int num_classes() const { return dom_->num_classes(); }
  std::string dump() const {
    std::ostringstream out;
    dom_->dump(out);
    return out.str();
  }

 private:
  std::unique_ptr<Graph> g_;
  std::unique_ptr<Orientation> ori_;
  std::optional<OrientedDominance> dom_;
};

std::vector<std::vector<int>> enumerate_mis(const Graph& g,
                                            const std::string& algorithm,
                                            const std::string& order,
                                            int max_degree, int delta) {
  VertexOrdering ord;
  int degeneracy = -1;
  if (order == "input") {
    ord = VertexOrdering::identity(g.num_vertices());
  } else if (order == "degeneracy") {
    auto [o, k] = degeneracy_ordering(g);
    ord = std::move(o);
    degeneracy = k;
  } else {
    throw std::invalid_argument("unknown order: " + order);
  }

  std::string chosen = algorithm;
  if (chosen == "auto") {
    if (g.max_degree() <= max_degree) {
      chosen = "bounded";
    } else {
      if (degeneracy < 0) degeneracy = degeneracy_ordering(g).second;
      chosen = degeneracy <= 8 ? "generic-minor" : "generic-sparse";
    }
  }

  std::vector<std::vector<int>> out;
  const auto emit = [&out](const std::vector<int>& s) { out.push_back(s); };
  if (chosen == "brute") {
    out = brute_mis(g);
  } else if (chosen == "bounded") {
    BoundedOptions opts;
    opts.max_degree = max_degree;
    enumerate_bounded_degree(g, ord, emit, opts);
  } else if (chosen == "generic-minor") {
    auto tester = HierarchicalDominance::build(g, delta > 0 ? delta : 16);
    enumerate_nonrecursive(g, ord, tester, emit);
  } else if (chosen == "generic-sparse") {
    const Orientation orient(g, ord);
    auto tester = OrientedDominance::build(g, orient, delta);
    enumerate_nonrecursive(g, ord, tester, emit);
  } else {
    throw std::invalid_argument("unknown algorithm: " + algorithm);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "maximal independent set enumeration over sparse graphs";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def("num_vertices", &Graph::num_vertices)
      .def("num_edges", &Graph::num_edges)
      .def("neighbors",
           [](const Graph& g, int v) {
             const auto nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def("degree", &Graph::degree)
      .def("max_degree", &Graph::max_degree)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def(
      "parse_edge_list",
      [](const std::string& text, const std::string& format) {
        if (format != "edgelist" && format != "dimacs")
          throw std::invalid_argument("unknown format: " + format);
        return parse_edge_list(
            text, format == "dimacs" ? EdgeFormat::dimacs : EdgeFormat::edge_list);
      },
      py::arg("text"), py::arg("format") = "edgelist",
      "parse a plain edge list or DIMACS text into a Graph");

  m.def("brute_mis", &brute_mis, py::arg("g"),
        "all maximal independent sets by exhaustion (n <= 24), sorted");

  m.def("enumerate_mis", &enumerate_mis, py::arg("g"),
        py::arg("algorithm") = "auto", py::arg("order") = "degeneracy",
        py::arg("max_degree") = 4, py::arg("delta") = 0,
        "all maximal independent sets in enumeration order");

  m.def(
      "degeneracy_ordering",
      [](const Graph& g) {
        auto [o, k] = degeneracy_ordering(g);
        return std::make_pair(o.order(), k);
      },
      py::arg("g"), "min-degree removal order and the degeneracy");

  py::class_<HierarchicalDominance>(m, "HierarchicalDominance")
      .def(py::init([](const Graph& g, int delta) {
             return HierarchicalDominance::build(g, delta);
           }),
           py::arg("g"), py::arg("delta") = 16)
      .def("insert", &HierarchicalDominance::insert, py::arg("v"))
      .def("erase", &HierarchicalDominance::erase, py::arg("v"))
      .def("undominated_count", &HierarchicalDominance::undominated_count)
      .def("contains", &HierarchicalDominance::contains, py::arg("v"))
      .def("touched_last", &HierarchicalDominance::touched_last)
      .def("max_delta", &HierarchicalDominance::max_delta)
      .def("state_hash", &HierarchicalDominance::state_hash)
      .def("dump", [](const HierarchicalDominance& h) {
        std::ostringstream out;
        h.dump(out);
        return out.str();
      });

  py::class_<SparseDominance>(m, "OrientedDominance")
      .def(py::init<const Graph&, int>(), py::arg("g"), py::arg("delta") = 0)
      .def("insert", &SparseDominance::insert, py::arg("v"))
      .def("erase", &SparseDominance::erase, py::arg("v"))
      .def("undominated_count", &SparseDominance::undominated_count)
      .def("contains", &SparseDominance::contains, py::arg("v"))
      .def("touched_last", &SparseDominance::touched_last)
      .def("delta", &SparseDominance::delta)
      .def("num_classes", &SparseDominance::num_classes)
      .def("dump", &SparseDominance::dump);

  py::class_<PairGraphIndependence>(m, "PairGraphIndependence")
      .def(py::init<const Graph&, int>(), py::arg("g"), py::arg("delta") = 0)
      .def("insert", &PairGraphIndependence::insert, py::arg("v"))
      .def("erase", &PairGraphIndependence::erase, py::arg("v"))
      .def("is_independent", &PairGraphIndependence::is_independent)
      .def("conflicts", &PairGraphIndependence::conflicts)
      .def("contains", &PairGraphIndependence::contains, py::arg("v"));
}

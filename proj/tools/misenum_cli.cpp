#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "generators.hpp"
#include "misenum/bounded_degree.hpp"
#include "misenum/graph.hpp"
#include "misenum/hierarchical_dominance.hpp"
#include "misenum/independence.hpp"
#include "misenum/oracle.hpp"
#include "misenum/ordering.hpp"
#include "misenum/oriented_dominance.hpp"
#include "misenum/reverse_search.hpp"
#include "misenum/stats.hpp"

namespace {

using namespace misenum;

// Raised when an answer disagrees with its brute-force reference; mapped to
// exit code 4.
struct VerifyMismatch {
  std::string message;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty()) {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

EdgeFormat to_format(const std::string& name) {
  return name == "dimacs" ? EdgeFormat::dimacs : EdgeFormat::edge_list;
}

// Strict integer: the whole string (trailing blanks aside) must be consumed.
int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  }
  while (used < text.size() &&
         (text[used] == ' ' || text[used] == '\t' || text[used] == '\r'))
    ++used;
  if (used != text.size())
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  return value;
}

std::string join_line(const std::vector<int>& s) {
  std::string line;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(s[i]);
  }
  return line;
}

void print_stats(const std::string& algorithm, const RunStats& rs) {
  std::cerr << "algorithm=" << algorithm << '\n'
            << "sets_emitted=" << rs.sets_emitted << '\n'
            << "tester_updates=" << rs.tester_updates << '\n'
            << "parent_computations=" << rs.parent_computations << '\n'
            << "fertility_checks=" << rs.fertility_checks << '\n'
            << "total_ops=" << rs.total_ops << '\n'
            << "max_inter_output_ops=" << rs.max_inter_output_ops << '\n'
            << "wall_time_s=" << rs.wall_time_s << '\n';
}

struct EnumerateArgs {
  std::string input;
  std::string format = "edgelist";
  std::string algorithm = "auto";
  std::string order = "degeneracy";
  int delta = 0;
  int max_degree = 4;
  bool count_only = false;
  bool stats = false;
  bool verify = false;
};

void run_enumerate(const EnumerateArgs& a) {
  const Graph g = parse_edge_list(read_input(a.input), to_format(a.format));

  VertexOrdering ord;
  int degeneracy = -1;
  if (a.order == "input") {
    ord = VertexOrdering::identity(g.num_vertices());
  } else {
    auto [o, k] = degeneracy_ordering(g);
    ord = std::move(o);
    degeneracy = k;
  }

  std::string algorithm = a.algorithm;
  if (algorithm == "auto") {
    if (g.max_degree() <= a.max_degree) {
      algorithm = "bounded";
    } else {
      if (degeneracy < 0) degeneracy = degeneracy_ordering(g).second;
      algorithm = degeneracy <= 8 ? "generic-minor" : "generic-sparse";
    }
  }

  if (a.verify && g.num_vertices() > 24)
    throw std::invalid_argument("--verify is limited to graphs with at most 24 vertices");

  std::uint64_t count = 0;
  std::vector<std::vector<int>> seen;
  auto emit = [&](const std::vector<int>& s) {
    ++count;
    if (a.verify) seen.push_back(s);
    if (!a.count_only) std::cout << join_line(s) << '\n' << std::flush;
  };

  RunStats rs;
  if (algorithm == "brute") {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& s : brute_mis(g)) emit(s);
    rs.sets_emitted = count;
    rs.wall_time_s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  } else if (algorithm == "bounded") {
    BoundedOptions opts;
    opts.max_degree = a.max_degree;
    opts.stats = &rs;
    enumerate_bounded_degree(g, ord, emit, opts);
  } else if (algorithm == "generic-minor") {
    EnumerateOptions opts;
    opts.stats = &rs;
    auto tester = HierarchicalDominance::build(g, a.delta > 0 ? a.delta : 16);
    enumerate_nonrecursive(g, ord, tester, emit, opts);
  } else {  // generic-sparse
    EnumerateOptions opts;
    opts.stats = &rs;
    const Orientation orient(g, ord);
    auto tester = OrientedDominance::build(g, orient, a.delta);
    enumerate_nonrecursive(g, ord, tester, emit, opts);
  }

  if (a.count_only) std::cout << count << '\n' << std::flush;
  if (a.stats) print_stats(algorithm, rs);

  if (a.verify) {
    auto reference = brute_mis(g);
    std::sort(seen.begin(), seen.end());
    if (seen != reference)
      throw VerifyMismatch{"enumeration disagrees with brute force: got " +
                           std::to_string(seen.size()) + " sets, expected " +
                           std::to_string(reference.size())};
  }
}

struct DominanceArgs {
  std::string input;
  std::string format = "edgelist";
  std::string structure;
  int delta = 0;
};

void run_dominance(const DominanceArgs& a) {
  const Graph g = parse_edge_list(read_input(a.input), to_format(a.format));
  const int n = g.num_vertices();

  // The sparse structure holds pointers into the orientation, so it lives
  // here next to the graph.
  Orientation orient;
  std::unique_ptr<DominanceTester> tester;
  std::unique_ptr<PairGraphIndependence> indep;
  if (a.structure == "minor") {
    tester = std::make_unique<HierarchicalDominance>(
        HierarchicalDominance::build(g, a.delta > 0 ? a.delta : 16));
  } else if (a.structure == "sparse") {
    orient = Orientation(g, degeneracy_ordering(g).first);
    tester = std::make_unique<OrientedDominance>(
        OrientedDominance::build(g, orient, a.delta));
  } else {  // independence
    indep = std::make_unique<PairGraphIndependence>(g, a.delta);
  }

  std::vector<char> member(static_cast<std::size_t>(n), 0);
  auto member_list = [&] {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (member[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line[0] == '+' || line[0] == '-') {
        const int v = parse_int(line.substr(1));
        if (v < 0 || v >= n)
          throw std::out_of_range("vertex out of range: " + std::to_string(v));
        auto& flag = member[static_cast<std::size_t>(v)];
        if (line[0] == '+') {
          if (flag) throw std::invalid_argument("already a member: " + std::to_string(v));
          if (indep) indep->insert(v); else tester->insert(v);
          flag = 1;
        } else {
          if (!flag) throw std::invalid_argument("not a member: " + std::to_string(v));
          if (indep) indep->erase(v); else tester->erase(v);
          flag = 0;
        }
      } else if (line == "?") {
        if (indep)
          std::cout << (indep->is_independent() ? "independent" : "dependent")
                    << '\n' << std::flush;
        else
          std::cout << tester->undominated_count() << '\n' << std::flush;
      } else if (line == "!") {
        if (indep) {
          const bool got = indep->is_independent();
          const bool want = naive_is_independent(g, member_list());
          if (got != want)
            throw VerifyMismatch{"line " + std::to_string(lineno) +
                                 ": structure says " +
                                 (got ? "independent" : "dependent") +
                                 ", recount says " +
                                 (want ? "independent" : "dependent")};
        } else {
          const std::int64_t got = tester->undominated_count();
          const std::int64_t want = naive_undominated(g, member_list());
          if (got != want)
            throw VerifyMismatch{"line " + std::to_string(lineno) +
                                 ": structure says " + std::to_string(got) +
                                 " undominated, recount says " +
                                 std::to_string(want)};
        }
      } else {
        throw std::invalid_argument("unrecognized script line: '" + line + "'");
      }
    } catch (const VerifyMismatch&) {
      throw;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
}

struct BenchArgs {
  std::string family;
  std::string sizes;
  std::uint64_t seed = 1;
  int delta = 0;
  int max_degree = 4;
};

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  std::istringstream ss(csv);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const int size = parse_int(token);
    if (size < 0) throw std::invalid_argument("sizes must be non-negative");
    out.push_back(size);
  }
  return out;
}

Graph make_family(const std::string& family, int size, std::uint64_t seed) {
  if (family == "triangles") return triangles(size);
  if (family == "grid") return grid(size);
  return random_degenerate(size, 3, seed + static_cast<std::uint64_t>(size));
}

void print_row(const std::string& family, const std::string& algorithm,
               int n, const RunStats& rs) {
  const double per_set =
      rs.sets_emitted ? static_cast<double>(rs.total_ops) /
                            static_cast<double>(rs.sets_emitted)
                      : 0.0;
  std::cout << family << ',' << algorithm << ',' << n << ',' << rs.sets_emitted
            << ',' << rs.total_ops << ',' << std::fixed << std::setprecision(3)
            << per_set << ',' << rs.max_inter_output_ops << ','
            << std::setprecision(6) << rs.wall_time_s << '\n'
            << std::flush;
  std::cout.unsetf(std::ios::fixed);
}

void run_bench(const BenchArgs& a) {
  std::cout << "family,algorithm,n,sets,total_ops,ops_per_set,max_delay_ops,"
               "wall_time\n"
            << std::flush;
  const auto sink = [](const std::vector<int>&) {};
  for (const int size : parse_sizes(a.sizes)) {
    const Graph g = make_family(a.family, size, a.seed);
    const VertexOrdering ord = degeneracy_ordering(g).first;
    {
      RunStats rs;
      EnumerateOptions opts;
      opts.stats = &rs;
      auto tester = HierarchicalDominance::build(g, a.delta > 0 ? a.delta : 16);
      enumerate_nonrecursive(g, ord, tester, sink, opts);
      print_row(a.family, "generic-minor", g.num_vertices(), rs);
    }
    {
      RunStats rs;
      EnumerateOptions opts;
      opts.stats = &rs;
      const Orientation orient(g, ord);
      auto tester = OrientedDominance::build(g, orient, a.delta);
      enumerate_nonrecursive(g, ord, tester, sink, opts);
      print_row(a.family, "generic-sparse", g.num_vertices(), rs);
    }
    if (g.max_degree() <= a.max_degree) {
      RunStats rs;
      BoundedOptions opts;
      opts.max_degree = a.max_degree;
      opts.stats = &rs;
      enumerate_bounded_degree(g, ord, sink, opts);
      print_row(a.family, "bounded", g.num_vertices(), rs);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"maximal independent set enumeration over sparse graphs"};
  app.footer(
      "exit codes: 0 success, 2 usage, 3 parse error, 4 verification "
      "mismatch, 5 internal error");
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand(
      "enumerate", "list all maximal independent sets of a graph");
  enumerate->add_option("--input", ea.input,
                        "input graph file (default: stdin)");
  enumerate->add_option("--format", ea.format, "input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  enumerate->add_option("--algorithm", ea.algorithm, "enumeration algorithm")
      ->check(CLI::IsMember(
          {"auto", "generic-minor", "generic-sparse", "bounded", "brute"}));
  enumerate->add_option("--order", ea.order, "vertex ordering")
      ->check(CLI::IsMember({"degeneracy", "input"}));
  enumerate->add_option("--delta", ea.delta,
                        "dominance threshold (0 = structure default)");
  enumerate->add_option("--max-degree", ea.max_degree,
                        "degree bound for the bounded-degree algorithm");
  enumerate->add_flag("--count-only", ea.count_only,
                      "print only the number of sets");
  enumerate->add_flag("--stats", ea.stats, "print run counters to stderr");
  enumerate->add_flag("--verify", ea.verify,
                      "cross-check against brute force (n <= 24)");

  DominanceArgs da;
  auto* dominance = app.add_subcommand(
      "dominance", "drive a dynamic dominance structure from a script");
  dominance->add_option("--input", da.input,
                        "input graph file (the script arrives on stdin, so "
                        "scripted runs want --input)");
  dominance->add_option("--format", da.format, "input format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  dominance->add_option("--structure", da.structure, "structure to drive")
      ->required()
      ->check(CLI::IsMember({"minor", "sparse", "independence"}));
  dominance->add_option("--delta", da.delta,
                        "dominance threshold (0 = structure default)");

  BenchArgs ba;
  auto* bench = app.add_subcommand(
      "bench", "enumerate standard graph families and report counters");
  bench->add_option("--family", ba.family, "graph family")
      ->required()
      ->check(CLI::IsMember({"triangles", "grid", "random-degenerate"}));
  bench->add_option("--sizes", ba.sizes,
                    "comma-separated size list (may be empty)");
  bench->add_option("--seed", ba.seed, "random seed for seeded families");
  bench->add_option("--delta", ba.delta,
                    "dominance threshold (0 = structure default)");
  bench->add_option("--max-degree", ba.max_degree,
                    "degree bound for the bounded-degree algorithm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed())
      run_enumerate(ea);
    else if (dominance->parsed())
      run_dominance(da);
    else if (bench->parsed())
      run_bench(ba);
    return 0;
  } catch (const VerifyMismatch& e) {
    std::cerr << "error: " << e.message << '\n';
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
}

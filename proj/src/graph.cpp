#include "rindep/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "rindep/error.hpp"

namespace rindep {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph Graph::build(int n, const std::vector<Edge>& edges) {
  check_order(n);
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj[u - 1].insert(v);
    adj[v - 1].insert(u);
  }
  return Graph(std::move(adj));
}

Graph Graph::edgeless(int n) {
  check_order(n);
  return Graph(std::vector<VertexSet>(n));
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  const VertexSet all = VertexSet::range(n);
  for (int v = 1; v <= n; ++v) {
    const VertexSet nb = adjacency[v - 1];
    if (!nb.is_subset_of(all)) throw InputError("neighbour outside vertex range");
    if (nb.contains(v)) throw InputError("self-loop at vertex " + std::to_string(v));
    for (int u : nb) {
      if (!adjacency[u - 1].contains(v)) throw InputError("asymmetric adjacency");
    }
  }
  return Graph(std::move(adjacency));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet nb : adj_) twice += nb.size();
  return twice / 2;
}

LabeledGraph LabeledGraph::identity(Graph g) {
  std::vector<int> labels(g.order());
  for (int i = 0; i < g.order(); ++i) labels[i] = i + 1;
  return {std::move(g), std::move(labels)};
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  std::vector<VertexSet> adj(n);
  for (int v = 1; v <= n; ++v) adj[v - 1] = (all - g.neighbors(v)).without(v);
  return Graph::from_adjacency(std::move(adj));
}

LabeledGraph induced_subgraph(const Graph& g, VertexSet a) {
  const std::vector<int> labels = (a & g.vertices()).to_vector();
  std::vector<int> local(g.order() + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) local[labels[i]] = static_cast<int>(i) + 1;
  std::vector<VertexSet> adj(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (int u : g.neighbors(labels[i]) & a) adj[i].insert(local[u]);
  }
  return {Graph::from_adjacency(std::move(adj)), labels};
}

LabeledGraph delete_vertex(const Graph& g, int x) {
  return induced_subgraph(g, g.vertices().without(x));
}

VertexSet reach_within(const Graph& g, VertexSet a, int start) {
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & a) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet a) {
  std::vector<VertexSet> out;
  VertexSet rest = a;
  while (!rest.empty()) {
    const VertexSet comp = reach_within(g, a, rest.min());
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected_subset(const Graph& g, VertexSet a) {
  if (a.empty()) throw InputError("connectivity of the empty vertex set is undefined");
  return reach_within(g, a, a.min()) == a;
}

bool is_clique(const Graph& g, VertexSet a) {
  for (int v : a) {
    if (!a.without(v).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet a) {
  for (int v : a) {
    if (g.neighbors(v).intersects(a)) return false;
  }
  return true;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) return false;
  VertexSet seen;
  for (int v : order) {
    if (v < 1 || v > n || seen.contains(v)) return false;
    seen.insert(v);
  }
  VertexSet remaining = g.vertices();
  for (int v : order) {
    remaining.erase(v);
    if (!is_clique(g, g.neighbors(v) & remaining)) return false;
  }
  return true;
}

std::optional<PerfectEliminationOrder> is_chordal(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; ties go to the largest label so that the
  // resulting elimination order tends to start at small labels.
  std::vector<int> weight(n + 1, 0);
  VertexSet unvisited = g.vertices();
  std::vector<int> visit;
  visit.reserve(n);
  while (!unvisited.empty()) {
    int best = -1;
    for (int v : unvisited) {
      if (best < 0 || weight[v] >= weight[best]) best = v;
    }
    visit.push_back(best);
    unvisited.erase(best);
    for (int u : g.neighbors(best) & unvisited) ++weight[u];
  }
  PerfectEliminationOrder peo{std::vector<int>(visit.rbegin(), visit.rend())};
  if (!is_perfect_elimination_order(g, peo.order)) return std::nullopt;
  return peo;
}

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)).has_value(); }

std::vector<int> simplicial_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.order(); ++v) {
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  }
  return out;
}

LabeledGraph tilde_graph(const Graph& g, int x) {
  if (x < 1 || x > g.order()) throw InputError("pivot vertex out of range");
  const Graph gc = complement(g);
  const VertexSet y = gc.neighbors(x);
  if (!is_clique(gc, y)) {
    throw InputError("vertex " + std::to_string(x) +
                     " is not simplicial in the complement");
  }
  const VertexSet keep = g.vertices().without(x);
  std::vector<VertexSet> adj(g.order());
  for (int v : keep) {
    adj[v - 1] = g.neighbors(v) & keep;
    if (!y.contains(v)) adj[v - 1] |= (gc.neighbors(v) & keep) - y;
  }
  const Graph widened = Graph::from_adjacency(std::move(adj));
  return induced_subgraph(widened, keep);
}

Graph generate_family(Family family, int n) {
  if (n < 1) throw InputError("family size must be at least 1");
  std::vector<Edge> edges;
  switch (family) {
    case Family::complete:
    case Family::path_complement:
    case Family::cycle_complement:
    case Family::path:
    case Family::cycle: {
      if (family == Family::cycle || family == Family::cycle_complement) {
        if (n < 3) throw InputError("cycles need at least 3 vertices");
      }
      if (family == Family::complete) {
        for (int u = 1; u <= n; ++u)
          for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
        return Graph::build(n, edges);
      }
      for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      const bool closed = family == Family::cycle || family == Family::cycle_complement;
      if (closed) edges.emplace_back(n, 1);
      Graph base = Graph::build(n, edges);
      if (family == Family::path || family == Family::cycle) return base;
      return complement(base);
    }
    case Family::star:
      for (int v = 2; v <= n + 1; ++v) edges.emplace_back(1, v);
      return Graph::build(n + 1, edges);
    case Family::kn_x:
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
      for (int v = 1; v < n; ++v) edges.emplace_back(v, n + 1);
      return Graph::build(n + 1, edges);
  }
  throw InputError("unknown family");
}

Family parse_family(const std::string& name) {
  static const std::pair<const char*, Family> table[] = {
      {"complete", Family::complete},
      {"star", Family::star},
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"path_complement", Family::path_complement},
      {"cycle_complement", Family::cycle_complement},
      {"kn_x", Family::kn_x},
  };
  for (auto [key, fam] : table) {
    if (name == key) return fam;
  }
  throw InputError("unknown family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::path_complement: return "path_complement";
    case Family::cycle_complement: return "cycle_complement";
    case Family::kn_x: return "kn_x";
  }
  return "?";
}

bool has_induced_c4(const Graph& g) {
  // A 4-set induces C4 iff it has 4 edges and every vertex has degree 2.
  bool found = false;
  for_each_subset_of_size(g.vertices(), 4, [&](VertexSet s) {
    if (found) return;
    for (int v : s) {
      if ((g.neighbors(v) & s).size() != 2) return;
    }
    found = true;
  });
  return found;
}

StructureReport structure_predicates(const Graph& g) {
  StructureReport report;
  for (int x = 1; x <= g.order() && report.claw_free; ++x) {
    const VertexSet nb = g.neighbors(x);
    for_each_subset_of_size(nb, 3, [&](VertexSet triple) {
      if (is_independent(g, triple)) report.claw_free = false;
    });
  }
  report.gap_free = !has_induced_c4(complement(g));
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) report.leaves.push_back(v);
  }
  return report;
}

void write_graph(std::ostream& os, const Graph& g) {
  const auto edges = g.edges();
  os << "p " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << "e " << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

Graph read_graph(std::istream& is) {
  std::string line;
  int n = -1;
  long declared = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tag == "p") {
      if (n >= 0) throw InputError(where + "duplicate header");
      if (!(ls >> n >> declared) || n < 0 || declared < 0)
        throw InputError(where + "malformed header");
    } else if (tag == "e") {
      if (n < 0) throw InputError(where + "edge before header");
      int u = 0, v = 0;
      if (!(ls >> u >> v)) throw InputError(where + "malformed edge");
      edges.emplace_back(u, v);
    } else {
      throw InputError(where + "unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw InputError(where + "trailing tokens");
  }
  if (n < 0) throw InputError("missing 'p <n> <m>' header");
  if (static_cast<long>(edges.size()) != declared) {
    throw InputError("header declares " + std::to_string(declared) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::build(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

}  // namespace rindep

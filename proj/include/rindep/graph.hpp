#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rindep/vertex_set.hpp"

namespace rindep {

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on out-of-range endpoints or self-loops. Duplicate
  /// pairs (in either orientation) are merged.
  static Graph build(int n, const std::vector<Edge>& edges);
  static Graph edgeless(int n);
  /// Builds from a full neighbourhood table; validates symmetry.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return adj_.at(v - 1); }
  VertexSet closed_neighbors(int v) const { return neighbors(v).with(v); }
  int degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  int edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}
  std::vector<VertexSet> adj_;
};

/// A graph together with the original label of each of its vertices:
/// labels[i] is the original name of vertex i+1.
struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;

  static LabeledGraph identity(Graph g);
  VertexSet to_original(VertexSet local) const { return remap(local, labels); }
};

struct PerfectEliminationOrder {
  std::vector<int> order;
};

struct StructureReport {
  bool claw_free = true;
  bool gap_free = true;
  std::vector<int> leaves;
};

Graph complement(const Graph& g);

/// G[a], relabelled 1..|a| in increasing order of original label.
LabeledGraph induced_subgraph(const Graph& g, VertexSet a);

/// G minus one vertex, relabelled.
LabeledGraph delete_vertex(const Graph& g, int x);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of G[a] without building the induced subgraph.
std::vector<VertexSet> components_within(const Graph& g, VertexSet a);

/// Vertices of G[a] reachable from `start` (which must lie in a).
VertexSet reach_within(const Graph& g, VertexSet a, int start);

/// Throws InputError on an empty set.
bool is_connected_subset(const Graph& g, VertexSet a);

bool is_clique(const Graph& g, VertexSet a);
bool is_independent(const Graph& g, VertexSet a);

/// Checks that every vertex is simplicial among the vertices after it.
bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& order);

/// Maximum cardinality search followed by verification. Returns the
/// elimination order when g is chordal.
std::optional<PerfectEliminationOrder> is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);

std::vector<int> simplicial_vertices(const Graph& g);

/// The reduced graph used by the co-chordal splitting: drop x, then add
/// every complement edge that avoids N_{g^c}(x). Requires x simplicial in
/// the complement (InputError otherwise). Labels refer to g's vertices.
LabeledGraph tilde_graph(const Graph& g, int x);

enum class Family {
  complete,
  star,
  path,
  cycle,
  path_complement,
  cycle_complement,
  kn_x,
};

/// complete: K_n. star: K_{1,n} with centre 1 and leaves 2..n+1.
/// path: 1-2-...-n. cycle: path plus {n,1} (n >= 3).
/// kn_x: clique on 1..n plus vertex n+1 joined to 1..n-1.
Graph generate_family(Family family, int n);
Family parse_family(const std::string& name);
std::string family_name(Family family);

StructureReport structure_predicates(const Graph& g);

/// True when g contains an induced 4-cycle.
bool has_induced_c4(const Graph& g);

/// Text format: '#' comments, "p <n> <m>", then m lines "e <u> <v>".
void write_graph(std::ostream& os, const Graph& g);
std::string graph_to_string(const Graph& g);
Graph read_graph(std::istream& is);
Graph parse_graph(const std::string& text);

}  // namespace rindep

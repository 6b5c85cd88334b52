#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

/// Simplicial complex on vertices 1..n, stored by its facets.
///
/// Two degenerate complexes are kept apart: the void complex has no faces
/// at all (Stanley-Reisner ideal = R), while the complex {∅} has only the
/// empty face (reached at the end of a collapse).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Facets are reduced to the inclusion-maximal ones and sorted. An empty
  /// facet list yields the void complex.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);
  static SimplicialComplex void_complex(int n);
  static SimplicialComplex simplex(int n);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// Only the empty face remains.
  bool is_empty_face_only() const {
    return facets_.size() == 1 && facets_.front().empty();
  }
  /// Void, or {∅}: nothing nonempty left.
  bool has_no_vertices() const { return is_void() || is_empty_face_only(); }

  bool contains_face(VertexSet s) const;
  /// Facets containing s.
  int facets_containing(VertexSet s) const;

  /// All faces, grouped by cardinality (index = |F|), each group in
  /// lexicographic order. Only feasible for small n.
  std::vector<std::vector<VertexSet>> faces_by_size() const;
  std::size_t face_count() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// True when every connected component of g[s] has at most r vertices.
bool is_r_independent(const Graph& g, VertexSet s, int r);

/// The complex of r-independent sets of g; facets are the maximal ones.
SimplicialComplex ind_r(const Graph& g, int r);

/// (r+1)-subsets inducing a connected subgraph, in lexicographic order:
/// the minimal non-faces of ind_r(g).
std::vector<VertexSet> sr_generators(const Graph& g, int r);

/// Largest facet size minus one. InputError on the void complex.
int complex_dimension(const SimplicialComplex& d);
/// Krull dimension of the Stanley-Reisner ring.
int krull_dimension(const SimplicialComplex& d);

/// Faces F ∩ w. The empty restriction yields the void complex.
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, VertexSet w);

/// "c <n> <num_facets>" then "f <v1> <v2> ..." per facet.
void write_complex(std::ostream& os, const SimplicialComplex& d);
std::string complex_to_string(const SimplicialComplex& d);
SimplicialComplex read_complex(std::istream& is);
SimplicialComplex parse_complex(const std::string& text);

}  // namespace rindep

#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace rindep {

/// Square-free monomial ideal in K[x_1..x_n], kept as its minimal generator
/// supports in lexicographic order. No generators is the zero ideal; the
/// single empty support is the unit ideal.
class SquareFreeIdeal {
 public:
  SquareFreeIdeal() = default;
  /// Minimalises the given supports.
  SquareFreeIdeal(int n, std::vector<VertexSet> generators);

  static SquareFreeIdeal zero(int n) { return SquareFreeIdeal(n, {}); }
  static SquareFreeIdeal unit(int n) { return SquareFreeIdeal(n, {VertexSet{}}); }
  /// <x_v : v in vars>
  static SquareFreeIdeal variables(int n, VertexSet vars);

  int ambient() const { return n_; }
  const std::vector<VertexSet>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
  bool is_principal() const { return gens_.size() == 1 && !gens_.front().empty(); }
  /// Union of all supports.
  VertexSet support() const;

  /// Whether x_S lies in the ideal.
  bool contains_monomial(VertexSet s) const;
  /// Ideal containment: every generator of `other` lies in this ideal.
  bool contains(const SquareFreeIdeal& other) const;
  /// x * I; the zero ideal stays zero.
  SquareFreeIdeal times_variable(int x) const;
  SquareFreeIdeal operator+(const SquareFreeIdeal& other) const;

  bool operator==(const SquareFreeIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> gens_;
};

/// Binary record of a vertex splitting I = x*J1 + J2 down to leaves that
/// are zero, unit or principal. Every node stores its ideal.
class SplitTree {
 public:
  enum class Kind { leaf_zero, leaf_unit, leaf_principal, split };

  static SplitTree leaf(const SquareFreeIdeal& ideal);
  static SplitTree split(SquareFreeIdeal ideal, int pivot, SplitTree left, SplitTree right);

  Kind kind() const { return kind_; }
  bool is_leaf() const { return kind_ != Kind::split; }
  const SquareFreeIdeal& ideal() const { return ideal_; }
  /// Split variable; 0 on leaves.
  int pivot() const { return pivot_; }
  /// The J1 subtree (ideal multiplied by the pivot).
  const SplitTree& left() const { return children_.at(0); }
  /// The J2 subtree.
  const SplitTree& right() const { return children_.at(1); }

  std::size_t node_count() const;
  int depth() const;

 private:
  Kind kind_ = Kind::leaf_zero;
  SquareFreeIdeal ideal_;
  int pivot_ = 0;
  std::vector<SplitTree> children_;
};

/// Stanley-Reisner ideal of ind_r(g).
SquareFreeIdeal ideal_of(const Graph& g, int r);

/// True iff gens(i) is the disjoint union of gens(x*j1) and gens(j2),
/// j2 ⊆ j1, and x occurs in no support of j1 or j2.
bool verify_split_node(const SquareFreeIdeal& i, int x, const SquareFreeIdeal& j1,
                       const SquareFreeIdeal& j2);

/// Checks every split node of the tree, and that each node's ideal equals
/// the one rebuilt from its children.
bool verify_split_tree(const SplitTree& t);

/// Picks the pivot among candidate vertices (original labels, ascending,
/// all simplicial in the complement of the current graph).
using PivotChooser = std::function<int(const std::vector<int>& candidates)>;

/// The default chooser: smallest candidate.
int smallest_pivot(const std::vector<int>& candidates);

/// Vertex splitting of I_r(g) for co-chordal g. For r >= 2 the pivot x is a
/// simplicial vertex of g^c, J1 = I_{r-1}(tilde_graph(g, x)) and
/// J2 = I_r(g - x); for r = 1, J1 is the variable ideal on N_g(x).
/// Throws InputError when g^c is not chordal and InconsistencyError if a
/// node fails verification.
SplitTree cochordal_split_tree(const Graph& g, int r,
                               const PivotChooser& choose = smallest_pivot);

/// Splitting chain of an ideal generated by variables.
SplitTree variable_split_tree(const SquareFreeIdeal& vars);

struct SplitSearchResult {
  enum class Status { found, not_splittable, budget_exhausted };
  Status status = Status::not_splittable;
  std::optional<SplitTree> tree;
  std::size_t nodes_visited = 0;
};

/// Exhaustive search over pivots using the quotient splitting
/// J1 = min{m/x : x | m}, J2 = {m : x ∤ m}. `not_splittable` is only
/// relative to that choice of J1.
SplitSearchResult generic_split_search(const SquareFreeIdeal& ideal,
                                       std::size_t budget = 1'000'000);

/// Indented text, two spaces per level, one node per line:
/// "split x=<v>", "leaf zero", "leaf unit", "leaf principal <v1> ... <vk>".
void write_split_tree(std::ostream& os, const SplitTree& t);
std::string split_tree_to_string(const SplitTree& t);
/// Rebuilds the tree (and every node's ideal) in K[x_1..x_n].
SplitTree parse_split_tree(const std::string& text, int n);

}  // namespace rindep

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rindep/complex.hpp"
#include "rindep/graph.hpp"

namespace rindep {

/// One elementary collapse: remove every face containing `sigma`, where
/// `tau` is the only facet above it.
struct FreePair {
  VertexSet sigma;
  VertexSet tau;
  bool operator==(const FreePair&) const = default;
};

struct CollapseSequence {
  int d = 1;
  std::vector<FreePair> steps;
  bool operator==(const CollapseSequence&) const = default;
};

/// Mutable facet-list view of a complex used while replaying collapses.
class CollapseState {
 public:
  explicit CollapseState(const SimplicialComplex& start);

  const std::vector<VertexSet>& facets() const { return facets_; }
  /// The facet containing sigma when exactly one does.
  std::optional<VertexSet> unique_facet(VertexSet sigma) const;
  /// Removes all faces containing sigma (which must lie in tau alone).
  void collapse(VertexSet sigma, VertexSet tau);
  bool is_empty() const;
  SimplicialComplex snapshot() const;

 private:
  int n_;
  std::vector<VertexSet> facets_;
};

struct CollapseVerdict {
  bool valid = false;
  /// Index of the first step that failed; equal to steps.size() when the
  /// steps all replay but the complex is not empty at the end.
  std::optional<std::size_t> bad_step;
  std::string reason;
};

/// Replays the sequence on d0 with parameter d.
CollapseVerdict verify_collapse(const SimplicialComplex& d0, const CollapseSequence& seq, int d);

/// Explicit r-collapse of ind_r(g) for co-chordal g: first the faces F with
/// g[F] connected, by decreasing |F| from r down to 2 (lexicographic within
/// a size), each against its unique facet; what remains is ind_1(g), which
/// is emptied one simplicial vertex of g^c at a time. Each intermediate
/// claim is checked and an InconsistencyError raised if it fails.
CollapseSequence chordal_collapse_sequence(const Graph& g, int r);

/// The same first phase for any g whose complement has no induced 4-cycle,
/// followed by a search-based collapse of the leftover ind_1(g) at
/// parameter r. Returns nullopt if the residual search fails or runs out of
/// budget.
std::optional<CollapseSequence> gap_free_collapse_sequence(const Graph& g, int r,
                                                           std::size_t budget = 1'000'000);

struct CollapseSearchResult {
  enum class Status { found, not_collapsible, budget_exhausted };
  Status status = Status::not_collapsible;
  std::optional<CollapseSequence> sequence;
  std::size_t states_visited = 0;
};

/// Depth-first search over free pairs with memoisation of dead states.
CollapseSearchResult search_d_collapse(const SimplicialComplex& d0, int d,
                                       std::size_t budget = 1'000'000);

/// Certificate: "d <param>" then "s <sigma> | <tau>" per step.
void write_certificate(std::ostream& os, const CollapseSequence& seq);
std::string certificate_to_string(const CollapseSequence& seq);
CollapseSequence parse_certificate(const std::string& text);

}  // namespace rindep

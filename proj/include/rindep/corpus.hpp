#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rindep/graph.hpp"
#include "rindep/ideal.hpp"
#include "rindep/linalg.hpp"

namespace rindep {

/// Random draws use mt19937_64 with modular reduction so that a seed gives
/// the same corpus on every platform.
using Rng = std::mt19937_64;

/// Uniform-ish value in [0, bound); bound must be positive.
std::uint64_t draw_below(Rng& rng, std::uint64_t bound);

/// Complement of a random chordal graph. The chordal graph is grown from a
/// random vertex order: each vertex is joined to a clique among the
/// vertices placed after it, so the order is a perfect elimination order.
Graph random_cochordal_graph(int n, Rng& rng);

struct BlockDeletedGraph {
  Graph graph;
  /// block[v-1] is the block index of vertex v.
  std::vector<int> block;
  /// Largest block size.
  int s = 0;
};

/// K_n with vertices split into random blocks and a random subset of the
/// edges inside each block removed.
BlockDeletedGraph random_block_deleted_complete(int n, Rng& rng);

/// Pivot chooser drawing uniformly among the candidates; the returned
/// object owns its generator.
PivotChooser seeded_pivot_chooser(std::uint64_t seed);

struct CorpusSpec {
  enum class Kind { random_cochordal, random_block_deleted_complete, named };
  Kind kind = Kind::random_cochordal;
  /// Ignored for named families, which yield one graph per n in range.
  int count = 100;
  int n_min = 3;
  int n_max = 7;
  Family family = Family::complete;
  std::uint64_t seed = 1;
};

CorpusSpec::Kind parse_corpus_kind(const std::string& name);
std::string corpus_kind_name(CorpusSpec::Kind kind);

struct CorpusItem {
  Graph graph;
  /// Largest block size for block-deleted items, 0 otherwise.
  int block_size = 0;
};

/// Deterministic in its argument. InputError when the n range is outside 1..12.
std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec);

/// Cross-checks selectable for a corpus run (bit flags).
enum CorpusCheck : unsigned {
  check_split_oracle = 1U << 0,  // split-tree table equals the Hochster table
  check_regularity = 1U << 1,    // reg(I_r) = r + 1
  check_collapse = 1U << 2,      // constructed collapse verifies; Leray number <= r
  check_leray_reg = 1U << 3,     // reg(I_r) = Leray number + 1 on the oracle output
  check_block = 1U << 4,         // ind_r(H) = ind_r(K_n) for r >= s
  check_all = (1U << 5) - 1,
};

/// Parses a comma-separated list of check names, or "all".
unsigned parse_checks(const std::string& list);
std::vector<std::string> check_names(unsigned checks);

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct CorpusFailure {
  std::size_t item = 0;
  std::string check;
  int r = 0;
  std::string detail;
  std::string edges;
};

struct CorpusReport {
  CorpusSpec spec;
  std::size_t items = 0;
  std::vector<CheckTally> tallies;
  std::vector<CorpusFailure> failures;

  bool ok() const { return failures.empty(); }
  /// Byte-identical for identical inputs.
  std::string to_text() const;
};

/// Runs the selected checks on every item and every relevant r. Checks that
/// need a co-chordal graph are skipped on items that are not. Items are
/// spread over `jobs` threads; the report does not depend on `jobs`.
CorpusReport run_corpus(const CorpusSpec& spec, unsigned checks, const FieldSpec& field = FieldSpec(2),
                        int jobs = 1);

}  // namespace rindep

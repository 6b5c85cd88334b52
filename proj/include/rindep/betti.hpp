#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rindep/ideal.hpp"

namespace rindep {

/// Graded Betti numbers of R/I, stored sparsely: (i, j) -> beta_{i,j}(R/I).
/// Zero entries are never stored.
class BettiTable {
 public:
  enum class Provenance { recursion, closed_form, oracle, parsed };
  using Key = std::pair<int, int>;

  BettiTable() = default;
  BettiTable(int n, Provenance provenance) : n_(n), provenance_(provenance) {}

  int ambient() const { return n_; }
  Provenance provenance() const { return provenance_; }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t value);
  void set(int i, int j, std::uint64_t value);
  bool all_zero() const { return entries_.empty(); }
  /// Largest homological index with a nonzero entry (-1 when all zero).
  int projective_dimension() const;

  /// Compares entries only.
  bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }

  /// beta_{i,j}(I) = beta_{i+1,j}(R/I) for i >= 0.
  std::map<Key, std::uint64_t> ideal_entries() const;

 private:
  int n_ = 0;
  Provenance provenance_ = Provenance::recursion;
  std::map<Key, std::uint64_t> entries_;
};

std::string provenance_name(BettiTable::Provenance p);

/// Betti numbers via the splitting recursion
///   beta_{i,j}(I) = beta_{i,j-1}(J1) + beta_{i,j}(J2) + beta_{i-1,j-1}(J2)
/// evaluated bottom-up, then shifted to the R/I convention.
BettiTable betti_from_split_tree(const SplitTree& t);

struct ClosedFormFamily {
  enum class Kind { variables, complete, star, kn_x, path_complement };
  Kind kind = Kind::complete;
  /// k for variables(k), n otherwise.
  int n = 0;
  /// Unused for variables.
  int r = 0;

  static ClosedFormFamily variables(int k) { return {Kind::variables, k, 0}; }
  static ClosedFormFamily complete(int n, int r) { return {Kind::complete, n, r}; }
  static ClosedFormFamily star(int n, int r) { return {Kind::star, n, r}; }
  static ClosedFormFamily kn_x(int n, int r) { return {Kind::kn_x, n, r}; }
  static ClosedFormFamily path_complement(int n, int r) { return {Kind::path_complement, n, r}; }
};

/// Closed-form Betti table of R/I for the named family; all counts are
/// exact integers. InputError for r = 0 on a graph family.
BettiTable closed_form_betti(const ClosedFormFamily& family);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// max{j - i : beta_{i,j} != 0}, in the ideal convention when `of_ideal`
/// (nullopt for the zero or unit ideal), otherwise for R/I (nullopt only
/// for the unit ideal).
std::optional<int> regularity(const BettiTable& t, bool of_ideal);

/// Every nonzero beta_{i,j}(I) sits on j = i + d. Vacuous on empty tables.
bool has_linear_resolution(const BettiTable& t, int d);

/// "beta <i> <j> <value>" lines in (i, j) order.
void write_betti_machine(std::ostream& os, const BettiTable& t);
std::string betti_to_machine(const BettiTable& t);
BettiTable parse_betti_machine(const std::string& text, int n = 0);

/// Grid with columns i and rows j - i, dots for zeros, plus a total row.
std::string betti_to_grid(const BettiTable& t);

}  // namespace rindep

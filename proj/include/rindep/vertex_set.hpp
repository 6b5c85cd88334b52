#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace rindep {

/// Maximum number of vertices a VertexSet can address.
inline constexpr int kMaxVertices = 64;

/// A subset of {1..64} stored as a bit mask; vertex v lives at bit v-1.
///
/// Used for graph neighbourhoods, faces of complexes and supports of
/// square-free monomials alike.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet from_vector(const std::vector<int>& vertices);
  /// {1..n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet singleton(int v) {
    return VertexSet(std::uint64_t{1} << (v - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest vertex; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  /// Largest vertex; undefined on the empty set.
  constexpr int max() const { return 64 - std::countl_zero(bits_); }

  constexpr VertexSet& insert(int v) {
    bits_ |= std::uint64_t{1} << (v - 1);
    return *this;
  }
  constexpr VertexSet& erase(int v) {
    bits_ &= ~(std::uint64_t{1} << (v - 1));
    return *this;
  }
  constexpr VertexSet with(int v) const { return VertexSet(bits_).insert(v); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_).erase(v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  /// Iterates vertices in increasing order.
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{1,3,4}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted vertex lists: {1,2} < {1,2,5} < {1,3} < {2}.
bool lex_less(VertexSet a, VertexSet b);

/// Sorts a list of sets into lexicographic order and drops duplicates.
void sort_lex_unique(std::vector<VertexSet>& sets);

/// Keeps only the inclusion-minimal sets, in lexicographic order.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);

/// Keeps only the inclusion-maximal sets, in lexicographic order.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);

/// Calls fn(S) for every k-subset S of `ground`, in increasing bit order.
void for_each_subset_of_size(VertexSet ground, int k,
                             const std::function<void(VertexSet)>& fn);

/// Maps a set over local labels 1..m to the labels given by `labels`
/// (labels[i] is the image of local vertex i+1).
VertexSet remap(VertexSet local, const std::vector<int>& labels);

}  // namespace rindep

template <>
struct std::hash<rindep::VertexSet> {
  std::size_t operator()(rindep::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

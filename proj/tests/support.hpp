#pragma once

// Test-side generators and brute-force oracles. Nothing here calls into the
// library's algorithms beyond the plain data types, so agreement between
// the two is meaningful.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rindep/graph.hpp"
#include "rindep/vertex_set.hpp"

namespace testing_support {

/// splitmix64; small, seedable and independent of the library's generator.
class SeededGen {
 public:
  explicit SeededGen(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const rindep::Graph& g) {
  const int n = g.order();
  Matrix a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) a[u - 1][v - 1] = a[v - 1][u - 1] = true;
  return a;
}

/// Erdos-Renyi style graph with edge probability num/den.
inline rindep::Graph random_graph(SeededGen& gen, int n, int num = 1, int den = 2) {
  std::vector<rindep::Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (gen.chance(num, den)) edges.emplace_back(u, v);
  return rindep::Graph::build(n, edges);
}

/// Complement of a chordal graph grown by adding simplicial vertices: each
/// new vertex is joined to a subset of a random existing clique.
inline rindep::Graph random_cochordal(SeededGen& gen, int n) {
  std::vector<std::vector<int>> cliques;  // known cliques of the chordal graph
  std::vector<rindep::Edge> edges;
  for (int v = 1; v <= n; ++v) {
    std::vector<int> attach;
    if (!cliques.empty() && gen.chance(3, 4)) {
      const auto& c = cliques[gen.below(static_cast<int>(cliques.size()))];
      for (int w : c)
        if (gen.chance(2, 3)) attach.push_back(w);
    }
    for (int w : attach) edges.emplace_back(w, v);
    attach.push_back(v);
    cliques.push_back(attach);
  }
  const rindep::Graph h = rindep::Graph::build(n, edges);
  // Complement by hand.
  std::vector<rindep::Edge> comp;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!h.adjacent(u, v)) comp.emplace_back(u, v);
  return rindep::Graph::build(n, comp);
}

/// Vertex bitmask helpers on plain integers (bit v-1 for vertex v).
inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 32; ++b)
    if (mask >> b & 1U) out.push_back(b + 1);
  return out;
}

/// Largest component size of the induced subgraph, by breadth-first search.
inline int largest_component(const Matrix& a, std::uint32_t mask) {
  std::uint32_t seen = 0;
  int best = 0;
  for (int s : members(mask)) {
    if (seen >> (s - 1) & 1U) continue;
    std::vector<int> queue{s};
    seen |= 1U << (s - 1);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int u = queue[k];
      for (int w : members(mask)) {
        if (a[u - 1][w - 1] && !(seen >> (w - 1) & 1U)) {
          seen |= 1U << (w - 1);
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, static_cast<int>(queue.size()));
  }
  return best;
}

/// All faces of ind_r as masks, by exhaustion over the power set.
inline std::vector<std::uint32_t> brute_faces(const rindep::Graph& g, int r) {
  const Matrix a = adjacency(g);
  std::vector<std::uint32_t> faces;
  for (std::uint32_t m = 0; m < (1U << g.order()); ++m)
    if (largest_component(a, m) <= r) faces.push_back(m);
  return faces;
}

/// Facets of ind_r as masks, sorted numerically.
inline std::vector<std::uint32_t> brute_facets(const rindep::Graph& g, int r) {
  const auto faces = brute_faces(g, r);
  std::vector<bool> is_face(1U << g.order(), false);
  for (auto f : faces) is_face[f] = true;
  std::vector<std::uint32_t> facets;
  for (auto f : faces) {
    bool maximal = true;
    for (int v = 0; v < g.order(); ++v)
      if (!(f >> v & 1U) && is_face[f | (1U << v)]) maximal = false;
    if (maximal) facets.push_back(f);
  }
  return facets;
}

inline std::vector<std::uint32_t> masks_of(const std::vector<rindep::VertexSet>& sets) {
  std::vector<std::uint32_t> out;
  for (auto s : sets) out.push_back(static_cast<std::uint32_t>(s.bits()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Chordality by repeatedly deleting a simplicial vertex.
inline bool brute_chordal(const rindep::Graph& g) {
  const Matrix a = adjacency(g);
  std::uint32_t alive = (1U << g.order()) - 1;
  while (alive != 0) {
    bool removed = false;
    for (int v : members(alive)) {
      std::vector<int> nb;
      for (int w : members(alive))
        if (a[v - 1][w - 1]) nb.push_back(w);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!a[nb[i] - 1][nb[j] - 1]) clique = false;
      if (clique) {
        alive &= ~(1U << (v - 1));
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

/// Rank over GF(2) of a dense 0/1 matrix by plain row reduction.
inline int rank_gf2_dense(std::vector<std::vector<int>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && (m[p][c] & 1) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && (m[r][c] & 1))
        for (int k = 0; k < cols; ++k) m[r][k] ^= m[rank][k] & 1;
    ++rank;
  }
  return rank;
}

/// Betti numbers of R/I_Δ over GF(2) for Δ = ind_r(g), summed straight from
/// Hochster's formula with dense matrices. Keys are (i, j) in the R/I
/// convention; (0, 0) is included.
inline std::map<std::pair<int, int>, std::uint64_t> brute_betti(const rindep::Graph& g, int r) {
  const int n = g.order();
  const auto faces = brute_faces(g, r);
  std::map<std::pair<int, int>, std::uint64_t> out{{{0, 0}, 1}};
  for (std::uint32_t w = 1; w < (1U << n); ++w) {
    // Faces of Δ[w] grouped by size, including the empty face.
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    for (auto f : faces)
      if ((f & ~w) == 0) by_size[__builtin_popcount(f)].push_back(f);
    const int j = __builtin_popcount(w);
    std::vector<int> ranks(n + 2, 0);
    for (int s = 1; s <= n; ++s) {
      if (by_size[s].empty() || by_size[s - 1].empty()) continue;
      std::vector<std::vector<int>> m(by_size[s].size(), std::vector<int>(by_size[s - 1].size(), 0));
      for (std::size_t x = 0; x < by_size[s].size(); ++x)
        for (std::size_t y = 0; y < by_size[s - 1].size(); ++y) {
          const auto lo = by_size[s - 1][y];
          if ((lo & ~by_size[s][x]) == 0) m[x][y] = 1;
        }
      ranks[s] = rank_gf2_dense(std::move(m));
    }
    for (int s = 0; s <= n; ++s) {
      const int h = static_cast<int>(by_size[s].size()) - ranks[s] - ranks[s + 1];
      if (h <= 0) continue;
      const int k = s - 1;  // homological degree of size-s faces
      const int i = j - k - 2;
      out[{i + 1, j}] += static_cast<std::uint64_t>(h);
    }
  }
  return out;
}

}  // namespace testing_support

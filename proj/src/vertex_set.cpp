#include "rindep/vertex_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rindep {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex label out of range");
    insert(v);
  }
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex label out of range");
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  // Both lists agree below d; the one holding d continues with d, the other
  // continues with something larger or stops.
  const std::uint64_t above = (d == 63) ? 0 : (~std::uint64_t{0} << (d + 1));
  if ((a.bits() >> d) & 1U) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

void sort_lex_unique(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](VertexSet k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  sort_lex_unique(kept);
  return kept;
}

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](VertexSet k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(s);
  }
  sort_lex_unique(kept);
  return kept;
}

void for_each_subset_of_size(VertexSet ground, int k,
                             const std::function<void(VertexSet)>& fn) {
  const std::vector<int> items = ground.to_vector();
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(VertexSet{});
    return;
  }
  // Gosper's hack over index masks of width m.
  using Wide = unsigned __int128;
  const Wide limit = Wide{1} << m;
  for (Wide idx = (Wide{1} << k) - 1; idx < limit;) {
    VertexSet s;
    for (int i = 0; i < m; ++i) {
      if ((idx >> i) & 1U) s.insert(items[i]);
    }
    fn(s);
    const Wide c = idx & (~idx + 1);
    const Wide r = idx + c;
    idx = (((r ^ idx) >> 2) / c) | r;
  }
}

VertexSet remap(VertexSet local, const std::vector<int>& labels) {
  VertexSet out;
  for (int v : local) out.insert(labels.at(v - 1));
  return out;
}

}  // namespace rindep

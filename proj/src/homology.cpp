#include "rindep/homology.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "rindep/error.hpp"

namespace rindep {

std::uint64_t ReducedHomology::at(int k) const {
  const int idx = k + 1;
  if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
  return dims[idx];
}

int ReducedHomology::top_nonzero() const {
  for (int idx = static_cast<int>(dims.size()) - 1; idx >= 0; --idx) {
    if (dims[idx] != 0) return idx - 1;
  }
  return -2;
}

namespace {

SparseMatrix boundary_matrix(const std::vector<VertexSet>& faces,
                             const std::vector<VertexSet>& facets_below) {
  std::unordered_map<VertexSet, int> index;
  index.reserve(facets_below.size());
  for (std::size_t c = 0; c < facets_below.size(); ++c) index.emplace(facets_below[c], static_cast<int>(c));
  SparseMatrix m;
  m.rows = static_cast<int>(faces.size());
  m.cols = static_cast<int>(facets_below.size());
  m.row_entries.resize(faces.size());
  for (std::size_t r = 0; r < faces.size(); ++r) {
    int sign = 1;
    for (int v : faces[r]) {
      auto it = index.find(faces[r].without(v));
      if (it == index.end()) throw InconsistencyError("face set is not closed under subsets");
      m.row_entries[r].emplace_back(it->second, sign);
      sign = -sign;
    }
  }
  return m;
}

}  // namespace

ReducedHomology reduced_homology_dims(const SimplicialComplex& d, const FieldSpec& field) {
  ReducedHomology out;
  if (d.is_void()) {
    out.void_complex = true;
    return out;
  }
  const auto faces = d.faces_by_size();
  const int groups = static_cast<int>(faces.size());  // sizes 0..top
  // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<long long> ranks(groups + 1, 0);
  for (int s = 1; s < groups; ++s) {
    ranks[s] = static_cast<long long>(rank(boundary_matrix(faces[s], faces[s - 1]), field));
  }
  long long euler_faces = 0, euler_homology = 0;
  out.dims.resize(groups);
  for (int s = 0; s < groups; ++s) {
    const long long count = static_cast<long long>(faces[s].size());
    const long long h = count - ranks[s] - ranks[s + 1];
    if (h < 0) throw InconsistencyError("negative homology dimension: boundary ranks are inconsistent");
    out.dims[s] = static_cast<std::uint64_t>(h);
    const long long sign = (s % 2 == 1) ? 1 : -1;  // dimension s-1
    euler_faces += sign * count;
    euler_homology += sign * h;
  }
  if (euler_faces != euler_homology) throw InconsistencyError("Euler-Poincaré check failed");
  return out;
}

OracleReport run_oracle(const SimplicialComplex& d, const FieldSpec& field, int max_vertices) {
  const int n = d.vertex_count();
  if (n > max_vertices) {
    throw InputError("oracle limited to " + std::to_string(max_vertices) + " vertices, complex has " +
                     std::to_string(n));
  }
  OracleReport report{BettiTable(n, BettiTable::Provenance::oracle), 0};
  if (d.is_void()) return report;
  report.betti.set(0, 0, 1);
  for (int j = 1; j <= n; ++j) {
    for_each_subset_of_size(VertexSet::range(n), j, [&](VertexSet w) {
      const ReducedHomology h = reduced_homology_dims(induced_subcomplex(d, w), field);
      for (int k = -1; k + 1 < static_cast<int>(h.dims.size()); ++k) {
        const std::uint64_t dim = h.at(k);
        if (dim == 0) continue;
        const int i = j - k - 2;
        if (i < 0) throw InconsistencyError("Hochster summand with negative homological index");
        report.betti.add(i + 1, j, dim);
        if (k >= 0) report.leray = std::max(report.leray, k + 1);
      }
    });
  }
  return report;
}

BettiTable hochster_betti(const SimplicialComplex& d, const FieldSpec& field, int max_vertices) {
  return run_oracle(d, field, max_vertices).betti;
}

int leray_number(const SimplicialComplex& d, const FieldSpec& field, int max_vertices) {
  return run_oracle(d, field, max_vertices).leray;
}

}  // namespace rindep

#include "rindep/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "rindep/error.hpp"

namespace rindep {

namespace {

// Faces are materialised through a 2^n bitmap; beyond this the caller is
// asking for something the facet representation exists to avoid.
constexpr int kMaxEnumerableVertices = 24;

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
  const VertexSet all = VertexSet::range(n);
  for (VertexSet f : facets) {
    if (!f.is_subset_of(all)) throw InputError("facet " + f.to_string() + " outside 1..n");
  }
  SimplicialComplex d;
  d.n_ = n;
  d.facets_ = maximal_sets(std::move(facets));
  return d;
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return from_facets(n, {}); }

SimplicialComplex SimplicialComplex::simplex(int n) {
  return from_facets(n, {VertexSet::range(n)});
}

bool SimplicialComplex::contains_face(VertexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return s.is_subset_of(f); });
}

int SimplicialComplex::facets_containing(VertexSet s) const {
  return static_cast<int>(std::count_if(facets_.begin(), facets_.end(),
                                        [&](VertexSet f) { return s.is_subset_of(f); }));
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
  if (n_ > kMaxEnumerableVertices) {
    throw InputError("face enumeration limited to " +
                     std::to_string(kMaxEnumerableVertices) + " vertices");
  }
  std::vector<std::vector<VertexSet>> out;
  if (is_void()) return out;
  std::vector<bool> seen(std::size_t{1} << n_, false);
  for (VertexSet f : facets_) {
    // Walk the subsets of f.
    const std::uint64_t full = f.bits();
    std::uint64_t sub = full;
    while (true) {
      seen[sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  int top = 0;
  for (VertexSet f : facets_) top = std::max(top, f.size());
  out.resize(top + 1);
  for (std::uint64_t bits = 0; bits < seen.size(); ++bits) {
    if (seen[bits]) out[std::popcount(bits)].push_back(VertexSet(bits));
  }
  for (auto& group : out) std::sort(group.begin(), group.end(), lex_less);
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t total = 0;
  for (const auto& group : faces_by_size()) total += group.size();
  return total;
}

bool is_r_independent(const Graph& g, VertexSet s, int r) {
  VertexSet rest = s;
  while (!rest.empty()) {
    const VertexSet comp = reach_within(g, s, rest.min());
    if (comp.size() > r) return false;
    rest -= comp;
  }
  return true;
}

SimplicialComplex ind_r(const Graph& g, int r) {
  if (r < 1) throw InputError("r must be positive");
  const int n = g.order();
  if (r >= n) return SimplicialComplex::simplex(n);
  if (n > kMaxEnumerableVertices) {
    throw InputError("ind_r enumeration limited to " +
                     std::to_string(kMaxEnumerableVertices) + " vertices");
  }
  // Depth-first include/exclude search over vertices 1..n. Faces are closed
  // under subsets, so a vertex that cannot join the current set never can
  // later either; only excluded-but-addable vertices need the final
  // maximality check.
  std::vector<VertexSet> facets;
  auto recurse = [&](auto&& self, int v, VertexSet current, VertexSet skipped) -> void {
    if (v > n) {
      for (int u : skipped) {
        if (is_r_independent(g, current.with(u), r)) return;
      }
      facets.push_back(current);
      return;
    }
    // A skipped vertex that is still addable with everything chosen so far
    // and has no neighbour among the undecided ones stays addable forever.
    for (int u : skipped) {
      const VertexSet undecided = VertexSet::range(n) - VertexSet::range(v - 1);
      if (!g.neighbors(u).intersects(undecided) &&
          !g.neighbors(u).intersects(current)) {
        return;
      }
    }
    const VertexSet with_v = current.with(v);
    if (is_r_independent(g, with_v, r)) {
      self(self, v + 1, with_v, skipped);
      self(self, v + 1, current, skipped.with(v));
    } else {
      self(self, v + 1, current, skipped);
    }
  };
  recurse(recurse, 1, VertexSet{}, VertexSet{});
  return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<VertexSet> sr_generators(const Graph& g, int r) {
  if (r < 1) throw InputError("r must be positive");
  std::vector<VertexSet> gens;
  for_each_subset_of_size(g.vertices(), r + 1, [&](VertexSet a) {
    if (is_connected_subset(g, a)) gens.push_back(a);
  });
  std::sort(gens.begin(), gens.end(), lex_less);
  return gens;
}

int complex_dimension(const SimplicialComplex& d) {
  if (d.is_void()) throw InputError("the void complex has no dimension");
  int top = 0;
  for (VertexSet f : d.facets()) top = std::max(top, f.size());
  return top - 1;
}

int krull_dimension(const SimplicialComplex& d) { return complex_dimension(d) + 1; }

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, VertexSet w) {
  if (w.empty() || d.is_void()) return SimplicialComplex::void_complex(d.vertex_count());
  std::vector<VertexSet> restricted;
  restricted.reserve(d.facets().size());
  for (VertexSet f : d.facets()) restricted.push_back(f & w);
  return SimplicialComplex::from_facets(d.vertex_count(), std::move(restricted));
}

void write_complex(std::ostream& os, const SimplicialComplex& d) {
  os << "c " << d.vertex_count() << ' ' << d.facets().size() << '\n';
  for (VertexSet f : d.facets()) {
    os << 'f';
    for (int v : f) os << ' ' << v;
    os << '\n';
  }
}

std::string complex_to_string(const SimplicialComplex& d) {
  std::ostringstream os;
  write_complex(os, d);
  return os.str();
}

SimplicialComplex read_complex(std::istream& is) {
  std::string line;
  int n = -1;
  long declared = -1;
  std::vector<VertexSet> facets;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tag == "c") {
      if (n >= 0) throw InputError(where + "duplicate header");
      if (!(ls >> n >> declared) || n < 0 || n > kMaxVertices || declared < 0)
        throw InputError(where + "malformed header");
    } else if (tag == "f") {
      if (n < 0) throw InputError(where + "facet before header");
      VertexSet f;
      int v = 0;
      while (ls >> v) {
        if (v < 1 || v > n) throw InputError(where + "vertex out of range");
        f.insert(v);
      }
      if (!ls.eof()) throw InputError(where + "malformed facet");
      facets.push_back(f);
    } else {
      throw InputError(where + "unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw InputError("missing 'c <n> <num_facets>' header");
  if (static_cast<long>(facets.size()) != declared) {
    throw InputError("header declares " + std::to_string(declared) + " facets, found " +
                     std::to_string(facets.size()));
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream is(text);
  return read_complex(is);
}

}  // namespace rindep

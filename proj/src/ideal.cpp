#include "rindep/ideal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rindep/complex.hpp"
#include "rindep/error.hpp"

namespace rindep {

SquareFreeIdeal::SquareFreeIdeal(int n, std::vector<VertexSet> generators) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw InputError("variable count out of range");
  const VertexSet all = VertexSet::range(n);
  for (VertexSet g : generators) {
    if (!g.is_subset_of(all)) throw InputError("generator " + g.to_string() + " outside 1..n");
  }
  gens_ = minimal_sets(std::move(generators));
}

SquareFreeIdeal SquareFreeIdeal::variables(int n, VertexSet vars) {
  std::vector<VertexSet> gens;
  for (int v : vars) gens.push_back(VertexSet::singleton(v));
  return SquareFreeIdeal(n, std::move(gens));
}

VertexSet SquareFreeIdeal::support() const {
  VertexSet s;
  for (VertexSet g : gens_) s |= g;
  return s;
}

bool SquareFreeIdeal::contains_monomial(VertexSet s) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](VertexSet g) { return g.is_subset_of(s); });
}

bool SquareFreeIdeal::contains(const SquareFreeIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](VertexSet g) { return contains_monomial(g); });
}

SquareFreeIdeal SquareFreeIdeal::times_variable(int x) const {
  std::vector<VertexSet> gens;
  gens.reserve(gens_.size());
  for (VertexSet g : gens_) gens.push_back(g.with(x));
  return SquareFreeIdeal(n_, std::move(gens));
}

SquareFreeIdeal SquareFreeIdeal::operator+(const SquareFreeIdeal& other) const {
  std::vector<VertexSet> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return SquareFreeIdeal(std::max(n_, other.n_), std::move(gens));
}

SplitTree SplitTree::leaf(const SquareFreeIdeal& ideal) {
  SplitTree t;
  t.ideal_ = ideal;
  if (ideal.is_zero()) {
    t.kind_ = Kind::leaf_zero;
  } else if (ideal.is_unit()) {
    t.kind_ = Kind::leaf_unit;
  } else if (ideal.is_principal()) {
    t.kind_ = Kind::leaf_principal;
  } else {
    throw InputError("a leaf must be a zero, unit or principal ideal");
  }
  return t;
}

SplitTree SplitTree::split(SquareFreeIdeal ideal, int pivot, SplitTree left, SplitTree right) {
  SplitTree t;
  t.kind_ = Kind::split;
  t.ideal_ = std::move(ideal);
  t.pivot_ = pivot;
  t.children_.push_back(std::move(left));
  t.children_.push_back(std::move(right));
  return t;
}

std::size_t SplitTree::node_count() const {
  std::size_t total = 1;
  for (const auto& c : children_) total += c.node_count();
  return total;
}

int SplitTree::depth() const {
  int deepest = 0;
  for (const auto& c : children_) deepest = std::max(deepest, 1 + c.depth());
  return deepest;
}

SquareFreeIdeal ideal_of(const Graph& g, int r) {
  return SquareFreeIdeal(g.order(), sr_generators(g, r));
}

bool verify_split_node(const SquareFreeIdeal& i, int x, const SquareFreeIdeal& j1,
                       const SquareFreeIdeal& j2) {
  if (j1.support().contains(x) || j2.support().contains(x)) return false;
  if (!j1.contains(j2)) return false;
  std::vector<VertexSet> joined;
  for (VertexSet g : j1.generators()) joined.push_back(g.with(x));
  joined.insert(joined.end(), j2.generators().begin(), j2.generators().end());
  std::sort(joined.begin(), joined.end(), lex_less);
  // x is in every left support and in no right support, so a duplicate
  // can only come from a malformed input; reject it as non-disjoint.
  if (std::adjacent_find(joined.begin(), joined.end()) != joined.end()) return false;
  return joined == i.generators();
}

bool verify_split_tree(const SplitTree& t) {
  if (t.is_leaf()) {
    switch (t.kind()) {
      case SplitTree::Kind::leaf_zero: return t.ideal().is_zero();
      case SplitTree::Kind::leaf_unit: return t.ideal().is_unit();
      case SplitTree::Kind::leaf_principal: return t.ideal().is_principal();
      case SplitTree::Kind::split: break;
    }
    return false;
  }
  return verify_split_node(t.ideal(), t.pivot(), t.left().ideal(), t.right().ideal()) &&
         verify_split_tree(t.left()) && verify_split_tree(t.right());
}

int smallest_pivot(const std::vector<int>& candidates) {
  if (candidates.empty()) throw InconsistencyError("no pivot candidates");
  return *std::min_element(candidates.begin(), candidates.end());
}

SplitTree variable_split_tree(const SquareFreeIdeal& vars) {
  for (VertexSet g : vars.generators()) {
    if (g.size() != 1) throw InputError("ideal is not generated by variables");
  }
  if (vars.generators().size() <= 1) return SplitTree::leaf(vars);
  // <x_a, rest> = x_a * R + <rest>
  const int x = vars.generators().front().min();
  const VertexSet rest = vars.support().without(x);
  const int n = vars.ambient();
  return SplitTree::split(vars, x, SplitTree::leaf(SquareFreeIdeal::unit(n)),
                          variable_split_tree(SquareFreeIdeal::variables(n, rest)));
}

namespace {

LabeledGraph compose(const LabeledGraph& parent, const LabeledGraph& child) {
  LabeledGraph out{child.graph, {}};
  out.labels.reserve(child.labels.size());
  for (int local : child.labels) out.labels.push_back(parent.labels.at(local - 1));
  return out;
}

SplitTree build_cochordal(const LabeledGraph& lg, int r, int n, const PivotChooser& choose) {
  const SquareFreeIdeal ideal(n, [&] {
    std::vector<VertexSet> gens;
    for (VertexSet a : sr_generators(lg.graph, r)) gens.push_back(lg.to_original(a));
    return gens;
  }());
  if (ideal.is_zero() || ideal.is_principal()) return SplitTree::leaf(ideal);

  const Graph gc = complement(lg.graph);
  std::vector<int> candidates;
  for (int v : simplicial_vertices(gc)) candidates.push_back(lg.labels.at(v - 1));
  const int x = choose(candidates);
  const auto found = std::find(candidates.begin(), candidates.end(), x);
  if (found == candidates.end()) {
    throw InputError("pivot " + std::to_string(x) + " is not simplicial in the complement");
  }
  const int x_local = static_cast<int>(found - candidates.begin());
  const int x_vertex = simplicial_vertices(gc).at(x_local);

  SplitTree right = build_cochordal(compose(lg, delete_vertex(lg.graph, x_vertex)), r, n, choose);
  SplitTree left = (r == 1)
      ? variable_split_tree(
            SquareFreeIdeal::variables(n, lg.to_original(lg.graph.neighbors(x_vertex))))
      : build_cochordal(compose(lg, tilde_graph(lg.graph, x_vertex)), r - 1, n, choose);

  if (!verify_split_node(ideal, x, left.ideal(), right.ideal())) {
    throw InconsistencyError("split at x=" + std::to_string(x) + " (r=" + std::to_string(r) +
                             ") fails the vertex-splitting conditions");
  }
  return SplitTree::split(ideal, x, std::move(left), std::move(right));
}

}  // namespace

SplitTree cochordal_split_tree(const Graph& g, int r, const PivotChooser& choose) {
  if (r < 1) throw InputError("r must be positive");
  if (!is_cochordal(g)) throw InputError("the complement of the graph is not chordal");
  return build_cochordal(LabeledGraph::identity(g), r, g.order(), choose);
}

namespace {

struct GensHash {
  std::size_t operator()(const std::vector<VertexSet>& gens) const noexcept {
    std::size_t h = gens.size();
    for (VertexSet g : gens) h = h * 1099511628211ULL ^ std::hash<VertexSet>{}(g);
    return h;
  }
};

class SplitSearcher {
 public:
  SplitSearcher(std::size_t budget) : budget_(budget) {}

  std::optional<SplitTree> search(const SquareFreeIdeal& ideal) {
    if (++visited_ > budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (ideal.is_zero() || ideal.is_unit() || ideal.is_principal()) return SplitTree::leaf(ideal);
    if (failed_.contains(ideal.generators())) return std::nullopt;
    const int n = ideal.ambient();
    for (int x : ideal.support()) {
      std::vector<VertexSet> quotient, rest;
      for (VertexSet m : ideal.generators()) {
        if (m.contains(x)) {
          quotient.push_back(m.without(x));
        } else {
          rest.push_back(m);
        }
      }
      const SquareFreeIdeal j1(n, std::move(quotient));
      const SquareFreeIdeal j2(n, std::move(rest));
      if (!verify_split_node(ideal, x, j1, j2)) continue;
      auto left = search(j1);
      if (exhausted_) return std::nullopt;
      if (!left) continue;
      auto right = search(j2);
      if (exhausted_) return std::nullopt;
      if (!right) continue;
      return SplitTree::split(ideal, x, std::move(*left), std::move(*right));
    }
    failed_.insert(ideal.generators());
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  std::size_t visited() const { return std::min(visited_, budget_); }

 private:
  std::size_t budget_;
  std::size_t visited_ = 0;
  bool exhausted_ = false;
  std::unordered_set<std::vector<VertexSet>, GensHash> failed_;
};

void write_node(std::ostream& os, const SplitTree& t, int depth) {
  os << std::string(2 * depth, ' ');
  switch (t.kind()) {
    case SplitTree::Kind::leaf_zero: os << "leaf zero\n"; return;
    case SplitTree::Kind::leaf_unit: os << "leaf unit\n"; return;
    case SplitTree::Kind::leaf_principal:
      os << "leaf principal";
      for (int v : t.ideal().generators().front()) os << ' ' << v;
      os << '\n';
      return;
    case SplitTree::Kind::split:
      os << "split x=" << t.pivot() << '\n';
      write_node(os, t.left(), depth + 1);
      write_node(os, t.right(), depth + 1);
      return;
  }
}

class TreeParser {
 public:
  TreeParser(const std::string& text, int n) : n_(n) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(' ') == std::string::npos || line[0] == '#') continue;
      lines_.push_back(line);
    }
  }

  SplitTree parse() {
    SplitTree t = node(0);
    if (pos_ != lines_.size()) throw InputError("trailing lines after split tree");
    return t;
  }

 private:
  SplitTree node(std::size_t depth) {
    if (pos_ >= lines_.size()) throw InputError("split tree ends early");
    const std::string& line = lines_[pos_++];
    const std::size_t indent = line.find_first_not_of(' ');
    if (indent != 2 * depth) {
      throw InputError("bad indentation in split tree line '" + line + "'");
    }
    std::istringstream ls(line.substr(indent));
    std::string kind, what;
    ls >> kind >> what;
    if (kind == "split" && what.rfind("x=", 0) == 0) {
      int x = 0;
      try {
        x = std::stoi(what.substr(2));
      } catch (const std::exception&) {
        throw InputError("bad pivot in '" + line + "'");
      }
      if (x < 1 || x > n_) throw InputError("pivot out of range in '" + line + "'");
      SplitTree left = node(depth + 1);
      SplitTree right = node(depth + 1);
      SquareFreeIdeal ideal = left.ideal().times_variable(x) + right.ideal();
      return SplitTree::split(std::move(ideal), x, std::move(left), std::move(right));
    }
    if (kind == "leaf" && what == "zero") return SplitTree::leaf(SquareFreeIdeal::zero(n_));
    if (kind == "leaf" && what == "unit") return SplitTree::leaf(SquareFreeIdeal::unit(n_));
    if (kind == "leaf" && what == "principal") {
      VertexSet support;
      int v = 0;
      while (ls >> v) {
        if (v < 1 || v > n_) throw InputError("variable out of range in '" + line + "'");
        support.insert(v);
      }
      if (!ls.eof() || support.empty()) throw InputError("bad principal leaf '" + line + "'");
      return SplitTree::leaf(SquareFreeIdeal(n_, {support}));
    }
    throw InputError("unrecognised split tree line '" + line + "'");
  }

  int n_;
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

SplitSearchResult generic_split_search(const SquareFreeIdeal& ideal, std::size_t budget) {
  SplitSearcher searcher(budget);
  SplitSearchResult result;
  result.tree = searcher.search(ideal);
  result.nodes_visited = searcher.visited();
  if (searcher.exhausted()) {
    result.status = SplitSearchResult::Status::budget_exhausted;
    result.tree.reset();
  } else {
    result.status = result.tree ? SplitSearchResult::Status::found
                                : SplitSearchResult::Status::not_splittable;
  }
  return result;
}

void write_split_tree(std::ostream& os, const SplitTree& t) { write_node(os, t, 0); }

std::string split_tree_to_string(const SplitTree& t) {
  std::ostringstream os;
  write_split_tree(os, t);
  return os.str();
}

SplitTree parse_split_tree(const std::string& text, int n) {
  return TreeParser(text, n).parse();
}

}  // namespace rindep

#include "rindep/collapse.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rindep/error.hpp"

namespace rindep {

CollapseState::CollapseState(const SimplicialComplex& start)
    : n_(start.vertex_count()), facets_(start.facets()) {}

std::optional<VertexSet> CollapseState::unique_facet(VertexSet sigma) const {
  std::optional<VertexSet> found;
  for (VertexSet f : facets_) {
    if (!sigma.is_subset_of(f)) continue;
    if (found) return std::nullopt;
    found = f;
  }
  return found;
}

void CollapseState::collapse(VertexSet sigma, VertexSet tau) {
  auto it = std::find(facets_.begin(), facets_.end(), tau);
  if (it == facets_.end()) throw InputError("collapse against a non-facet " + tau.to_string());
  facets_.erase(it);
  // The faces of tau avoiding sigma are generated by tau - v, v in sigma.
  for (int v : sigma) {
    const VertexSet piece = tau.without(v);
    const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                     [&](VertexSet f) { return piece.is_subset_of(f); });
    if (!covered) facets_.push_back(piece);
  }
  facets_ = maximal_sets(std::move(facets_));
}

bool CollapseState::is_empty() const {
  return facets_.empty() || (facets_.size() == 1 && facets_.front().empty());
}

SimplicialComplex CollapseState::snapshot() const {
  return SimplicialComplex::from_facets(n_, facets_);
}

CollapseVerdict verify_collapse(const SimplicialComplex& d0, const CollapseSequence& seq, int d) {
  CollapseState state(d0);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const FreePair& step = seq.steps[k];
    auto fail = [&](std::string why) {
      return CollapseVerdict{false, k, "step " + std::to_string(k) + ": " + std::move(why)};
    };
    if (step.sigma.empty()) return fail("sigma is empty");
    if (step.sigma.size() > d) {
      return fail("sigma " + step.sigma.to_string() + " has dimension above " + std::to_string(d - 1));
    }
    if (!step.sigma.is_subset_of(step.tau)) return fail("sigma is not contained in tau");
    const auto unique = state.unique_facet(step.sigma);
    if (!unique) {
      return fail("sigma " + step.sigma.to_string() + " is not contained in exactly one facet");
    }
    if (*unique != step.tau) {
      return fail("the facet containing sigma is " + unique->to_string() + ", not " +
                  step.tau.to_string());
    }
    state.collapse(step.sigma, step.tau);
  }
  if (!state.is_empty()) {
    return {false, seq.steps.size(), "faces remain after the last step"};
  }
  return {true, std::nullopt, ""};
}

namespace {

void connected_faces_phase(const Graph& g, int r, CollapseState& state, CollapseSequence& seq) {
  for (int s = r; s >= 2; --s) {
    std::vector<VertexSet> level;
    for_each_subset_of_size(g.vertices(), s, [&](VertexSet f) {
      if (is_connected_subset(g, f)) level.push_back(f);
    });
    std::sort(level.begin(), level.end(), lex_less);

    std::vector<VertexSet> taus;
    taus.reserve(level.size());
    for (VertexSet f : level) {
      const auto tau = state.unique_facet(f);
      if (!tau) {
        throw InconsistencyError("connected face " + f.to_string() + " lies in several facets");
      }
      taus.push_back(*tau);
    }
    std::vector<VertexSet> sorted_taus = taus;
    sort_lex_unique(sorted_taus);
    if (sorted_taus.size() != taus.size()) {
      throw InconsistencyError("two connected faces of size " + std::to_string(s) +
                               " share a facet");
    }
    for (std::size_t k = 0; k < level.size(); ++k) {
      const auto tau = state.unique_facet(level[k]);
      if (!tau || *tau != taus[k]) {
        throw InconsistencyError("facet of " + level[k].to_string() + " changed mid-level");
      }
      state.collapse(level[k], *tau);
      seq.steps.push_back({level[k], *tau});
    }
  }
  if (state.snapshot() != ind_r(g, 1)) {
    throw InconsistencyError("collapsing connected faces did not leave the independence complex");
  }
}

std::vector<VertexSet> free_faces_candidates(const std::vector<VertexSet>& facets, int d,
                                             std::vector<VertexSet>& owners) {
  std::vector<VertexSet> sigmas;
  owners.clear();
  for (VertexSet tau : facets) {
    const std::uint64_t full = tau.bits();
    for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
      const VertexSet sigma(sub);
      if (sigma.size() > d) continue;
      int containing = 0;
      for (VertexSet f : facets) {
        if (sigma.is_subset_of(f) && ++containing > 1) break;
      }
      if (containing == 1) {
        sigmas.push_back(sigma);
        owners.push_back(tau);
      }
    }
  }
  return sigmas;
}

struct FacetsHash {
  std::size_t operator()(const std::vector<VertexSet>& facets) const noexcept {
    std::size_t h = facets.size();
    for (VertexSet f : facets) h = h * 1099511628211ULL ^ std::hash<VertexSet>{}(f);
    return h;
  }
};

class CollapseSearcher {
 public:
  CollapseSearcher(int d, std::size_t budget) : d_(d), budget_(budget) {}

  bool search(const CollapseState& state, std::vector<FreePair>& path) {
    if (state.is_empty()) return true;
    if (++visited_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (dead_.contains(state.facets())) return false;
    std::vector<VertexSet> owners;
    const auto sigmas = free_faces_candidates(state.facets(), d_, owners);
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
      CollapseState next = state;
      next.collapse(sigmas[k], owners[k]);
      path.push_back({sigmas[k], owners[k]});
      if (search(next, path)) return true;
      path.pop_back();
      if (exhausted_) return false;
    }
    dead_.insert(state.facets());
    return false;
  }

  bool exhausted() const { return exhausted_; }
  std::size_t visited() const { return std::min(visited_, budget_); }

 private:
  int d_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  bool exhausted_ = false;
  std::unordered_set<std::vector<VertexSet>, FacetsHash> dead_;
};

}  // namespace

CollapseSearchResult search_d_collapse(const SimplicialComplex& d0, int d, std::size_t budget) {
  if (d < 1) throw InputError("collapse parameter must be positive");
  CollapseSearchResult result;
  CollapseSearcher searcher(d, budget);
  std::vector<FreePair> path;
  const bool ok = searcher.search(CollapseState(d0), path);
  result.states_visited = searcher.visited();
  if (ok) {
    result.status = CollapseSearchResult::Status::found;
    result.sequence = CollapseSequence{d, std::move(path)};
  } else {
    result.status = searcher.exhausted() ? CollapseSearchResult::Status::budget_exhausted
                                         : CollapseSearchResult::Status::not_collapsible;
  }
  return result;
}

CollapseSequence chordal_collapse_sequence(const Graph& g, int r) {
  if (r < 1) throw InputError("r must be positive");
  const Graph gc = complement(g);
  const auto peo = is_chordal(gc);
  if (!peo) throw InputError("the complement of the graph is not chordal");

  CollapseSequence seq{r, {}};
  CollapseState state(ind_r(g, r));
  connected_faces_phase(g, r, state, seq);

  // ind_1(g) is the clique complex of g^c; a simplicial vertex of what is
  // left lies in exactly one maximal clique, its closed neighbourhood.
  VertexSet remaining = g.vertices();
  for (int v : peo->order) {
    const VertexSet expected = gc.closed_neighbors(v) & remaining;
    const auto tau = state.unique_facet(VertexSet::singleton(v));
    if (!tau || *tau != expected) {
      // Not expected to happen; finish by search rather than give up.
      const auto rest = search_d_collapse(state.snapshot(), 1);
      if (rest.status != CollapseSearchResult::Status::found) {
        throw InconsistencyError("independence complex of a co-chordal graph failed to 1-collapse");
      }
      seq.steps.insert(seq.steps.end(), rest.sequence->steps.begin(), rest.sequence->steps.end());
      return seq;
    }
    state.collapse(VertexSet::singleton(v), *tau);
    seq.steps.push_back({VertexSet::singleton(v), *tau});
    remaining.erase(v);
  }
  if (!state.is_empty()) throw InconsistencyError("faces remain after the elimination phase");
  return seq;
}

std::optional<CollapseSequence> gap_free_collapse_sequence(const Graph& g, int r,
                                                           std::size_t budget) {
  if (r < 1) throw InputError("r must be positive");
  if (has_induced_c4(complement(g))) {
    throw InputError("the complement of the graph has an induced 4-cycle");
  }
  CollapseSequence seq{r, {}};
  CollapseState state(ind_r(g, r));
  connected_faces_phase(g, r, state, seq);
  const auto rest = search_d_collapse(state.snapshot(), r, budget);
  if (rest.status != CollapseSearchResult::Status::found) return std::nullopt;
  seq.steps.insert(seq.steps.end(), rest.sequence->steps.begin(), rest.sequence->steps.end());
  return seq;
}

void write_certificate(std::ostream& os, const CollapseSequence& seq) {
  os << "d " << seq.d << '\n';
  for (const FreePair& step : seq.steps) {
    os << 's';
    for (int v : step.sigma) os << ' ' << v;
    os << " |";
    for (int v : step.tau) os << ' ' << v;
    os << '\n';
  }
}

std::string certificate_to_string(const CollapseSequence& seq) {
  std::ostringstream os;
  write_certificate(os, seq);
  return os.str();
}

CollapseSequence parse_certificate(const std::string& text) {
  CollapseSequence seq;
  bool have_header = false;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "d") {
      if (have_header) throw InputError(where + "duplicate header");
      std::string extra;
      if (!(ls >> seq.d) || seq.d < 1 || (ls >> extra)) throw InputError(where + "malformed header");
      have_header = true;
    } else if (tag == "s") {
      if (!have_header) throw InputError(where + "step before header");
      FreePair step;
      bool after_bar = false;
      std::string token;
      while (ls >> token) {
        if (token == "|") {
          if (after_bar) throw InputError(where + "second '|'");
          after_bar = true;
          continue;
        }
        int v = 0;
        try {
          std::size_t used = 0;
          v = std::stoi(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
          throw InputError(where + "bad vertex '" + token + "'");
        }
        if (v < 1 || v > kMaxVertices) throw InputError(where + "vertex out of range");
        (after_bar ? step.tau : step.sigma).insert(v);
      }
      if (!after_bar) throw InputError(where + "missing '|'");
      seq.steps.push_back(step);
    } else {
      throw InputError(where + "unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw InputError("missing 'd <param>' header");
  return seq;
}

}  // namespace rindep

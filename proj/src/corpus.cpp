#include "rindep/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <sstream>
#include <thread>

#include "rindep/betti.hpp"
#include "rindep/collapse.hpp"
#include "rindep/complex.hpp"
#include "rindep/error.hpp"
#include "rindep/homology.hpp"

namespace rindep {

std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

namespace {

template <typename T>
void shuffle_in_place(std::vector<T>& xs, Rng& rng) {
  for (std::size_t k = xs.size(); k > 1; --k) std::swap(xs[k - 1], xs[draw_below(rng, k)]);
}

bool coin(Rng& rng) { return (rng() & 1U) != 0; }

}  // namespace

Graph random_cochordal_graph(int n, Rng& rng) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
  std::vector<int> order(n);
  for (int v = 1; v <= n; ++v) order[v - 1] = v;
  shuffle_in_place(order, rng);

  std::vector<VertexSet> adj(n);
  VertexSet placed;
  for (int k = n - 1; k >= 0; --k) {
    const int v = order[k];
    // One draw in placed.size()+1 leaves v isolated among its successors.
    if (!placed.empty() && draw_below(rng, placed.size() + 1) != 0) {
      std::vector<int> pool = placed.to_vector();
      const int u = pool[draw_below(rng, pool.size())];
      VertexSet clique = VertexSet::singleton(u);
      std::vector<int> extra = (adj[u - 1] & placed).to_vector();
      shuffle_in_place(extra, rng);
      for (int w : extra) {
        if (coin(rng) && clique.is_subset_of(adj[w - 1])) clique.insert(w);
      }
      for (int w : clique) {
        adj[v - 1].insert(w);
        adj[w - 1].insert(v);
      }
    }
    placed.insert(v);
  }
  return complement(Graph::from_adjacency(std::move(adj)));
}

BlockDeletedGraph random_block_deleted_complete(int n, Rng& rng) {
  if (n < 1 || n > kMaxVertices) throw InputError("vertex count out of range");
  BlockDeletedGraph out;
  const auto blocks = static_cast<int>(1 + draw_below(rng, n));
  out.block.resize(n);
  std::vector<int> sizes(blocks, 0);
  for (int v = 0; v < n; ++v) {
    out.block[v] = static_cast<int>(draw_below(rng, blocks));
    ++sizes[out.block[v]];
  }
  out.s = *std::max_element(sizes.begin(), sizes.end());
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (out.block[u - 1] == out.block[v - 1] && coin(rng)) continue;
      edges.emplace_back(u, v);
    }
  }
  out.graph = Graph::build(n, edges);
  return out;
}

PivotChooser seeded_pivot_chooser(std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return [rng](const std::vector<int>& candidates) {
    if (candidates.empty()) throw InconsistencyError("no pivot candidates");
    return candidates[draw_below(*rng, candidates.size())];
  };
}

CorpusSpec::Kind parse_corpus_kind(const std::string& name) {
  if (name == "random_cochordal") return CorpusSpec::Kind::random_cochordal;
  if (name == "random_block_deleted_complete") return CorpusSpec::Kind::random_block_deleted_complete;
  if (name == "named") return CorpusSpec::Kind::named;
  throw InputError("unknown corpus kind '" + name + "'");
}

std::string corpus_kind_name(CorpusSpec::Kind kind) {
  switch (kind) {
    case CorpusSpec::Kind::random_cochordal: return "random_cochordal";
    case CorpusSpec::Kind::random_block_deleted_complete: return "random_block_deleted_complete";
    case CorpusSpec::Kind::named: return "named";
  }
  return "?";
}

std::vector<CorpusItem> generate_corpus(const CorpusSpec& spec) {
  if (spec.n_min < 1 || spec.n_max > 12 || spec.n_min > spec.n_max) {
    throw InputError("corpus n range must lie within 1..12");
  }
  if (spec.count < 0) throw InputError("corpus count must be nonnegative");
  std::vector<CorpusItem> items;
  Rng rng(spec.seed);
  const auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
  switch (spec.kind) {
    case CorpusSpec::Kind::random_cochordal:
      for (int k = 0; k < spec.count; ++k) {
        const int n = spec.n_min + static_cast<int>(draw_below(rng, span));
        items.push_back({random_cochordal_graph(n, rng), 0});
      }
      break;
    case CorpusSpec::Kind::random_block_deleted_complete:
      for (int k = 0; k < spec.count; ++k) {
        const int n = spec.n_min + static_cast<int>(draw_below(rng, span));
        BlockDeletedGraph b = random_block_deleted_complete(n, rng);
        items.push_back({std::move(b.graph), b.s});
      }
      break;
    case CorpusSpec::Kind::named:
      for (int n = spec.n_min; n <= spec.n_max; ++n) {
        if (spec.family == Family::cycle && n < 3) continue;
        if (spec.family == Family::cycle_complement && n < 3) continue;
        items.push_back({generate_family(spec.family, n), 0});
      }
      break;
  }
  return items;
}

namespace {

const std::vector<std::pair<CorpusCheck, std::string>>& check_table() {
  static const std::vector<std::pair<CorpusCheck, std::string>> table{
      {check_split_oracle, "split_oracle"},
      {check_regularity, "regularity"},
      {check_collapse, "collapse"},
      {check_leray_reg, "leray_reg"},
      {check_block, "block_deletion"},
  };
  return table;
}

std::string edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges";
  for (const auto& [u, v] : g.edges()) os << ' ' << u << '-' << v;
  return os.str();
}

std::string describe(const std::optional<int>& reg) {
  return reg ? std::to_string(*reg) : std::string("none");
}

struct ItemOutcome {
  std::vector<std::size_t> passed;
  std::vector<std::size_t> failed;
  std::vector<CorpusFailure> failures;
};

ItemOutcome evaluate_item(const CorpusItem& item, std::size_t index, unsigned checks,
                          const FieldSpec& field) {
  const auto& table = check_table();
  ItemOutcome out{std::vector<std::size_t>(table.size(), 0),
                  std::vector<std::size_t>(table.size(), 0), {}};
  const Graph& g = item.graph;
  const int n = g.order();
  const bool cochordal = is_cochordal(g);

  auto record = [&](std::size_t slot, int r, bool ok, const std::string& detail) {
    if (ok) {
      ++out.passed[slot];
    } else {
      ++out.failed[slot];
      out.failures.push_back({index, table[slot].second, r, detail, edge_list(g)});
    }
  };
  // Runs one check, turning thrown errors into failures.
  auto guarded = [&](std::size_t slot, int r, const auto& body) {
    try {
      std::string detail;
      const bool ok = body(detail);
      record(slot, r, ok, detail);
    } catch (const std::exception& e) {
      record(slot, r, false, std::string("exception: ") + e.what());
    }
  };

  const bool want_oracle = (checks & (check_split_oracle | check_collapse | check_leray_reg)) != 0;
  for (int r = 1; r <= n; ++r) {
    const SimplicialComplex complex = ind_r(g, r);
    const bool nonzero = !sr_generators(g, r).empty();
    std::optional<OracleReport> oracle;
    if (want_oracle) oracle = run_oracle(complex, field);

    if (cochordal && (checks & (check_split_oracle | check_regularity))) {
      std::optional<BettiTable> split_table;
      std::string split_error;
      try {
        split_table = betti_from_split_tree(cochordal_split_tree(g, r));
      } catch (const std::exception& e) {
        split_error = std::string("exception: ") + e.what();
      }
      if (checks & check_split_oracle) {
        guarded(0, r, [&](std::string& detail) {
          if (!split_table) {
            detail = split_error;
            return false;
          }
          detail = "split:\n" + betti_to_machine(*split_table) + "oracle:\n" +
                   betti_to_machine(oracle->betti);
          return *split_table == oracle->betti;
        });
      }
      if ((checks & check_regularity) && nonzero) {
        guarded(1, r, [&](std::string& detail) {
          if (!split_table) {
            detail = split_error;
            return false;
          }
          const auto reg = regularity(*split_table, true);
          detail = "reg " + describe(reg) + ", expected " + std::to_string(r + 1);
          return reg == r + 1;
        });
      }
    }
    if (cochordal && (checks & check_collapse)) {
      guarded(2, r, [&](std::string& detail) {
        const CollapseSequence seq = chordal_collapse_sequence(g, r);
        const CollapseVerdict verdict = verify_collapse(complex, seq, r);
        if (!verdict.valid) {
          detail = "collapse rejected: " + verdict.reason;
          return false;
        }
        detail = "leray " + std::to_string(oracle->leray) + " exceeds " + std::to_string(r);
        return oracle->leray <= r;
      });
    }
    if ((checks & check_leray_reg) && nonzero) {
      guarded(3, r, [&](std::string& detail) {
        const auto reg = regularity(oracle->betti, true);
        detail = "reg " + describe(reg) + ", leray " + std::to_string(oracle->leray);
        return reg == oracle->leray + 1;
      });
    }
    if ((checks & check_block) && item.block_size > 0 && r >= item.block_size) {
      guarded(4, r, [&](std::string& detail) {
        detail = "ind_r differs from that of K_n (largest block " + std::to_string(item.block_size) + ")";
        return complex == ind_r(generate_family(Family::complete, n), r);
      });
    }
  }
  return out;
}

}  // namespace

unsigned parse_checks(const std::string& list) {
  if (list == "all") return check_all;
  unsigned checks = 0;
  std::istringstream is(list);
  std::string name;
  while (std::getline(is, name, ',')) {
    const auto& table = check_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.second == name; });
    if (it == table.end()) throw InputError("unknown check '" + name + "'");
    checks |= it->first;
  }
  if (checks == 0) throw InputError("no checks selected");
  return checks;
}

std::vector<std::string> check_names(unsigned checks) {
  std::vector<std::string> names;
  for (const auto& [flag, name] : check_table()) {
    if (checks & flag) names.push_back(name);
  }
  return names;
}

std::string CorpusReport::to_text() const {
  std::ostringstream os;
  os << "corpus kind=" << corpus_kind_name(spec.kind);
  if (spec.kind == CorpusSpec::Kind::named) {
    os << " family=" << family_name(spec.family);
  } else {
    os << " count=" << spec.count;
  }
  os << " n=" << spec.n_min << ".." << spec.n_max << " seed=" << spec.seed << '\n';
  os << "items " << items << '\n';
  std::size_t failed = 0;
  for (const CheckTally& t : tallies) {
    os << "check " << t.name << " passed " << t.passed << " failed " << t.failed << '\n';
    failed += t.failed;
  }
  for (const CorpusFailure& f : failures) {
    os << "FAIL item " << f.item << " check " << f.check << " r=" << f.r << " graph " << f.edges << '\n';
    std::istringstream detail(f.detail);
    std::string line;
    while (std::getline(detail, line)) os << "  " << line << '\n';
  }
  os << "result " << (failed == 0 ? "PASS" : "FAIL") << " (" << failed << " failures)\n";
  return os.str();
}

CorpusReport run_corpus(const CorpusSpec& spec, unsigned checks, const FieldSpec& field, int jobs) {
  const std::vector<CorpusItem> items = generate_corpus(spec);
  std::vector<ItemOutcome> outcomes(items.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < items.size(); k = next++) {
      outcomes[k] = evaluate_item(items[k], k, checks, field);
    }
  };
  const int threads = std::clamp(jobs, 1, 64);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CorpusReport report;
  report.spec = spec;
  report.items = items.size();
  const auto& table = check_table();
  for (std::size_t slot = 0; slot < table.size(); ++slot) {
    if (!(checks & table[slot].first)) continue;
    CheckTally tally{table[slot].second, 0, 0};
    for (const ItemOutcome& o : outcomes) {
      tally.passed += o.passed[slot];
      tally.failed += o.failed[slot];
    }
    report.tallies.push_back(tally);
  }
  for (const ItemOutcome& o : outcomes) {
    report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
  }
  return report;
}

}  // namespace rindep

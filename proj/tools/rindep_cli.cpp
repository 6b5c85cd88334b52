// Command-line front end: betti, check, split, collapse, corpus, generate.
// Exit codes: 0 success, 1 a check or verification failed, 2 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rindep/betti.hpp"
#include "rindep/collapse.hpp"
#include "rindep/complex.hpp"
#include "rindep/corpus.hpp"
#include "rindep/error.hpp"
#include "rindep/graph.hpp"
#include "rindep/homology.hpp"
#include "rindep/ideal.hpp"

namespace {

using namespace rindep;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;

struct GraphSource {
  std::string path;
  std::string family;
  int n = 0;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
  auto* path = cmd->add_option("--graph", src.path, "graph file (p/e format)");
  auto* family = cmd->add_option("--family", src.family,
                                 "complete|star|path|cycle|path_complement|cycle_complement|kn_x");
  cmd->add_option("--n", src.n, "family size parameter");
  path->excludes(family);
}

struct LoadedGraph {
  Graph graph;
  std::optional<Family> family;
  int n = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LoadedGraph load_graph(const GraphSource& src) {
  if (!src.path.empty()) return {parse_graph(read_file(src.path)), std::nullopt, 0};
  if (src.family.empty()) throw InputError("give --graph <path> or --family <name> --n <k>");
  const Family f = parse_family(src.family);
  return {generate_family(f, src.n), f, src.n};
}

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::optional<ClosedFormFamily> closed_form_for(const LoadedGraph& lg, int r) {
  if (!lg.family) return std::nullopt;
  switch (*lg.family) {
    case Family::complete: return ClosedFormFamily::complete(lg.n, r);
    case Family::star: return ClosedFormFamily::star(lg.n, r);
    case Family::kn_x: return ClosedFormFamily::kn_x(lg.n, r);
    case Family::path_complement: return ClosedFormFamily::path_complement(lg.n, r);
    default: return std::nullopt;
  }
}

void check_r(int r) {
  if (r < 1) throw InputError("--r must be at least 1");
}

void check_oracle_size(const Graph& g, bool force) {
  if (g.order() > kOracleVertexLimit && !force) {
    throw InputError("oracle limited to " + std::to_string(kOracleVertexLimit) +
                     " vertices; pass --force to override");
  }
}

std::string render(const BettiTable& t, const std::string& format) {
  return format == "machine" ? betti_to_machine(t) : betti_to_grid(t);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- betti

struct BettiArgs {
  GraphSource src;
  int r = 1;
  std::string method = "split";
  std::uint32_t characteristic = 2;
  std::string format = "grid";
  std::string out;
  bool force = false;
};

int run_betti(const BettiArgs& a) {
  check_r(a.r);
  const LoadedGraph lg = load_graph(a.src);
  const FieldSpec field(a.characteristic);
  const bool all = a.method == "all";

  std::vector<std::pair<std::string, BettiTable>> tables;
  if (a.method == "closed" || all) {
    const auto cf = closed_form_for(lg, a.r);
    if (cf) {
      tables.emplace_back("closed", closed_form_betti(*cf));
    } else if (!all) {
      throw InputError("no closed form for this graph; closed forms cover complete, star, kn_x and path_complement");
    }
  }
  if (a.method == "split" || all) {
    if (!is_cochordal(lg.graph)) {
      if (!all) throw InputError("complement of the graph is not chordal; try --method oracle");
    } else {
      tables.emplace_back("split", betti_from_split_tree(cochordal_split_tree(lg.graph, a.r)));
    }
  }
  if (a.method == "oracle" || all) {
    check_oracle_size(lg.graph, a.force);
    tables.emplace_back("oracle", hochster_betti(ind_r(lg.graph, a.r), field, kMaxVertices));
  }
  if (tables.empty()) throw InputError("unknown method '" + a.method + "'");

  Output out(a.out);
  std::ostream& os = out.stream();
  const bool labelled = tables.size() > 1 || all;
  for (const auto& [name, table] : tables) {
    if (labelled) os << "# " << name << '\n';
    os << render(table, a.format);
  }
  if (tables.size() > 1) {
    bool same = true;
    for (const auto& entry : tables) same = same && entry.second == tables.front().second;
    os << (same ? "MATCH" : "MISMATCH") << '\n';
    return same ? kExitOk : kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  GraphSource src;
  int r = 1;
  std::uint32_t characteristic = 2;
  std::string out;
  bool force = false;
};

int run_check(const CheckArgs& a) {
  check_r(a.r);
  const LoadedGraph lg = load_graph(a.src);
  const Graph& g = lg.graph;
  const FieldSpec field(a.characteristic);
  Output out(a.out);
  std::ostream& os = out.stream();

  const StructureReport s = structure_predicates(g);
  const bool cochordal = is_cochordal(g);
  const SimplicialComplex d1 = ind_r(g, 1);
  const SimplicialComplex dr = ind_r(g, a.r);
  const SquareFreeIdeal ideal = ideal_of(g, a.r);

  os << "vertices " << g.order() << '\n';
  os << "edges " << g.edge_count() << '\n';
  os << "chordal " << yes_no(is_chordal(g).has_value()) << '\n';
  os << "co-chordal " << yes_no(cochordal) << '\n';
  os << "claw-free " << yes_no(s.claw_free) << '\n';
  os << "gap-free " << yes_no(s.gap_free) << '\n';
  os << "leaves";
  if (s.leaves.empty()) os << " none";
  for (int v : s.leaves) os << ' ' << v;
  os << '\n';
  os << "dim ind_1 " << complex_dimension(d1) << '\n';
  os << "krull dimension " << krull_dimension(dr) << '\n';
  os << "generators of I_" << a.r << ' ' << ideal.generators().size() << '\n';

  const bool oracle_ok = g.order() <= kOracleVertexLimit || a.force;
  std::optional<OracleReport> oracle;
  if (oracle_ok) oracle = run_oracle(dr, field, kMaxVertices);

  if (ideal.is_zero()) {
    os << "linear resolution yes (zero ideal)\n";
  } else {
    std::optional<BettiTable> table;
    std::string via;
    if (cochordal) {
      table = betti_from_split_tree(cochordal_split_tree(g, a.r));
      via = "split";
    } else if (oracle) {
      table = oracle->betti;
      via = "oracle";
    }
    if (table) {
      const auto reg = regularity(*table, true);
      os << "linear resolution " << yes_no(reg == a.r + 1) << " (" << via << ")\n";
      os << "reg(I) " << *reg << '\n';
    } else {
      os << "linear resolution unknown (graph too large for the oracle)\n";
    }
  }
  if (oracle) {
    os << "leray " << oracle->leray << '\n';
  } else {
    os << "leray not computed\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- split

struct SplitArgs {
  GraphSource src;
  int r = 1;
  std::optional<std::uint64_t> seed;
  bool search = false;
  std::size_t budget = 1'000'000;
  std::string out;
};

int run_split(const SplitArgs& a) {
  check_r(a.r);
  const LoadedGraph lg = load_graph(a.src);
  Output out(a.out);
  if (is_cochordal(lg.graph)) {
    const PivotChooser choose = a.seed ? seeded_pivot_chooser(*a.seed) : PivotChooser(smallest_pivot);
    write_split_tree(out.stream(), cochordal_split_tree(lg.graph, a.r, choose));
    return kExitOk;
  }
  if (!a.search) {
    throw InputError("complement of the graph is not chordal; pass --search to look for a splitting");
  }
  const SplitSearchResult res = generic_split_search(ideal_of(lg.graph, a.r), a.budget);
  switch (res.status) {
    case SplitSearchResult::Status::found:
      write_split_tree(out.stream(), *res.tree);
      return kExitOk;
    case SplitSearchResult::Status::not_splittable:
      std::cerr << "no vertex splitting found (" << res.nodes_visited << " nodes)\n";
      return kExitCheckFailed;
    case SplitSearchResult::Status::budget_exhausted:
      std::cerr << "search budget exhausted after " << res.nodes_visited << " nodes\n";
      return kExitCheckFailed;
  }
  return kExitCheckFailed;
}

// ---------------------------------------------------------------- collapse

struct CollapseArgs {
  GraphSource src;
  int r = 1;
  std::string mode = "emit";
  std::string cert;
  bool search = false;
  std::size_t budget = 1'000'000;
  std::string out;
};

int run_collapse(const CollapseArgs& a) {
  check_r(a.r);
  const LoadedGraph lg = load_graph(a.src);
  const SimplicialComplex complex = ind_r(lg.graph, a.r);

  if (a.mode == "verify") {
    if (a.cert.empty()) throw InputError("verify mode needs --cert <path>");
    const CollapseSequence seq = parse_certificate(read_file(a.cert));
    const CollapseVerdict v = verify_collapse(complex, seq, seq.d);
    Output out(a.out);
    if (v.valid) {
      out.stream() << "VALID " << seq.steps.size() << " steps, d=" << seq.d << '\n';
      return kExitOk;
    }
    out.stream() << "INVALID at step " << *v.bad_step << ": " << v.reason << '\n';
    return kExitCheckFailed;
  }
  if (a.mode != "emit") throw InputError("--mode must be emit or verify");

  CollapseSequence seq;
  if (is_cochordal(lg.graph)) {
    seq = chordal_collapse_sequence(lg.graph, a.r);
  } else if (a.search) {
    const CollapseSearchResult res = search_d_collapse(complex, a.r, a.budget);
    if (res.status != CollapseSearchResult::Status::found) {
      std::cerr << (res.status == CollapseSearchResult::Status::not_collapsible
                        ? "complex is not " + std::to_string(a.r) + "-collapsible\n"
                        : "search budget exhausted\n");
      return kExitCheckFailed;
    }
    seq = *res.sequence;
  } else {
    throw InputError("complement of the graph is not chordal; pass --search to search for a collapse");
  }
  const std::string path = a.cert.empty() ? a.out : a.cert;
  Output out(path);
  write_certificate(out.stream(), seq);
  return kExitOk;
}

// ---------------------------------------------------------------- corpus

struct CorpusArgs {
  std::string kind = "random_cochordal";
  std::string family = "complete";
  int count = 100;
  int n_min = 3;
  int n_max = 7;
  std::uint64_t seed = 1;
  std::string checks = "all";
  std::uint32_t characteristic = 2;
  int jobs = 1;
  std::string out;
};

int run_corpus_cmd(const CorpusArgs& a) {
  CorpusSpec spec;
  spec.kind = parse_corpus_kind(a.kind);
  spec.family = parse_family(a.family);
  spec.count = a.count;
  spec.n_min = a.n_min;
  spec.n_max = a.n_max;
  spec.seed = a.seed;
  const CorpusReport report = run_corpus(spec, parse_checks(a.checks), FieldSpec(a.characteristic), a.jobs);
  Output out(a.out);
  out.stream() << report.to_text();
  return report.ok() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  GraphSource src;
  std::string random;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  Graph g;
  if (!a.random.empty()) {
    if (a.src.n < 1 || a.src.n > kMaxVertices) throw InputError("--n must lie in 1..64");
    Rng rng(a.seed);
    if (a.random == "cochordal") {
      g = random_cochordal_graph(a.src.n, rng);
    } else if (a.random == "block_deleted") {
      g = random_block_deleted_complete(a.src.n, rng).graph;
    } else {
      throw InputError("--random must be cochordal or block_deleted");
    }
  } else {
    g = load_graph(a.src).graph;
  }
  Output out(a.out);
  write_graph(out.stream(), g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"r-independence complexes: Betti tables, splittings and collapses"};
  app.require_subcommand(1);
  int status = kExitOk;

  BettiArgs betti;
  auto* c_betti = app.add_subcommand("betti", "graded Betti table of R/I_r(G)");
  add_graph_options(c_betti, betti.src);
  c_betti->add_option("--r", betti.r)->required();
  c_betti->add_option("--method", betti.method)->check(CLI::IsMember({"split", "closed", "oracle", "all"}));
  c_betti->add_option("--char", betti.characteristic, "0 or a prime");
  c_betti->add_option("--format", betti.format)->check(CLI::IsMember({"grid", "machine"}));
  c_betti->add_option("--out", betti.out);
  c_betti->add_flag("--force", betti.force, "lift the oracle vertex limit");
  c_betti->callback([&] { status = run_betti(betti); });

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "structural report for G and I_r(G)");
  add_graph_options(c_check, check.src);
  c_check->add_option("--r", check.r)->required();
  c_check->add_option("--char", check.characteristic);
  c_check->add_option("--out", check.out);
  c_check->add_flag("--force", check.force);
  c_check->callback([&] { status = run_check(check); });

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "vertex splitting tree of I_r(G)");
  add_graph_options(c_split, split.src);
  c_split->add_option("--r", split.r)->required();
  c_split->add_option("--seed", split.seed, "random pivot choices");
  c_split->add_flag("--search", split.search, "generic search when G is not co-chordal");
  c_split->add_option("--budget", split.budget);
  c_split->add_option("--out", split.out);
  c_split->callback([&] { status = run_split(split); });

  CollapseArgs collapse;
  auto* c_collapse = app.add_subcommand("collapse", "emit or verify an r-collapse certificate of Ind_r(G)");
  add_graph_options(c_collapse, collapse.src);
  c_collapse->add_option("--r", collapse.r)->required();
  c_collapse->add_option("--mode", collapse.mode)->check(CLI::IsMember({"emit", "verify"}));
  c_collapse->add_option("--cert", collapse.cert);
  c_collapse->add_flag("--search", collapse.search);
  c_collapse->add_option("--budget", collapse.budget);
  c_collapse->add_option("--out", collapse.out);
  c_collapse->callback([&] { status = run_collapse(collapse); });

  CorpusArgs corpus;
  auto* c_corpus = app.add_subcommand("corpus", "seeded cross-check corpus");
  c_corpus->add_option("--kind", corpus.kind)
      ->check(CLI::IsMember({"random_cochordal", "random_block_deleted_complete", "named"}));
  c_corpus->add_option("--family", corpus.family);
  c_corpus->add_option("--count", corpus.count);
  c_corpus->add_option("--n-min", corpus.n_min);
  c_corpus->add_option("--n-max", corpus.n_max);
  c_corpus->add_option("--seed", corpus.seed);
  c_corpus->add_option("--checks", corpus.checks,
                       "all or a comma list of split_oracle,regularity,collapse,leray_reg,block_deletion");
  c_corpus->add_option("--char", corpus.characteristic);
  c_corpus->add_option("--jobs", corpus.jobs);
  c_corpus->add_option("--out", corpus.out);
  c_corpus->callback([&] { status = run_corpus_cmd(corpus); });

  GenerateArgs generate;
  auto* c_generate = app.add_subcommand("generate", "write a family or random graph");
  add_graph_options(c_generate, generate.src);
  c_generate->add_option("--random", generate.random, "cochordal|block_deleted");
  c_generate->add_option("--seed", generate.seed);
  c_generate->add_option("--out", generate.out);
  c_generate->callback([&] { status = run_generate(generate); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return status;
}

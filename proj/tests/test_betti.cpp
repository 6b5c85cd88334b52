#include <doctest.h>

#include "fixtures.hpp"
#include "rindep/betti.hpp"
#include "rindep/error.hpp"
#include "support.hpp"

using namespace rindep;
using testing_support::SeededGen;

namespace {

using Entries = std::map<BettiTable::Key, std::uint64_t>;

Entries entries_of(const BettiTable& t) { return t.entries(); }

BettiTable split_table(const Graph& g, int r) { return betti_from_split_tree(cochordal_split_tree(g, r)); }

}  // namespace

TEST_CASE("closed forms reproduce the published tables") {
  CHECK(entries_of(closed_form_betti(ClosedFormFamily::complete(7, 3))) ==
        Entries{{{0, 0}, 1}, {{1, 4}, 35}, {{2, 5}, 84}, {{3, 6}, 70}, {{4, 7}, 20}});
  CHECK(entries_of(closed_form_betti(ClosedFormFamily::star(7, 4))) ==
        Entries{{{0, 0}, 1}, {{1, 5}, 35}, {{2, 6}, 84}, {{3, 7}, 70}, {{4, 8}, 20}});
  CHECK(entries_of(closed_form_betti(ClosedFormFamily::path_complement(7, 2))) ==
        Entries{{{0, 0}, 1}, {{1, 3}, 30}, {{2, 4}, 85}, {{3, 5}, 96}, {{4, 6}, 50}, {{5, 7}, 10}});
  CHECK(entries_of(closed_form_betti(ClosedFormFamily::path_complement(7, 3))) ==
        Entries{{{0, 0}, 1}, {{1, 4}, 35}, {{2, 5}, 84}, {{3, 6}, 70}, {{4, 7}, 20}});
  CHECK(entries_of(closed_form_betti(ClosedFormFamily::variables(3))) ==
        Entries{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}});
  CHECK_THROWS_AS(closed_form_betti(ClosedFormFamily::complete(5, 0)), InputError);
}

TEST_CASE("closed forms agree with the split recursion and brute force") {
  struct Case {
    ClosedFormFamily family;
    Graph graph;
  };
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n + 1; ++r) {
      const std::vector<Case> cases{
          {ClosedFormFamily::complete(n, r), generate_family(Family::complete, n)},
          {ClosedFormFamily::star(n, r), generate_family(Family::star, n)},
          {ClosedFormFamily::kn_x(n, r), generate_family(Family::kn_x, n)},
          {ClosedFormFamily::path_complement(n, r), generate_family(Family::path_complement, n)},
      };
      for (const Case& c : cases) {
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(static_cast<int>(c.family.kind));
        const BettiTable closed = closed_form_betti(c.family);
        CHECK(closed == split_table(c.graph, r));
        if (c.graph.order() <= 8) CHECK(closed.entries() == testing_support::brute_betti(c.graph, r));
      }
    }
  }
}

TEST_CASE("split recursion matches frozen tables") {
  // Values from the dense Hochster sum in support.hpp.
  const Graph g = fixtures::example_graph();
  CHECK(entries_of(split_table(g, 1)) ==
        Entries{{{0, 0}, 1}, {{1, 2}, 9}, {{2, 3}, 17}, {{3, 4}, 12}, {{4, 5}, 3}});
  CHECK(entries_of(split_table(g, 2)) ==
        Entries{{{0, 0}, 1}, {{1, 3}, 15}, {{2, 4}, 30}, {{3, 5}, 21}, {{4, 6}, 5}});
  CHECK(entries_of(split_table(g, 3)) == Entries{{{0, 0}, 1}, {{1, 4}, 14}, {{2, 5}, 22}, {{3, 6}, 9}});
  CHECK(entries_of(split_table(g, 4)) == Entries{{{0, 0}, 1}, {{1, 5}, 6}, {{2, 6}, 5}});
  CHECK(entries_of(split_table(g, 5)) == Entries{{{0, 0}, 1}, {{1, 6}, 1}});
  CHECK(entries_of(split_table(g, 6)) == Entries{{{0, 0}, 1}});
}

TEST_CASE("split recursion agrees with brute force on random co-chordal graphs") {
  SeededGen gen(53);
  for (int t = 0; t < 80; ++t) {
    const int n = gen.between(1, 7);
    const Graph g = testing_support::random_cochordal(gen, n);
    const int r = gen.between(1, n);
    CHECK(split_table(g, r).entries() == testing_support::brute_betti(g, r));
  }
}

TEST_CASE("recursion base cases") {
  CHECK(betti_from_split_tree(SplitTree::leaf(SquareFreeIdeal::zero(3))).entries() == Entries{{{0, 0}, 1}});
  CHECK(betti_from_split_tree(SplitTree::leaf(SquareFreeIdeal::unit(3))).all_zero());
  CHECK(betti_from_split_tree(SplitTree::leaf(SquareFreeIdeal(3, {{1, 3}}))).entries() ==
        Entries{{{0, 0}, 1}, {{1, 2}, 1}});
  // x1 * <x2> + 0: one generator of degree 2, no syzygies.
  const SquareFreeIdeal i(3, {{1, 2}});
  const SplitTree t = SplitTree::split(i, 1, SplitTree::leaf(SquareFreeIdeal(3, {{2}})),
                                       SplitTree::leaf(SquareFreeIdeal::zero(3)));
  CHECK(betti_from_split_tree(t).entries() == Entries{{{0, 0}, 1}, {{1, 2}, 1}});
  CHECK(betti_from_split_tree(variable_split_tree(SquareFreeIdeal::variables(4, {1, 2, 3}))) ==
        closed_form_betti(ClosedFormFamily::variables(3)));
}

TEST_CASE("regularity and linearity") {
  const BettiTable k7 = closed_form_betti(ClosedFormFamily::complete(7, 3));
  CHECK(regularity(k7, true) == 4);
  CHECK(regularity(k7, false) == 3);
  CHECK(has_linear_resolution(k7, 4));
  CHECK_FALSE(has_linear_resolution(k7, 3));
  BettiTable c5(5, BettiTable::Provenance::oracle);
  for (const auto& [k, v] : testing_support::brute_betti(generate_family(Family::cycle_complement, 5), 1))
    c5.set(k.first, k.second, v);
  CHECK_FALSE(has_linear_resolution(c5, 2));
  CHECK(regularity(c5, true) == 3);
  BettiTable zero(3, BettiTable::Provenance::recursion);
  zero.set(0, 0, 1);
  CHECK_FALSE(regularity(zero, true).has_value());
  CHECK(regularity(zero, false) == 0);
  CHECK_FALSE(regularity(BettiTable(3, BettiTable::Provenance::recursion), false).has_value());
}

TEST_CASE("binomials") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
  CHECK_THROWS_AS(binomial(70, 35), InputError);
}

TEST_CASE("machine format round trip") {
  SeededGen gen(59);
  for (int t = 0; t < 30; ++t) {
    const int n = gen.between(1, 8);
    const BettiTable tab = split_table(testing_support::random_cochordal(gen, n), gen.between(1, n));
    const BettiTable back = parse_betti_machine(betti_to_machine(tab), n);
    CHECK(back == tab);
    CHECK(back.provenance() == BettiTable::Provenance::parsed);
  }
  CHECK(betti_to_machine(closed_form_betti(ClosedFormFamily::variables(1))) == "beta 0 0 1\nbeta 1 1 1\n");
  CHECK_THROWS_AS(parse_betti_machine("beta 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_betti_machine("beta 1 2 3 4\n"), InputError);
  CHECK_THROWS_AS(parse_betti_machine("beta 1 2 3\nbeta 1 2 4\n"), InputError);
  CHECK_THROWS_AS(parse_betti_machine("gamma 1 2 3\n"), InputError);
}

TEST_CASE("grid rendering") {
  CHECK(betti_to_grid(closed_form_betti(ClosedFormFamily::complete(7, 3))) ==
        "       0  1  2  3  4\n"
        "total: 1 35 84 70 20\n"
        "    0: 1  .  .  .  .\n"
        "    1: .  .  .  .  .\n"
        "    2: .  .  .  .  .\n"
        "    3: . 35 84 70 20\n");
  CHECK(betti_to_grid(BettiTable(2, BettiTable::Provenance::recursion)) == "(zero module)\n");
}

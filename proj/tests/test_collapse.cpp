#include <doctest.h>

#include "fixtures.hpp"
#include "rindep/collapse.hpp"
#include "rindep/error.hpp"
#include "rindep/homology.hpp"
#include "support.hpp"

using namespace rindep;
using testing_support::SeededGen;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("replaying hand-written sequences") {
  CHECK(verify_collapse(SimplicialComplex::simplex(1), {1, {{{1}, {1}}}}, 1).valid);
  const CollapseSequence seq{2, {{{1, 2}, {1, 2}}, {{1}, {1, 3}}, {{2}, {2, 3}}, {{3}, {3}}}};
  CHECK(verify_collapse(hollow_triangle(), seq, 2).valid);

  const CollapseVerdict two_facets = verify_collapse(hollow_triangle(), {1, {{{1}, {1, 2}}}}, 1);
  CHECK_FALSE(two_facets.valid);
  CHECK(two_facets.bad_step == 0u);

  const CollapseVerdict too_big = verify_collapse(hollow_triangle(), seq, 1);
  CHECK_FALSE(too_big.valid);
  CHECK(too_big.bad_step == 0u);

  CollapseSequence short_seq = seq;
  short_seq.steps.pop_back();
  const CollapseVerdict leftover = verify_collapse(hollow_triangle(), short_seq, 2);
  CHECK_FALSE(leftover.valid);
  CHECK(leftover.bad_step == 3u);

  CHECK_FALSE(verify_collapse(hollow_triangle(), {2, {{{}, {1, 2}}}}, 2).valid);
  CHECK_FALSE(verify_collapse(hollow_triangle(), {2, {{{1, 2}, {1, 3}}}}, 2).valid);
  CHECK_FALSE(verify_collapse(hollow_triangle(), {2, {{{1}, {1, 2, 3}}}}, 2).valid);
}

TEST_CASE("collapse state keeps facets maximal") {
  CollapseState s(SimplicialComplex::simplex(3));
  s.collapse({1}, {1, 2, 3});
  CHECK(s.facets() == std::vector<VertexSet>{{2, 3}});
  s.collapse({2, 3}, {2, 3});
  CHECK(s.facets() == std::vector<VertexSet>{{2}, {3}});
  CHECK_FALSE(s.is_empty());
  CHECK_THROWS_AS(s.collapse({2}, {1, 2}), InputError);
}

TEST_CASE("search decides small cases") {
  const CollapseSearchResult circle1 = search_d_collapse(hollow_triangle(), 1);
  CHECK(circle1.status == CollapseSearchResult::Status::not_collapsible);
  const CollapseSearchResult circle2 = search_d_collapse(hollow_triangle(), 2);
  REQUIRE(circle2.status == CollapseSearchResult::Status::found);
  CHECK(verify_collapse(hollow_triangle(), *circle2.sequence, 2).valid);
  const CollapseSearchResult cone = search_d_collapse(SimplicialComplex::simplex(5), 1);
  REQUIRE(cone.status == CollapseSearchResult::Status::found);
  CHECK(verify_collapse(SimplicialComplex::simplex(5), *cone.sequence, 1).valid);
  const SimplicialComplex c7 = ind_r(generate_family(Family::cycle_complement, 7), 1);
  CHECK(search_d_collapse(c7, 1).status == CollapseSearchResult::Status::not_collapsible);
  CHECK_THROWS_AS(search_d_collapse(c7, 0), InputError);
  // A circle next to a big simplex: plenty of moves, none of them finish.
  const SimplicialComplex mixed =
      SimplicialComplex::from_facets(9, {{1, 2}, {1, 3}, {2, 3}, {4, 5, 6, 7, 8, 9}});
  CHECK(search_d_collapse(mixed, 1, 50).status == CollapseSearchResult::Status::budget_exhausted);
}

TEST_CASE("chordal collapse of K_4 at r = 2") {
  const Graph k4 = generate_family(Family::complete, 4);
  const CollapseSequence seq = chordal_collapse_sequence(k4, 2);
  REQUIRE(seq.steps.size() == 10);
  for (int k = 0; k < 6; ++k) {
    CHECK(seq.steps[k].sigma.size() == 2);
    CHECK(seq.steps[k].sigma == seq.steps[k].tau);
  }
  for (int k = 6; k < 10; ++k) CHECK(seq.steps[k].sigma.size() == 1);
  CHECK(verify_collapse(ind_r(k4, 2), seq, 2).valid);
}

TEST_CASE("chordal collapse of the worked example") {
  const Graph g = fixtures::example_graph();
  for (int r = 1; r <= 6; ++r) {
    const CollapseSequence seq = chordal_collapse_sequence(g, r);
    CHECK(verify_collapse(ind_r(g, r), seq, r).valid);
  }
  CHECK_THROWS_AS(chordal_collapse_sequence(generate_family(Family::cycle_complement, 5), 2), InputError);
}

TEST_CASE("P_3 at r = 2 starts with its connected pairs") {
  const CollapseSequence seq = chordal_collapse_sequence(generate_family(Family::path, 3), 2);
  REQUIRE(seq.steps.size() >= 2);
  CHECK(seq.steps[0] == FreePair{{1, 2}, {1, 2}});
  CHECK(seq.steps[1] == FreePair{{2, 3}, {2, 3}});
  CHECK(verify_collapse(ind_r(generate_family(Family::path, 3), 2), seq, 2).valid);
}

TEST_CASE("collapse properties on random co-chordal graphs") {
  SeededGen gen(73);
  for (int t = 0; t < 150; ++t) {
    const int n = gen.between(1, 7);
    const Graph g = testing_support::random_cochordal(gen, n);
    const int r = gen.between(1, n);
    const SimplicialComplex d = ind_r(g, r);
    const CollapseSequence seq = chordal_collapse_sequence(g, r);
    REQUIRE(verify_collapse(d, seq, r).valid);
    // Monotone in the parameter.
    CHECK(verify_collapse(d, seq, r + 1).valid);
    // Collapsible implies Leray.
    CHECK(leray_number(d) <= r);
    const auto gap = gap_free_collapse_sequence(g, r);
    REQUIRE(gap);
    CHECK(verify_collapse(d, *gap, r).valid);
  }
}

TEST_CASE("gap-free pipeline on cycle complements") {
  for (int n = 5; n <= 8; ++n) {
    const Graph g = generate_family(Family::cycle_complement, n);
    CHECK_FALSE(is_cochordal(g));
    for (int r = 2; r <= n; ++r) {
      const auto seq = gap_free_collapse_sequence(g, r);
      REQUIRE(seq);
      CHECK(verify_collapse(ind_r(g, r), *seq, r).valid);
    }
    CHECK_FALSE(gap_free_collapse_sequence(g, 1));
  }
  CHECK_THROWS_AS(gap_free_collapse_sequence(generate_family(Family::cycle, 6), 2), InputError);
}

TEST_CASE("certificate round trip") {
  const CollapseSequence seq = chordal_collapse_sequence(fixtures::example_graph(), 2);
  const std::string text = certificate_to_string(seq);
  CHECK(parse_certificate(text) == seq);
  CHECK(certificate_to_string(parse_certificate(text)) == text);
  CHECK(certificate_to_string({2, {{{1, 2}, {1, 2, 3}}}}) == "d 2\ns 1 2 | 1 2 3\n");
  CHECK_THROWS_AS(parse_certificate("s 1 | 1\n"), InputError);
  CHECK_THROWS_AS(parse_certificate("d 0\n"), InputError);
  CHECK_THROWS_AS(parse_certificate("d 2\ns 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_certificate("d 2\ns 1 | 1 | 2\n"), InputError);
  CHECK_THROWS_AS(parse_certificate("d 2\ns x | 1\n"), InputError);
  CHECK_THROWS_AS(parse_certificate(""), InputError);
}

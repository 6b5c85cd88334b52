#include <doctest.h>

#include "rindep/complex.hpp"
#include "rindep/error.hpp"
#include "rindep/homology.hpp"
#include "support.hpp"

using namespace rindep;
using testing_support::SeededGen;

namespace {

// Six-vertex real projective plane.
SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(
      6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

SimplicialComplex boundary_of_simplex(int n) {
  std::vector<VertexSet> facets;
  for (int v = 1; v <= n; ++v) facets.push_back(VertexSet::range(n).without(v));
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace

TEST_CASE("reduced homology of small complexes") {
  CHECK(reduced_homology_dims(SimplicialComplex::simplex(4)).top_nonzero() == -2);
  for (int n = 2; n <= 7; ++n) {
    const ReducedHomology h = reduced_homology_dims(boundary_of_simplex(n));
    CHECK(h.at(n - 2) == 1);
    CHECK(h.top_nonzero() == n - 2);
  }
  const ReducedHomology three_points =
      reduced_homology_dims(SimplicialComplex::from_facets(3, {{1}, {2}, {3}}));
  CHECK(three_points.at(0) == 2);
  const ReducedHomology empty = reduced_homology_dims(SimplicialComplex::from_facets(3, {VertexSet{}}));
  CHECK(empty.at(-1) == 1);
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3)).void_complex);
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3)).top_nonzero() == -2);
}

TEST_CASE("projective plane homology depends on the field") {
  const ReducedHomology h2 = reduced_homology_dims(rp2(), FieldSpec(2));
  CHECK(h2.at(1) == 1);
  CHECK(h2.at(2) == 1);
  for (std::uint32_t p : {0U, 3U, 32003U}) {
    const ReducedHomology h = reduced_homology_dims(rp2(), FieldSpec(p));
    CHECK(h.top_nonzero() == -2);
  }
  // The Betti table of its Stanley-Reisner ring changes with the field.
  CHECK_FALSE(hochster_betti(rp2(), FieldSpec(2)) == hochster_betti(rp2(), FieldSpec(0)));
  CHECK(hochster_betti(rp2(), FieldSpec(3)) == hochster_betti(rp2(), FieldSpec(0)));
}

TEST_CASE("Hochster oracle on small complexes") {
  const OracleReport k3 = run_oracle(ind_r(generate_family(Family::complete, 3), 1));
  CHECK(k3.betti.entries() == std::map<BettiTable::Key, std::uint64_t>{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
  CHECK(k3.leray == 1);
  CHECK(leray_number(SimplicialComplex::simplex(4)) == 0);
  CHECK(hochster_betti(SimplicialComplex::simplex(4)).entries() ==
        std::map<BettiTable::Key, std::uint64_t>{{{0, 0}, 1}});
  CHECK(hochster_betti(SimplicialComplex::void_complex(2)).all_zero());
  CHECK(leray_number(boundary_of_simplex(5)) == 4);
  CHECK(hochster_betti(ind_r(generate_family(Family::complete, 7), 3), FieldSpec(32003)).entries() ==
        std::map<BettiTable::Key, std::uint64_t>{{{0, 0}, 1}, {{1, 4}, 35}, {{2, 5}, 84}, {{3, 6}, 70}, {{4, 7}, 20}});
}

TEST_CASE("Hochster oracle agrees with dense brute force") {
  SeededGen gen(67);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.between(1, 7);
    const Graph g = testing_support::random_graph(gen, n, gen.between(1, 4), 5);
    const int r = gen.between(1, n);
    CHECK(hochster_betti(ind_r(g, r)).entries() == testing_support::brute_betti(g, r));
  }
}

TEST_CASE("oracle size guard") {
  CHECK_THROWS_AS(hochster_betti(SimplicialComplex::simplex(13)), InputError);
  CHECK_NOTHROW(hochster_betti(SimplicialComplex::simplex(13), FieldSpec(2), 13));
}

TEST_CASE("regularity equals Leray number plus one") {
  SeededGen gen(71);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.between(2, 8);
    const Graph g = testing_support::random_graph(gen, n);
    const int r = gen.between(1, n - 1);
    const OracleReport rep = run_oracle(ind_r(g, r));
    const auto reg = regularity(rep.betti, true);
    if (reg) CHECK(*reg == rep.leray + 1);
  }
}

#include <doctest.h>

#include "rindep/betti.hpp"
#include "rindep/vertex_set.hpp"
#include "support.hpp"

using namespace rindep;

TEST_CASE("vertex set basics") {
  VertexSet s{1, 3, 4};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min() == 1);
  CHECK(s.max() == 4);
  CHECK(s.to_vector() == std::vector<int>{1, 3, 4});
  CHECK(s.to_string() == "{1,3,4}");
  CHECK(VertexSet{}.to_string() == "{}");
  CHECK(VertexSet::range(3) == VertexSet{1, 2, 3});
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet::singleton(64).max() == 64);
  CHECK((s - VertexSet{3}) == VertexSet{1, 4});
  CHECK(VertexSet{1, 4}.is_subset_of(s));
}

TEST_CASE("lexicographic order on sorted vertex lists") {
  CHECK(lex_less(VertexSet{1, 2}, VertexSet{1, 2, 5}));
  CHECK(lex_less(VertexSet{1, 2, 5}, VertexSet{1, 3}));
  CHECK(lex_less(VertexSet{1, 3}, VertexSet{2}));
  CHECK(lex_less(VertexSet{}, VertexSet{1}));
  CHECK_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
}

TEST_CASE("minimal and maximal sets") {
  const std::vector<VertexSet> sets{{1, 2, 3}, {1, 2}, {2, 3}, {4}, {1, 2}, {3, 4}};
  CHECK(minimal_sets(sets) == std::vector<VertexSet>{{1, 2}, {2, 3}, {4}});
  CHECK(maximal_sets(sets) == std::vector<VertexSet>{{1, 2, 3}, {3, 4}});
}

TEST_CASE("k-subset enumeration visits each subset once") {
  testing_support::SeededGen gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    VertexSet ground;
    for (int v = 1; v <= 20; ++v)
      if (gen.chance(1, 2)) ground.insert(v);
    const int k = gen.between(0, ground.size());
    std::size_t count = 0;
    std::uint64_t last = 0;
    bool increasing = true, inside = true;
    for_each_subset_of_size(ground, k, [&](VertexSet s) {
      if (count > 0 && s.bits() <= last) increasing = false;
      if (!s.is_subset_of(ground) || s.size() != k) inside = false;
      last = s.bits();
      ++count;
    });
    CHECK(count == binomial(ground.size(), k));
    CHECK(increasing);
    CHECK(inside);
  }
  std::size_t high = 0;
  for_each_subset_of_size(VertexSet::range(64), 63, [&](VertexSet) { ++high; });
  CHECK(high == 64);
}

TEST_CASE("remap sends local labels to originals") {
  CHECK(remap(VertexSet{1, 3}, {4, 7, 9}) == VertexSet{4, 9});
  CHECK(remap(VertexSet{}, {4}) == VertexSet{});
}

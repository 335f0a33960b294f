#include "doctest.h"

#include <vector>

#include "etanu/coloring.hpp"
#include "etanu/corpus.hpp"
#include "etanu/errors.hpp"

using namespace etanu;

namespace {

SimplicialComplex points(int n) {
  std::vector<ElemSet> singles;
  for (int i = 0; i < n; ++i) singles.push_back(ElemSet::single(i));
  return SimplicialComplex::from_facets(ElemSet::universe(n), singles);
}

SimplicialComplex pentagon_rim() {
  std::vector<ElemSet> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(ElemSet::of({i, (i + 1) % 5}));
  return SimplicialComplex::from_facets(ElemSet::universe(5), edges);
}

void check_partition_witness(const SimplicialComplex& c, const ChiResult& r) {
  ElemSet seen;
  for (ElemSet cls : r.witness.classes) {
    CHECK(c.contains(cls));
    CHECK_FALSE(cls.intersects(seen));
    seen = seen | cls;
  }
  CHECK(seen == c.ground());
  CHECK(static_cast<int>(r.witness.classes.size()) == r.value);
}

}  // namespace

TEST_CASE("cover number of hand examples") {
  CHECK(chi(SimplicialComplex::full_simplex(ElemSet::universe(4))).value == 1);
  CHECK(chi(points(3)).value == 3);
  ChiResult pent = chi(pentagon_rim());
  CHECK(pent.value == 3);
  check_partition_witness(pentagon_rim(), pent);
  ChiResult u24 = chi(Matroid::uniform(4, 2).complex());
  CHECK(u24.value == 2);
  check_partition_witness(Matroid::uniform(4, 2).complex(), u24);
  CHECK_THROWS_AS(
      chi(SimplicialComplex::from_facets(ElemSet::universe(2), {ElemSet::single(0)})),
      DomainError);
}

TEST_CASE("covering formula agrees with exact set cover") {
  for (const auto& entry : Corpus::standard().matroids) {
    if (entry.m.ground().size() > 7) continue;
    CHECK(chi_matroid(entry.m) == chi(entry.m.complex()).value);
  }
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Matroid m = random_matroid(seed, 5);
    CHECK(chi_matroid(m) == chi(m.complex()).value);
  }
}

TEST_CASE("covering a matroid with loops is impossible") {
  Matroid g = Matroid::graphic(Multigraph{3, {{0, 1}, {1, 2}, {0, 2}}});
  Matroid with_loop = minor_contract(g, ElemSet::of({0, 1}));
  CHECK_THROWS_AS(chi_matroid(with_loop), LoopError);
}

TEST_CASE("list choice on two points") {
  SimplicialComplex c = points(2);
  ListAssignment same{1, {{0, ElemSet::single(0)}, {1, ElemSet::single(0)}}};
  CHECK_FALSE(list_colorable(c, same));
  ListAssignment diff{1, {{0, ElemSet::single(0)}, {1, ElemSet::single(1)}}};
  CHECK(list_colorable(c, diff));
  ListAssignment wide{2, {{0, ElemSet::of({0, 1})}, {1, ElemSet::of({0, 1})}}};
  CHECK(list_colorable(c, wide));
}

TEST_CASE("list chromatic number of hand examples") {
  ChiListResult simplex = chi_list(SimplicialComplex::full_simplex(ElemSet::universe(3)), 3);
  CHECK(simplex.value == 1);
  CHECK_FALSE(simplex.hard_assignment.has_value());

  ChiListResult two = chi_list(points(2), 3);
  CHECK(two.value == 2);
  REQUIRE(two.hard_assignment.has_value());
  CHECK(two.hard_assignment->k == 1);
  CHECK_FALSE(list_colorable(points(2), *two.hard_assignment));

  ChiListResult three = chi_list(points(3), 3);
  CHECK(three.value == 3);
  REQUIRE(three.hard_assignment.has_value());
  CHECK(three.hard_assignment->k == 2);
  CHECK_FALSE(list_colorable(points(3), *three.hard_assignment));

  ChiListResult over = chi_list(points(4), 3);
  CHECK(over.exceeded());
  REQUIRE(over.hard_assignment.has_value());
  CHECK(over.hard_assignment->k == 3);
  CHECK_FALSE(list_colorable(points(4), *over.hard_assignment));
}

TEST_CASE("list enumeration caps") {
  CHECK_THROWS_AS(chi_list(points(7), 2), ResourceError);
  CHECK_THROWS_AS(chi_list(points(3), 4), ResourceError);
}

TEST_CASE("chromatic sum bound on hand pairs") {
  Matroid f = Matroid::free_matroid(3);
  ChiSumReport free_pair = check_chi_sum(f, f);
  CHECK(free_pair.chi_m == 1);
  CHECK(free_pair.chi_n == 1);
  CHECK(free_pair.chi_intersection == 1);
  CHECK(free_pair.bound == 2);
  CHECK(free_pair.holds);
  CHECK(free_pair.list_checked);
  CHECK(free_pair.chi_list_value == 1);
  CHECK(free_pair.list_holds);

  Matroid u = Matroid::uniform(3, 1);
  ChiSumReport heavy = check_chi_sum(u, u);
  CHECK(heavy.chi_m == 3);
  CHECK(heavy.bound == 6);
  CHECK(heavy.chi_intersection == 3);
  CHECK(heavy.holds);
  CHECK_FALSE(heavy.list_checked);  // the bound exceeds the list cap

  CHECK_THROWS_AS(check_chi_sum(f, Matroid::free_matroid(4)), DomainError);
}

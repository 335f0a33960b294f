#include "doctest.h"

#include <algorithm>
#include <vector>

#include "etanu/corpus.hpp"
#include "etanu/errors.hpp"
#include "etanu/matroid.hpp"

using namespace etanu;

namespace {

// Brute-force rank: the largest independent subset of x, straight from the
// oracle.
int rank_oracle(const Matroid& m, ElemSet x) {
  int best = 0;
  for_each_subset(x, [&](ElemSet s) {
    if (m.independent(s)) best = std::max(best, s.size());
  });
  return best;
}

Multigraph triangle() { return Multigraph{3, {{0, 1}, {1, 2}, {0, 2}}}; }

}  // namespace

TEST_CASE("uniform matroid invariants") {
  Matroid u = Matroid::uniform(4, 2);
  CHECK(u.ground() == ElemSet::universe(4));
  CHECK(u.rank() == 2);
  CHECK(u.circuits().size() == 4);
  for (ElemSet c : u.circuits()) CHECK(c.size() == 3);
  CHECK(u.bases().size() == 6);
  for (ElemSet b : u.bases()) CHECK(b.size() == 2);
  CHECK(u.loops().empty());
  CHECK(u.independent(ElemSet::of({1, 3})));
  CHECK_FALSE(u.independent(ElemSet::of({0, 1, 2})));
  CHECK_THROWS_AS(u.independent(ElemSet::single(4)), DomainError);
  CHECK_THROWS_AS(Matroid::uniform(3, 0), LoopError);
}

TEST_CASE("free matroid has no circuits") {
  Matroid f = Matroid::free_matroid(3);
  CHECK(f.rank() == 3);
  CHECK(f.circuits().empty());
  CHECK(f.bases() == std::vector<ElemSet>{ElemSet::universe(3)});
}

TEST_CASE("partition matroid circuits are within-part pairs") {
  Matroid p = Matroid::partition({ElemSet::of({0, 1}), ElemSet::of({2, 3})}, {1, 1});
  CHECK(p.rank() == 2);
  CHECK(p.circuits() == std::vector<ElemSet>{ElemSet::of({0, 1}), ElemSet::of({2, 3})});
  CHECK(p.bases().size() == 4);
  CHECK_THROWS_AS(Matroid::partition({ElemSet::of({0, 1})}, {0}), LoopError);
  CHECK_THROWS_AS(Matroid::partition({ElemSet::of({0, 1}), ElemSet::of({1, 2})}, {1, 1}),
                  DomainError);
}

TEST_CASE("graphic matroid of the triangle") {
  Matroid g = Matroid::graphic(triangle());
  CHECK(g.rank() == 2);
  CHECK(g.circuits() == std::vector<ElemSet>{ElemSet::of({0, 1, 2})});
  CHECK(g.bases().size() == 3);
  CHECK_THROWS_AS(Matroid::graphic(Multigraph{2, {{0, 0}}}), LoopError);
  CHECK_THROWS_AS(Matroid::graphic(Multigraph{2, {{0, 2}}}), DomainError);
}

TEST_CASE("graphic matroid of the complete graph on four vertices") {
  // Edges indexed 01,02,03,12,13,23: four triangles and three 4-cycles.
  Multigraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Matroid g = Matroid::graphic(k4);
  CHECK(g.rank() == 3);
  CHECK(g.circuits().size() == 7);
  int triangles = 0, quads = 0;
  for (ElemSet c : g.circuits()) {
    if (c.size() == 3) ++triangles;
    if (c.size() == 4) ++quads;
  }
  CHECK(triangles == 4);
  CHECK(quads == 3);
  CHECK(g.independent(ElemSet::of({0, 1, 2})));       // star at vertex 0
  CHECK_FALSE(g.independent(ElemSet::of({0, 1, 3})));  // triangle 0-1-2
  CHECK(g.bases().size() == 16);                       // spanning trees of K4
}

TEST_CASE("parallel edges form a two-element circuit") {
  Matroid g = Matroid::graphic(Multigraph{2, {{0, 1}, {0, 1}}});
  CHECK(g.circuits() == std::vector<ElemSet>{ElemSet::of({0, 1})});
  CHECK(g.rank() == 1);
}

TEST_CASE("circuit-family constructor validates") {
  Matroid m = Matroid::from_circuits(4, {ElemSet::of({0, 1, 2})});
  CHECK(m.rank() == 3);
  CHECK(m.circuits() == std::vector<ElemSet>{ElemSet::of({0, 1, 2})});
  CHECK_THROWS_AS(Matroid::from_circuits(3, {ElemSet::single(1)}), LoopError);
  CHECK_THROWS_AS(Matroid::from_circuits(3, {ElemSet::of({0, 1}), ElemSet::of({0, 1, 2})}),
                  InvalidCircuitsError);
  CHECK_THROWS_AS(Matroid::from_circuits(3, {ElemSet::of({0, 1}), ElemSet::of({0, 2})}),
                  InvalidCircuitsError);

  Matroid sparse = Matroid::from_circuits(ElemSet::of({1, 3, 5}), {ElemSet::of({1, 3})});
  CHECK(sparse.ground() == ElemSet::of({1, 3, 5}));
  CHECK(sparse.rank() == 2);
  CHECK_FALSE(sparse.independent(ElemSet::of({1, 3})));

  Matroid si = Matroid::from_independent_sets(ElemSet::of({2, 4}), {ElemSet::of({2, 4})});
  CHECK(si.ground() == ElemSet::of({2, 4}));
  CHECK(si.rank() == 2);
  CHECK_THROWS_AS(Matroid::from_independent_sets(ElemSet::of({2, 4}), {ElemSet::single(2)}),
                  LoopError);
}

TEST_CASE("independent-set constructor closes downward and validates") {
  Matroid m = Matroid::from_independent_sets(2, {ElemSet::of({0, 1})});
  CHECK(m.independent(ElemSet::single(0)));
  CHECK(m.rank() == 2);

  // Generated by {0,1} and {2,3}: {0} cannot be augmented from {2,3}.
  CHECK_THROWS_AS(
      Matroid::from_independent_sets(4, {ElemSet::of({0, 1}), ElemSet::of({2, 3})}),
      NotAMatroidError);
  try {
    Matroid::from_independent_sets(4, {ElemSet::of({0, 1}), ElemSet::of({2, 3})});
  } catch (const NotAMatroidError& e) {
    CHECK(e.counterexample.s.size() < e.counterexample.t.size());
  }
  CHECK_THROWS_AS(Matroid::from_independent_sets(2, {ElemSet::single(0)}), LoopError);
}

TEST_CASE("greedy rank equals brute-force rank") {
  for (const auto& entry : Corpus::standard().matroids) {
    if (entry.m.ground().size() > 6) continue;
    for_each_subset(entry.m.ground(), [&](ElemSet x) {
      CHECK(entry.m.rank(x) == rank_oracle(entry.m, x));
    });
  }
}

TEST_CASE("rank is monotone and submodular") {
  Matroid m = random_matroid(42, 5);
  ElemSet g = m.ground();
  for_each_subset(g, [&](ElemSet x) {
    for_each_subset(g, [&](ElemSet y) {
      CHECK(m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y));
      if (x.subset_of(y)) CHECK(m.rank(x) <= m.rank(y));
    });
  });
  CHECK(m.rank(ElemSet()) == 0);
}

TEST_CASE("restriction minor keeps inside circuits") {
  for (const auto& entry : Corpus::standard().matroids) {
    const Matroid& m = entry.m;
    if (m.ground().size() > 6) continue;
    ElemSet x;
    int i = 0;
    for (int v : m.ground())
      if (i++ % 2 == 0) x = x.with(v);
    Matroid r = minor_restrict(m, x);
    CHECK(r.ground() == x);
    std::vector<ElemSet> inside;
    for (ElemSet c : m.circuits())
      if (c.subset_of(x)) inside.push_back(c);
    CHECK(r.circuits() == inside);
    for_each_subset(x, [&](ElemSet s) { CHECK(r.rank(s) == m.rank(s)); });
  }
}

TEST_CASE("contraction minor satisfies the classical rank identity") {
  for (const auto& entry : Corpus::standard().matroids) {
    const Matroid& m = entry.m;
    if (m.ground().size() > 6) continue;
    ElemSet x = ElemSet::of({m.ground().min_element(), m.ground().max_element()});
    Matroid c = minor_contract(m, x);
    CHECK(c.ground() == (m.ground() - x));
    for_each_subset(c.ground(), [&](ElemSet s) {
      CHECK(c.rank(s) == m.rank(s | x) - m.rank(x));
    });
  }
}

TEST_CASE("contraction can create loops") {
  Matroid g = Matroid::graphic(triangle());
  Matroid c = minor_contract(g, ElemSet::of({0, 1}));
  CHECK(c.loops() == ElemSet::single(2));
  CHECK(c.circuits() == std::vector<ElemSet>{ElemSet::single(2)});
  CHECK(c.rank() == 0);
  CHECK(minor_contract(g, ElemSet::single(0)).loops().empty());
}

TEST_CASE("element simplification erases the circuits through it") {
  Matroid u = Matroid::uniform(4, 2);
  Matroid s = sim_element(u, 0);
  std::vector<ElemSet> avoid;
  for (ElemSet c : u.circuits())
    if (!c.contains(0)) avoid.push_back(c);
  CHECK(s.circuits() == avoid);
  CHECK(s.ground() == u.ground());
  // The element turns into a coloop: rank one above the deletion.
  Matroid del = minor_restrict(u, u.ground().without(0));
  CHECK(s.rank() == del.rank() + 1);
  for (ElemSet b : s.bases()) CHECK(b.contains(0));
}

TEST_CASE("axiom verification on complexes") {
  for (const auto& entry : Corpus::standard().matroids) {
    if (entry.m.ground().size() > 6) continue;
    CHECK_FALSE(verify_matroid_axioms(entry.m.complex()).has_value());
  }
  // The pentagon rim is not a matroid complex: {0} cannot be augmented
  // from {2,3}.
  std::vector<ElemSet> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(ElemSet::of({i, (i + 1) % 5}));
  auto bad = verify_matroid_axioms(
      SimplicialComplex::from_facets(ElemSet::universe(5), edges));
  REQUIRE(bad.has_value());
  CHECK(bad->s.size() < bad->t.size());
}

TEST_CASE("matroid complex lists the independent sets") {
  Matroid u = Matroid::uniform(4, 2);
  const SimplicialComplex& c = u.complex();
  for_each_subset(u.ground(), [&](ElemSet s) { CHECK(c.contains(s) == u.independent(s)); });
  CHECK(c.facets().size() == u.bases().size());
}

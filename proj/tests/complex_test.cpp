#include "doctest.h"

#include <vector>

#include "etanu/complex.hpp"
#include "etanu/errors.hpp"

using namespace etanu;

namespace {

const ElemSet V4 = ElemSet::universe(4);
const ElemSet V5 = ElemSet::universe(5);

SimplicialComplex pentagon_rim() {
  std::vector<ElemSet> edges;
  for (int i = 0; i < 5; ++i) edges.push_back(ElemSet::of({i, (i + 1) % 5}));
  return SimplicialComplex::from_facets(V5, edges);
}

}  // namespace

TEST_CASE("void and empty-face complexes are distinct") {
  SimplicialComplex v = SimplicialComplex::void_complex(V4);
  SimplicialComplex e = SimplicialComplex::empty_face_only(V4);
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(v.dim() == -2);
  CHECK(e.dim() == -1);
  CHECK(v.face_count() == 0);
  CHECK(e.face_count() == 1);
  CHECK_FALSE(v.contains(ElemSet()));
  CHECK(e.contains(ElemSet()));
  CHECK_FALSE(v == e);
}

TEST_CASE("facet construction drops dominated and duplicate entries") {
  SimplicialComplex c = SimplicialComplex::from_facets(
      V4, {ElemSet::of({0, 1}), ElemSet::single(0), ElemSet::of({0, 1}), ElemSet::of({2, 3})});
  CHECK(c.facets() == std::vector<ElemSet>{ElemSet::of({0, 1}), ElemSet::of({2, 3})});
  CHECK(c.contains(ElemSet::single(1)));
  CHECK_FALSE(c.contains(ElemSet::of({1, 2})));
  CHECK(c.face_count() == 7);  // {}, 4 vertices, 2 edges
  CHECK(SimplicialComplex::from_facets(V4, {}) == SimplicialComplex::empty_face_only(V4));
  CHECK_THROWS_AS(SimplicialComplex::from_facets(V4, {ElemSet::of({0, 4})}), DomainError);
}

TEST_CASE("face-family construction closes downward") {
  SimplicialComplex c = SimplicialComplex::from_faces(V4, {ElemSet::of({0, 1, 2})});
  CHECK(c.facets() == std::vector<ElemSet>{ElemSet::of({0, 1, 2})});
  CHECK(c.face_count() == 8);
  CHECK(SimplicialComplex::from_faces(V4, {}).is_void());
  CHECK(SimplicialComplex::from_faces(V4, {ElemSet()}) ==
        SimplicialComplex::empty_face_only(V4));
}

TEST_CASE("membership checks the ground set") {
  SimplicialComplex c = SimplicialComplex::full_simplex(ElemSet::universe(3));
  CHECK(c.contains(ElemSet::of({0, 1, 2})));
  CHECK_THROWS_AS(c.contains(ElemSet::single(3)), DomainError);
}

TEST_CASE("all faces sorted by dimension then lex") {
  SimplicialComplex c =
      SimplicialComplex::from_facets(ElemSet::universe(3), {ElemSet::of({0, 1}), ElemSet::of({1, 2})});
  auto faces = c.all_faces();
  std::vector<ElemSet> want = {ElemSet(),          ElemSet::single(0), ElemSet::single(1),
                               ElemSet::single(2), ElemSet::of({0, 1}), ElemSet::of({1, 2})};
  CHECK(faces == want);
}

TEST_CASE("ground coverage") {
  CHECK(pentagon_rim().covers_ground());
  SimplicialComplex c = SimplicialComplex::from_facets(V4, {ElemSet::of({0, 1})});
  CHECK_FALSE(c.covers_ground());
  CHECK_FALSE(SimplicialComplex::void_complex(V4).covers_ground());
  CHECK(SimplicialComplex::void_complex(ElemSet()).covers_ground());
}

TEST_CASE("minimal non-faces of hand examples") {
  SimplicialComplex two_points =
      SimplicialComplex::from_facets(ElemSet::universe(2), {ElemSet::single(0), ElemSet::single(1)});
  CHECK(circ(two_points) == std::vector<ElemSet>{ElemSet::of({0, 1})});

  // Pentagon rim: the minimal non-faces are the five diagonals.
  auto diag = circ(pentagon_rim());
  std::vector<ElemSet> want = {ElemSet::of({0, 2}), ElemSet::of({0, 3}), ElemSet::of({1, 3}),
                               ElemSet::of({1, 4}), ElemSet::of({2, 4})};
  CHECK(diag == want);

  CHECK(circ(SimplicialComplex::full_simplex(V4)).empty());
  CHECK(circ(SimplicialComplex::empty_face_only(ElemSet::universe(2))) ==
        std::vector<ElemSet>{ElemSet::single(0), ElemSet::single(1)});
  CHECK_THROWS_AS(circ(SimplicialComplex::void_complex(V4)), DomainError);
}

TEST_CASE("duality round trip on covering complexes") {
  CHECK(duality_roundtrip(pentagon_rim()));
  CHECK(duality_roundtrip(SimplicialComplex::full_simplex(V4)));
  CHECK(duality_roundtrip(SimplicialComplex::empty_face_only(ElemSet())));
  CHECK_THROWS_AS(duality_roundtrip(SimplicialComplex::empty_face_only(ElemSet::universe(2))),
                  DomainError);
}

TEST_CASE("join of two points is an edge") {
  SimplicialComplex p = SimplicialComplex::full_simplex(ElemSet::single(0));
  SimplicialComplex q = SimplicialComplex::full_simplex(ElemSet::single(1));
  CHECK(join(p, q) == SimplicialComplex::full_simplex(ElemSet::universe(2)));
}

TEST_CASE("join identities at the degenerate ends") {
  SimplicialComplex c = pentagon_rim();
  SimplicialComplex one = SimplicialComplex::empty_face_only(ElemSet());
  CHECK(join(c, one) == c);
  CHECK(join(one, c) == c);

  // The void complex absorbs: no faces on one side, no joint faces at all.
  SimplicialComplex v = SimplicialComplex::void_complex(ElemSet::from_bits(0x20));
  CHECK(join(c, v).is_void());
  CHECK(join(v, c).is_void());
  CHECK(join(c, v).ground() == (c.ground() | v.ground()));

  CHECK_THROWS_AS(join(c, pentagon_rim()), DomainError);  // overlapping grounds
}

TEST_CASE("union and intersection of complexes") {
  SimplicialComplex a = SimplicialComplex::from_facets(V4, {ElemSet::of({0, 1, 2})});
  SimplicialComplex b = SimplicialComplex::from_facets(V4, {ElemSet::of({1, 2, 3})});
  SimplicialComplex u = union_complex(a, b);
  SimplicialComplex i = intersection_complex(a, b);
  CHECK(u.facets() == std::vector<ElemSet>{ElemSet::of({0, 1, 2}), ElemSet::of({1, 2, 3})});
  CHECK(i.facets() == std::vector<ElemSet>{ElemSet::of({1, 2})});
  CHECK(union_complex(a, SimplicialComplex::void_complex(V4)) == a);
  CHECK(intersection_complex(a, SimplicialComplex::void_complex(V4)).is_void());
}

TEST_CASE("restriction to a vertex subset") {
  SimplicialComplex r = restrict_complex(pentagon_rim(), ElemSet::of({0, 2, 4}));
  CHECK(r.ground() == ElemSet::of({0, 2, 4}));
  CHECK(r.facets() == std::vector<ElemSet>{ElemSet::of({0, 4}), ElemSet::single(2)});
  CHECK(restrict_complex(SimplicialComplex::void_complex(V4), ElemSet::of({0, 1})).is_void());
  CHECK_THROWS_AS(restrict_complex(pentagon_rim(), ElemSet()), DomainError);
}

TEST_CASE("shifting relabels the ground set") {
  SimplicialComplex c =
      SimplicialComplex::from_facets(ElemSet::universe(2), {ElemSet::of({0, 1})});
  SimplicialComplex s = shift_complex(c, 3);
  CHECK(s.ground() == ElemSet::of({3, 4}));
  CHECK(s.facets() == std::vector<ElemSet>{ElemSet::of({3, 4})});
  CHECK(shift_complex(s, -3) == c);
}

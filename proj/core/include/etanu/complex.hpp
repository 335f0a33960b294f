#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "etanu/elem_set.hpp"
#include "etanu/limits.hpp"

namespace etanu {

// An abstract simplicial complex over a ground set, represented by its
// facets (maximal faces).  Two degenerate complexes are distinguished: the
// void complex (no faces at all) and the complex whose only face is the empty
// set.  Both matter: they carry different homology.
class SimplicialComplex {
 public:
  // The complex with no faces.
  static SimplicialComplex void_complex(ElemSet ground);
  // The complex {{}}.
  static SimplicialComplex empty_face_only(ElemSet ground);
  // Downward closure is implicit: the faces are all subsets of the facets.
  // Dominated and duplicate entries are dropped; an empty list means {{}}.
  static SimplicialComplex from_facets(ElemSet ground, std::vector<ElemSet> facets);
  // Downward closure of an arbitrary family of generating faces.  An empty
  // family yields the void complex.
  static SimplicialComplex from_faces(ElemSet ground, const std::vector<ElemSet>& faces);
  static SimplicialComplex full_simplex(ElemSet ground);

  ElemSet ground() const { return ground_; }
  bool is_void() const { return void_; }
  // Lexicographically sorted; empty only for the void complex and {{}}.
  const std::vector<ElemSet>& facets() const { return facets_; }

  // Membership.  False for everything (the empty set included) in the void
  // complex.  Throws DomainError if s is not within the ground set.
  bool contains(ElemSet s) const;

  // dim of the void complex is -2, of {{}} it is -1.
  int dim() const;

  std::size_t face_count() const;
  // All faces sorted by (dimension, lex).  Includes the empty face when the
  // complex is not void.
  std::vector<ElemSet> all_faces(const Limits& limits = Limits{}) const;

  // True when every ground element is a vertex of some face.
  bool covers_ground() const;

  bool operator==(const SimplicialComplex& o) const {
    return ground_ == o.ground_ && void_ == o.void_ && facets_ == o.facets_;
  }

  std::string to_string() const;

 private:
  SimplicialComplex(ElemSet ground, bool is_void, std::vector<ElemSet> facets)
      : ground_(ground), void_(is_void), facets_(std::move(facets)) {}

  ElemSet ground_;
  bool void_;
  std::vector<ElemSet> facets_;
};

// Minimal non-faces, in lexicographic order.  Throws DomainError on the void
// complex, which has no non-face minimal over faces.
std::vector<ElemSet> circ(const SimplicialComplex& c);

// Checks that the complex is recovered as the independence complex of
// (ground, circ(c)).  Requires every ground element to lie in a face.
bool duality_roundtrip(const SimplicialComplex& c, const Limits& limits = Limits{});

// Join of complexes on disjoint ground sets: faces are unions of a face of
// each.  Void absorbs, {{}} is the identity.
SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d);

// Union and intersection of complexes on the same ground set.
SimplicialComplex union_complex(const SimplicialComplex& c, const SimplicialComplex& d);
SimplicialComplex intersection_complex(const SimplicialComplex& c, const SimplicialComplex& d);

// The subcomplex of faces inside s, on ground set s.  s must be a non-empty
// subset of the ground set.
SimplicialComplex restrict_complex(const SimplicialComplex& c, ElemSet s);

// Relabels every element v as v + offset.
SimplicialComplex shift_complex(const SimplicialComplex& c, int offset);

}  // namespace etanu

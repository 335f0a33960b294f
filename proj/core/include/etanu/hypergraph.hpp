#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etanu/elem_set.hpp"
#include "etanu/limits.hpp"

namespace etanu {

class SimplicialComplex;

// A finite hypergraph: a vertex set and a family of edges over it.  Edges are
// kept deduplicated and in lexicographic order, so two hypergraphs are equal
// iff their representations are equal.
struct Hypergraph {
  ElemSet vertices;
  std::vector<ElemSet> edges;

  bool operator==(const Hypergraph&) const = default;
  std::string to_string() const;
};

// Validates edges against the vertex set, sorts and deduplicates.
Hypergraph make_hypergraph(ElemSet vertices, std::vector<ElemSet> edges);

// H - e: removes one edge; the vertex set stays.  Throws NotFoundError if the
// edge is absent.
Hypergraph delete_edge(const Hypergraph& h, ElemSet e);

// H[X]: keeps vertices X and the edges entirely inside X.
Hypergraph restrict(const Hypergraph& h, ElemSet x);

// H/X: removes X from the vertex set and replaces each edge e not contained
// in X by e \ X.  Edges inside X disappear -- the empty edge included, since
// it lies inside every X.
Hypergraph contract(const Hypergraph& h, ElemSet x);

// H \ X: removes X and every edge meeting X.
Hypergraph delete_vertices(const Hypergraph& h, ElemSet x);

// H ~ X: keeps the vertex set, drops every edge meeting X.
Hypergraph sim(const Hypergraph& h, ElemSet x);

// The independence complex: all vertex sets containing no edge.  Vertices of
// the result are exactly vertices(h); an uncovered vertex stays in the ground
// set.  The empty edge makes everything dependent, yielding the void complex.
SimplicialComplex independence_complex(const Hypergraph& h, const Limits& limits = Limits{});

// Why a family of edges fails to be the circuit family of a matroid.
struct CircuitViolation {
  enum class Kind { EmptyEdge, NestedPair, EliminationFailure };
  Kind kind;
  // EmptyEdge: c1 = {}.  NestedPair: c1 is a proper subset of c2.
  // EliminationFailure: u in c1 & c2 and v in c1 - c2 admit no edge inside
  // (c1 | c2) - {u} through v.
  ElemSet c1, c2;
  int u = -1, v = -1;
  std::string to_string() const;
};

// Checks the circuit axioms: no empty edge, edges form an antichain, and the
// strong elimination property.  Returns the first violation in deterministic
// (lexicographic) scan order, or nullopt if the family is a circuit family.
std::optional<CircuitViolation> check_circuit_axioms(const Hypergraph& h);

}  // namespace etanu

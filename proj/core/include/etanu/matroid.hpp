#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etanu/complex.hpp"
#include "etanu/elem_set.hpp"
#include "etanu/errors.hpp"
#include "etanu/hypergraph.hpp"
#include "etanu/limits.hpp"

namespace etanu {

// A multigraph given by a vertex count and an indexed edge list.  Parallel
// edges are allowed; self-loops are not (they would become loops of the
// cycle matroid).
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const Multigraph&) const = default;
};

// Witness that a family of sets fails the augmentation axiom: s and t are in
// the family, |s| < |t|, and no element of t - s extends s inside the family.
struct AugmentationCounterexample {
  ElemSet s, t;
  std::string to_string() const;
};

// An immutable matroid.  The independence oracle is the source of truth;
// circuits, the independence complex and bases are derived lazily and cached.
// Copies share the caches.
class Matroid {
 public:
  static Matroid uniform(int n, int k);
  static Matroid free_matroid(int n);
  // parts must partition the union of parts; capacities pair up with parts
  // and must be >= 1 (capacity 0 would make every element of the part a loop).
  static Matroid partition(const std::vector<ElemSet>& parts, const std::vector<int>& capacities);
  // Cycle matroid of a multigraph; ground elements are the edge indices.
  static Matroid graphic(const Multigraph& g);
  // Validates the circuit axioms first (InvalidCircuitsError on failure) and
  // rejects singleton circuits (LoopError).  The int form uses ground {0..n-1};
  // the ElemSet form keeps a sparse ground (as minors leave behind).
  static Matroid from_circuits(int n, std::vector<ElemSet> circuits);
  static Matroid from_circuits(ElemSet ground, std::vector<ElemSet> circuits);
  // Takes the downward closure of `sets` as the independent sets, then checks
  // the matroid axioms exhaustively (NotAMatroidError with counterexample)
  // and that no element is a loop.
  static Matroid from_independent_sets(int n, const std::vector<ElemSet>& sets);
  static Matroid from_independent_sets(ElemSet ground, const std::vector<ElemSet>& sets);

  ElemSet ground() const { return ground_; }
  // Provenance label for reports; minors extend the label of their source.
  const std::string& describe() const { return name_; }

  // Throws DomainError if s is not within the ground set.
  bool independent(ElemSet s) const;

  // Greedy rank of a subset (or of the whole ground set).
  int rank(ElemSet x) const;
  int rank() const { return rank(ground_); }

  // Minimal dependent sets, lexicographically sorted.  Cached.
  const std::vector<ElemSet>& circuits() const;

  // The complex of independent sets.  Cached.
  const SimplicialComplex& complex() const;

  // Maximal independent sets; in a matroid they all have full rank.
  const std::vector<ElemSet>& bases() const;

  // Elements contained in no independent set.  The public constructors never
  // produce loops, but contraction can.
  ElemSet loops() const;

 private:
  friend Matroid minor_restrict(const Matroid&, ElemSet);
  friend Matroid minor_contract(const Matroid&, ElemSet);
  friend Matroid sim_element(const Matroid&, int);

  Matroid(ElemSet ground, std::function<bool(ElemSet)> oracle, std::string name);

  struct Caches;
  ElemSet ground_;
  std::function<bool(ElemSet)> oracle_;
  std::string name_;
  std::shared_ptr<Caches> caches_;
};

// Exception carrying the augmentation counterexample of from_independent_sets.
class NotAMatroidError : public DomainError {
 public:
  NotAMatroidError(std::string msg, AugmentationCounterexample ce)
      : DomainError(std::move(msg)), counterexample(ce) {}
  AugmentationCounterexample counterexample;
};

// Exception carrying the circuit-axiom violation of from_circuits.
class InvalidCircuitsError : public DomainError {
 public:
  InvalidCircuitsError(std::string msg, CircuitViolation v)
      : DomainError(std::move(msg)), violation(std::move(v)) {}
  CircuitViolation violation;
};

// Checks that a complex is the independence complex of a matroid: the empty
// set is a face and augmentation holds for every face pair.  Returns the
// first counterexample in lexicographic scan order.
std::optional<AugmentationCounterexample> verify_matroid_axioms(const SimplicialComplex& c);

// Minors.  Ground elements keep their identity (no renumbering).
// Restriction to x: independence is unchanged.
Matroid minor_restrict(const Matroid& m, ElemSet x);
// Contraction of x, defined through the circuit representation: a set s in
// the remaining ground is dependent iff it contains c - x for some circuit c
// not inside x.  This can create loops; they are tolerated on minors.
Matroid minor_contract(const Matroid& m, ElemSet x);
// The matroid whose circuits are the circuits of m avoiding v; ground is
// unchanged and v becomes a coloop.
Matroid sim_element(const Matroid& m, int v);

// The complex of sets independent in every given matroid (all on the same
// ground set).  With a single matroid this is its independence complex; with
// none it would be the full simplex, so at least one is required.
SimplicialComplex common_independence_complex(const std::vector<const Matroid*>& ms,
                                              const Limits& limits = Limits{});
SimplicialComplex common_independence_complex(const Matroid& m, const Matroid& n,
                                              const Limits& limits = Limits{});

}  // namespace etanu

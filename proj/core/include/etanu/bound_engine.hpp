#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "etanu/coloring.hpp"
#include "etanu/complex.hpp"
#include "etanu/homology.hpp"
#include "etanu/hypergraph.hpp"
#include "etanu/limits.hpp"
#include "etanu/matroid.hpp"
#include "etanu/rational.hpp"

namespace etanu {

// One move of the connectivity game on a hypergraph: either a vertex move on
// v with {v} not an edge (branches: delete v / contract v, bonus 1), or an
// edge move on an inclusion-minimal edge e (branches: delete e / contract e,
// bonus |e| - 1).
struct GameMove {
  enum class Kind { Vertex, Edge };
  Kind kind;
  int vertex = -1;
  ElemSet edge;
  int bonus() const { return kind == Kind::Vertex ? 1 : edge.size() - 1; }
  std::string to_string() const;
};

// The derivation tree of an optimal line of play, for --trace output.
struct DerivationNode {
  std::string position;  // printed hypergraph
  EtaValue value;
  std::optional<GameMove> move;  // empty at a base position
  std::unique_ptr<DerivationNode> delete_branch;
  std::unique_ptr<DerivationNode> contract_branch;
};

// The value of the connectivity game: base cases are 0 once the empty edge
// appears, 0 on the empty hypergraph, infinity when edges run out with
// vertices left; otherwise the best move's min(delete, contract + bonus).
// Positions are memoized under a canonical relabeling, so the value is
// relabeling-invariant by construction.  The value is a lower bound for
// eta of the independence complex.
struct GameResult {
  EtaValue value;
  std::unique_ptr<DerivationNode> trace;  // only when requested
};
GameResult game_value(const Hypergraph& h, bool want_trace = false,
                      const Limits& limits = Limits{});

// Outcome of the branch selection on an intersection of matroids at a vertex
// v that is not a loop of M1: either the "make v a coloop" branch already
// bounds eta, or contracting some circuit of M1 through v that is independent
// in the other matroids does, with bonus |circuit| - 1.
struct BranchOutcome {
  enum class Kind { Coloop, Contract };
  Kind kind;
  EtaValue lhs;          // eta of the intersection complex
  EtaValue branch_value; // eta after the branch
  int bonus = 0;         // 0 for the coloop branch, |c|-1 for contraction
  ElemSet circuit;       // only for Kind::Contract
  std::string to_string() const;
};

// Evaluates both branches and returns one for which the bound holds; tries
// the coloop branch first, then candidate circuits in lexicographic order.
// Raises TheoremViolationError if none works (which would be a genuine
// counterexample).
BranchOutcome coloop_or_contract(const std::vector<const Matroid*>& matroids, int v,
                                 CoefficientField field = CoefficientField::rationals(),
                                 const Limits& limits = Limits{});

// The structural equalities behind coloop_or_contract, checked literally on
// the circuit hypergraphs.  H is the union of the circuit families, C_1..C_t
// the circuits of the first matroid through v independent in all others.
//  (1) removing C_1..C_t from H has independence complex
//      (M1 ~ v) & M2 & ... & Mk
//  (2) removing only C_1..C_{j-1} and contracting C_j has the same
//      independence complex as contracting C_j from H directly
//  (3) contracting C_j from H yields the intersection of the contracted
//      matroids
//  (4) contracting C_j commutes with the union of the circuit hypergraphs.
struct ClaimReport {
  int t = 0;
  bool eq1 = false;
  std::vector<bool> eq2, eq3, eq4;  // per circuit
  bool all_hold() const;
  std::string to_string() const;
};
ClaimReport check_claim_equalities(const std::vector<const Matroid*>& matroids, int v,
                                   const Limits& limits = Limits{});

// eta(M & N) >= nu_pq(M, N) / (p + q), exactly.
struct EtaNuReport {
  EtaValue eta_value;
  int nu = 0;
  int p = 0, q = 0;
  bool holds = false;
  bool tight = false;
  std::string to_string() const;
};
EtaNuReport check_eta_nu_bound(const Matroid& m, const Matroid& n, int p, int q,
                               CoefficientField field = CoefficientField::rationals(),
                               const Limits& limits = Limits{});

// delta_eta(M & N) <= chi(M) + chi(N), and within the list-coloring limits
// chi_list(M & N) <= ceil(delta_eta(M & N)).
struct DeltaEtaReport {
  Frac delta;
  int chi_m = 0, chi_n = 0;
  bool holds = false;
  bool tight = false;
  bool list_checked = false;
  std::optional<int> chi_list_value;
  bool list_holds = false;
  std::string to_string() const;
};
DeltaEtaReport check_delta_eta_bound(const Matroid& m, const Matroid& n,
                                     CoefficientField field = CoefficientField::rationals(),
                                     const Limits& limits = Limits{});

}  // namespace etanu

#include "doctest.h"

#include <vector>

#include "etanu/bound_engine.hpp"
#include "etanu/corpus.hpp"
#include "etanu/errors.hpp"
#include "etanu/homology.hpp"
#include "etanu/hypergraph.hpp"

using namespace etanu;

namespace {

Hypergraph cycle4() {
  std::vector<ElemSet> edges;
  for (int i = 0; i < 4; ++i) edges.push_back(ElemSet::of({i, (i + 1) % 4}));
  return make_hypergraph(ElemSet::universe(4), edges);
}

const Corpus::PairEntry& pair_named(const std::string& name) {
  for (const auto& entry : Corpus::standard().pairs)
    if (entry.name == name) return entry;
  throw std::runtime_error("no pair " + name);
}

void check_trace(const DerivationNode& node) {
  if (!node.move.has_value()) {
    CHECK(node.delete_branch == nullptr);
    CHECK(node.contract_branch == nullptr);
    return;
  }
  REQUIRE(node.delete_branch != nullptr);
  REQUIRE(node.contract_branch != nullptr);
  EtaValue expect =
      min(node.delete_branch->value, node.contract_branch->value + node.move->bonus());
  CHECK(node.value == expect);
  check_trace(*node.delete_branch);
  check_trace(*node.contract_branch);
}

}  // namespace

TEST_CASE("game base positions") {
  ElemSet v2 = ElemSet::universe(2);
  CHECK(game_value(make_hypergraph(ElemSet(), {})).value == EtaValue(0));
  CHECK(game_value(make_hypergraph(v2, {ElemSet()})).value == EtaValue(0));
  CHECK(game_value(make_hypergraph(v2, {})).value.is_infinite());
}

TEST_CASE("game hand values") {
  ElemSet v2 = ElemSet::universe(2);
  CHECK(game_value(make_hypergraph(v2, {ElemSet::of({0, 1})})).value == EtaValue(1));
  CHECK(game_value(cycle4()).value == EtaValue(1));
}

TEST_CASE("game move bonuses") {
  GameMove vertex{GameMove::Kind::Vertex, 3, ElemSet{}};
  CHECK(vertex.bonus() == 1);
  GameMove edge{GameMove::Kind::Edge, -1, ElemSet::of({0, 1, 2})};
  CHECK(edge.bonus() == 2);
}

TEST_CASE("game value bounds the connectivity index") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Hypergraph h = random_hypergraph(seed, 5, 4, 3);
    EtaValue g = game_value(h).value;
    EtaValue e = eta(independence_complex(h));
    CHECK(g <= e);
  }
}

TEST_CASE("game value is relabeling invariant") {
  Rng rng(7);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Hypergraph h = random_hypergraph(seed, 6, 5, 3);
    auto perm = random_permutation(rng, 6);
    CHECK(game_value(h).value == game_value(relabel(h, perm)).value);
  }
}

TEST_CASE("derivation trace is internally consistent") {
  GameResult r = game_value(cycle4(), true);
  REQUIRE(r.trace != nullptr);
  CHECK(r.trace->value == r.value);
  check_trace(*r.trace);
  CHECK(game_value(cycle4(), false).trace == nullptr);
}

TEST_CASE("game vertex cap") {
  CHECK_THROWS_AS(game_value(make_hypergraph(ElemSet::universe(13), {ElemSet::of({0, 1})})),
                  ResourceError);
}

TEST_CASE("branch selection on a circuit worth contracting") {
  Matroid u23 = Matroid::uniform(3, 2);
  Matroid f3 = Matroid::free_matroid(3);
  BranchOutcome out = coloop_or_contract({&u23, &f3}, 0);
  CHECK(out.lhs == EtaValue(2));  // the common complex is the triangle rim
  CHECK(out.kind == BranchOutcome::Kind::Contract);
  CHECK(out.circuit == ElemSet::of({0, 1, 2}));
  CHECK(out.bonus == 2);
  CHECK(out.branch_value + out.bonus <= out.lhs);
}

TEST_CASE("branch selection settles for the coloop side") {
  Matroid u12 = Matroid::uniform(2, 1);
  BranchOutcome out = coloop_or_contract({&u12, &u12}, 0);
  CHECK(out.kind == BranchOutcome::Kind::Coloop);
  CHECK(out.lhs == EtaValue(1));
  CHECK(out.branch_value == EtaValue(1));
  CHECK(out.bonus == 0);
  CHECK(out.lhs >= out.branch_value);
}

TEST_CASE("branch selection validates its inputs") {
  Matroid f3 = Matroid::free_matroid(3);
  CHECK_THROWS_AS(coloop_or_contract({}, 0), DomainError);
  CHECK_THROWS_AS(coloop_or_contract({&f3}, 5), DomainError);
  Matroid f4 = Matroid::free_matroid(4);
  CHECK_THROWS_AS(coloop_or_contract({&f3, &f4}, 0), DomainError);
}

TEST_CASE("structural equalities behind the branch step") {
  Matroid u23 = Matroid::uniform(3, 2);
  Matroid f3 = Matroid::free_matroid(3);
  ClaimReport rep = check_claim_equalities({&u23, &f3}, 0);
  CHECK(rep.t == 1);
  CHECK(rep.eq1);
  REQUIRE(rep.eq2.size() == 1);
  CHECK(rep.all_hold());

  for (const auto& entry : Corpus::standard().pairs) {
    if (entry.m.ground().size() > 5) continue;
    int v = entry.m.ground().min_element();
    if (entry.m.loops().contains(v)) continue;
    CHECK(check_claim_equalities({&entry.m, &entry.n}, v).all_hold());
  }
}

TEST_CASE("connectivity bound from tuples") {
  const auto& blown = pair_named("blown-11");
  EtaNuReport rep = check_eta_nu_bound(blown.m, blown.n, 1, 1);
  CHECK(rep.eta_value == EtaValue(1));
  CHECK(rep.nu == 2);
  CHECK(rep.holds);
  CHECK(rep.tight);

  Matroid f3 = Matroid::free_matroid(3);
  EtaNuReport free_rep = check_eta_nu_bound(f3, f3, 2, 2);
  CHECK(free_rep.eta_value.is_infinite());
  CHECK(free_rep.holds);
  CHECK_FALSE(free_rep.tight);
}

TEST_CASE("density bound against the chromatic sum") {
  const auto& blown = pair_named("blown-11");
  DeltaEtaReport rep = check_delta_eta_bound(blown.m, blown.n);
  CHECK(rep.delta == Frac(4));
  CHECK(rep.chi_m == 2);
  CHECK(rep.chi_n == 2);
  CHECK(rep.holds);
  CHECK(rep.tight);
  CHECK_FALSE(rep.list_checked);  // the list target 4 exceeds the cap of 3

  Matroid f3 = Matroid::free_matroid(3);
  DeltaEtaReport free_rep = check_delta_eta_bound(f3, f3);
  CHECK(free_rep.delta == Frac(0));
  CHECK(free_rep.holds);
  CHECK_FALSE(free_rep.tight);
  CHECK(free_rep.list_checked);
  CHECK(free_rep.chi_list_value == 1);
  CHECK(free_rep.list_holds);
}

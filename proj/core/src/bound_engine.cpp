#include "etanu/bound_engine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "etanu/errors.hpp"
#include "etanu/intersection.hpp"
#include "etanu/nu.hpp"

namespace etanu {

std::string GameMove::to_string() const {
  return kind == Kind::Vertex ? "vertex " + std::to_string(vertex) : "edge " + edge.to_string();
}

namespace {

// ---- canonical position keys ------------------------------------------------

// Iterated refinement of vertex colors by edge-incidence signatures.  The
// result depends only on the isomorphism type, so equal colors mark candidate
// symmetric vertices.
std::vector<int> refine_colors(const Hypergraph& h) {
  std::vector<int> members = h.vertices.to_vector();
  std::map<int, int> index_of;
  for (std::size_t i = 0; i < members.size(); ++i) index_of[members[i]] = static_cast<int>(i);

  std::vector<int> color(members.size(), 0);
  for (int round = 0; round < static_cast<int>(members.size()); ++round) {
    // Signature: sorted multiset of (edge size, sorted colors of co-members).
    std::vector<std::vector<std::vector<int>>> sigs(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (ElemSet e : h.edges) {
        if (!e.contains(members[i])) continue;
        std::vector<int> entry{e.size()};
        for (int w : e)
          if (w != members[i]) entry.push_back(color[static_cast<std::size_t>(index_of[w])]);
        std::sort(entry.begin() + 1, entry.end());
        sigs[i].push_back(std::move(entry));
      }
      std::sort(sigs[i].begin(), sigs[i].end());
    }
    std::vector<std::pair<std::pair<int, std::vector<std::vector<int>>>, std::size_t>> keyed;
    for (std::size_t i = 0; i < members.size(); ++i)
      keyed.push_back({{color[i], sigs[i]}, i});
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(members.size());
    int classes = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++classes;
      next[keyed[i].second] = classes;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

std::string encode_edges(int n, const std::vector<std::uint64_t>& masks) {
  std::string out = "n" + std::to_string(n) + ":";
  for (std::uint64_t m : masks) out += std::to_string(m) + ";";
  return out;
}

constexpr std::uint64_t kPermutationCap = 40320;  // 8!

// Canonical key: the minimal edge encoding over all relabelings respecting
// the refinement classes.  When the class structure leaves too many
// permutations, falls back to the labeled encoding, which is still a sound
// memo key (identical positions collide; isomorphic ones may not).
std::string position_key(const Hypergraph& h) {
  std::vector<int> members = h.vertices.to_vector();
  std::size_t n = members.size();
  if (n == 0) return encode_edges(0, {});

  std::vector<int> color = refine_colors(h);
  std::vector<std::vector<int>> classes;
  {
    int max_color = 0;
    for (int c : color) max_color = std::max(max_color, c);
    classes.resize(static_cast<std::size_t>(max_color + 1));
    for (std::size_t i = 0; i < n; ++i)
      classes[static_cast<std::size_t>(color[i])].push_back(members[i]);
  }

  std::uint64_t perms = 1;
  for (auto& cls : classes) {
    for (std::size_t s = 2; s <= cls.size(); ++s) {
      perms *= s;
      if (perms > kPermutationCap) break;
    }
    if (perms > kPermutationCap) break;
  }
  if (perms > kPermutationCap) {
    std::vector<std::uint64_t> masks;
    for (ElemSet e : h.edges) masks.push_back(e.bits());
    std::sort(masks.begin(), masks.end());
    return "L:" + std::to_string(h.vertices.bits()) + "|" +
           encode_edges(static_cast<int>(n), masks);
  }

  // Enumerate products of within-class permutations; classes get consecutive
  // canonical labels in class order.
  std::string best;
  auto try_assignment = [&]() {
    int next = 0;
    std::vector<int> label(ElemSet::kMaxElements, -1);
    for (auto& cls : classes)
      for (int v : cls) label[static_cast<std::size_t>(v)] = next++;
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edges.size());
    for (ElemSet e : h.edges) {
      std::uint64_t m = 0;
      for (int v : e) m |= std::uint64_t{1} << label[static_cast<std::size_t>(v)];
      masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    std::string enc = encode_edges(static_cast<int>(n), masks);
    if (best.empty() || enc < best) best = enc;
  };

  auto walk = [&](auto&& self, std::size_t cls_index) -> void {
    if (cls_index == classes.size()) {
      try_assignment();
      return;
    }
    auto& cls = classes[cls_index];
    std::sort(cls.begin(), cls.end());
    do {
      self(self, cls_index + 1);
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  walk(walk, 0);
  return "C:" + best;
}

// ---- game recursion ---------------------------------------------------------

struct GameSolver {
  const Limits& limits;
  std::unordered_map<std::string, EtaValue> memo;
  std::mutex mu;

  bool is_minimal(const Hypergraph& h, ElemSet e) const {
    for (ElemSet other : h.edges)
      if (other != e && other.subset_of(e)) return false;
    return true;
  }

  std::optional<EtaValue> base_value(const Hypergraph& h) const {
    for (ElemSet e : h.edges)
      if (e.empty()) return EtaValue(0);
    if (h.edges.empty())
      return h.vertices.empty() ? EtaValue(0) : EtaValue::infinity();
    return std::nullopt;
  }

  std::vector<GameMove> moves(const Hypergraph& h) const {
    std::vector<GameMove> out;
    for (int v : h.vertices) {
      bool single_edge = std::find(h.edges.begin(), h.edges.end(), ElemSet::single(v)) !=
                         h.edges.end();
      if (!single_edge) out.push_back(GameMove{GameMove::Kind::Vertex, v, ElemSet{}});
    }
    for (ElemSet e : h.edges)
      if (is_minimal(h, e)) out.push_back(GameMove{GameMove::Kind::Edge, -1, e});
    return out;
  }

  std::pair<Hypergraph, Hypergraph> branches(const Hypergraph& h, const GameMove& mv) const {
    if (mv.kind == GameMove::Kind::Vertex)
      return {delete_vertices(h, ElemSet::single(mv.vertex)),
              contract(h, ElemSet::single(mv.vertex))};
    return {delete_edge(h, mv.edge), contract(h, mv.edge)};
  }

  EtaValue solve(const Hypergraph& h) {
    if (auto base = base_value(h)) return *base;
    std::string key = position_key(h);
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }

    EtaValue best(0);
    for (const GameMove& mv : moves(h)) {
      auto [del, con] = branches(h, mv);
      EtaValue d = solve(del);
      // min(d, c + bonus) cannot beat `best` once d is no better.
      if (d <= best) continue;
      EtaValue candidate = min(d, solve(con) + mv.bonus());
      best = max(best, candidate);
      if (best.is_infinite()) break;
    }

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, best);
    return best;
  }

  std::unique_ptr<DerivationNode> trace(const Hypergraph& h) {
    auto node = std::make_unique<DerivationNode>();
    node->position = h.to_string();
    node->value = solve(h);
    if (base_value(h)) return node;
    for (const GameMove& mv : moves(h)) {
      auto [del, con] = branches(h, mv);
      EtaValue candidate = min(solve(del), solve(con) + mv.bonus());
      if (candidate == node->value) {
        node->move = mv;
        node->delete_branch = trace(del);
        node->contract_branch = trace(con);
        break;
      }
    }
    return node;
  }
};

}  // namespace

GameResult game_value(const Hypergraph& h, bool want_trace, const Limits& limits) {
  if (h.vertices.size() > limits.max_game_vertices)
    throw ResourceError("game over " + std::to_string(h.vertices.size()) +
                        " vertices exceeds the cap of " + std::to_string(limits.max_game_vertices));
  GameSolver solver{limits};
  GameResult result;
  result.value = solver.solve(h);
  if (want_trace) result.trace = solver.trace(h);
  return result;
}

// ---- branch selection on matroid intersections ------------------------------

namespace {

std::vector<ElemSet> qualifying_circuits(const std::vector<const Matroid*>& matroids, int v) {
  std::vector<ElemSet> out;
  for (ElemSet c : matroids[0]->circuits()) {
    if (!c.contains(v)) continue;
    bool independent_elsewhere = true;
    for (std::size_t i = 1; i < matroids.size(); ++i)
      if (!matroids[i]->independent(c)) {
        independent_elsewhere = false;
        break;
      }
    if (independent_elsewhere) out.push_back(c);
  }
  return out;  // circuits() is lex-sorted already
}

void validate_family(const std::vector<const Matroid*>& matroids, int v) {
  if (matroids.empty()) throw DomainError("need at least one matroid");
  for (const Matroid* m : matroids)
    if (m->ground() != matroids[0]->ground())
      throw DomainError("matroids on different ground sets");
  if (!matroids[0]->ground().contains(v)) throw DomainError("element outside the ground set");
  if (!matroids[0]->independent(ElemSet::single(v)))
    throw DomainError("element is a loop of the first matroid");
}

}  // namespace

std::string BranchOutcome::to_string() const {
  std::string out = "lhs=" + lhs.to_string();
  if (kind == Kind::Coloop) return out + " coloop branch value=" + branch_value.to_string();
  return out + " contract " + circuit.to_string() + " value=" + branch_value.to_string() +
         "+" + std::to_string(bonus);
}

BranchOutcome coloop_or_contract(const std::vector<const Matroid*>& matroids, int v,
                                 CoefficientField field, const Limits& limits) {
  validate_family(matroids, v);
  EtaValue lhs = eta(common_independence_complex(matroids, limits), field, limits);

  Matroid simmed = sim_element(*matroids[0], v);
  std::vector<const Matroid*> sim_family{&simmed};
  for (std::size_t i = 1; i < matroids.size(); ++i) sim_family.push_back(matroids[i]);
  EtaValue sim_value = eta(common_independence_complex(sim_family, limits), field, limits);
  if (lhs >= sim_value)
    return BranchOutcome{BranchOutcome::Kind::Coloop, lhs, sim_value, 0, ElemSet{}};

  for (ElemSet c : qualifying_circuits(matroids, v)) {
    std::vector<Matroid> contracted;
    contracted.reserve(matroids.size());
    for (const Matroid* m : matroids) contracted.push_back(minor_contract(*m, c));
    std::vector<const Matroid*> family;
    for (const Matroid& m : contracted) family.push_back(&m);
    EtaValue value = eta(common_independence_complex(family, limits), field, limits);
    int bonus = c.size() - 1;
    if (value + bonus <= lhs)
      return BranchOutcome{BranchOutcome::Kind::Contract, lhs, value, bonus, c};
  }
  throw TheoremViolationError("no branch bounds eta at element " + std::to_string(v));
}

bool ClaimReport::all_hold() const {
  if (!eq1) return false;
  for (bool b : eq2)
    if (!b) return false;
  for (bool b : eq3)
    if (!b) return false;
  for (bool b : eq4)
    if (!b) return false;
  return true;
}

std::string ClaimReport::to_string() const {
  auto row = [](const std::vector<bool>& v) {
    std::string out;
    for (bool b : v) out += b ? '+' : '!';
    return out.empty() ? std::string("-") : out;
  };
  return "t=" + std::to_string(t) + " eq1=" + (eq1 ? "+" : "!") + " eq2=" + row(eq2) +
         " eq3=" + row(eq3) + " eq4=" + row(eq4);
}

ClaimReport check_claim_equalities(const std::vector<const Matroid*>& matroids, int v,
                                   const Limits& limits) {
  validate_family(matroids, v);
  ElemSet ground = matroids[0]->ground();

  std::vector<ElemSet> union_edges;
  for (const Matroid* m : matroids) {
    auto& cs = m->circuits();
    union_edges.insert(union_edges.end(), cs.begin(), cs.end());
  }
  Hypergraph h = make_hypergraph(ground, union_edges);
  std::vector<ElemSet> cands = qualifying_circuits(matroids, v);

  ClaimReport report;
  report.t = static_cast<int>(cands.size());

  // (1) dropping every qualifying circuit leaves the complex of the
  // v-coloop branch.
  Hypergraph stripped = h;
  for (ElemSet c : cands) stripped = delete_edge(stripped, c);
  Matroid simmed = sim_element(*matroids[0], v);
  std::vector<const Matroid*> sim_family{&simmed};
  for (std::size_t i = 1; i < matroids.size(); ++i) sim_family.push_back(matroids[i]);
  report.eq1 = independence_complex(stripped, limits) ==
               common_independence_complex(sim_family, limits);

  Hypergraph prefix_stripped = h;
  for (std::size_t j = 0; j < cands.size(); ++j) {
    ElemSet c = cands[j];
    // (2) deleting the earlier candidates commutes with contracting this one.
    SimplicialComplex lhs2 = independence_complex(contract(prefix_stripped, c), limits);
    SimplicialComplex rhs2 = independence_complex(contract(h, c), limits);
    report.eq2.push_back(lhs2 == rhs2);

    // (3) contracting the union hypergraph matches the contracted matroids.
    std::vector<Matroid> contracted;
    contracted.reserve(matroids.size());
    for (const Matroid* m : matroids) contracted.push_back(minor_contract(*m, c));
    std::vector<const Matroid*> family;
    for (const Matroid& m : contracted) family.push_back(&m);
    report.eq3.push_back(rhs2 == common_independence_complex(family, limits));

    // (4) contraction commutes with the union of the circuit hypergraphs,
    // literally as hypergraphs and hence on independence complexes.
    std::vector<ElemSet> union_contracted;
    for (const Matroid* m : matroids) {
      Hypergraph hi = contract(make_hypergraph(ground, m->circuits()), c);
      union_contracted.insert(union_contracted.end(), hi.edges.begin(), hi.edges.end());
    }
    Hypergraph rhs4 = make_hypergraph(ground - c, union_contracted);
    Hypergraph lhs4 = contract(h, c);
    report.eq4.push_back(lhs4 == rhs4 &&
                         independence_complex(lhs4, limits) == independence_complex(rhs4, limits));

    prefix_stripped = delete_edge(prefix_stripped, c);
  }
  return report;
}

std::string EtaNuReport::to_string() const {
  return "eta=" + eta_value.to_string() + " nu_" + std::to_string(p) + std::to_string(q) + "=" +
         std::to_string(nu) + (holds ? " holds" : " VIOLATED") + (tight ? " tight" : "");
}

EtaNuReport check_eta_nu_bound(const Matroid& m, const Matroid& n, int p, int q,
                               CoefficientField field, const Limits& limits) {
  EtaNuReport r;
  r.p = p;
  r.q = q;
  r.eta_value = eta(common_independence_complex(m, n, limits), field, limits);
  r.nu = nu_pq(m, n, p, q, limits).value;
  Frac bound(r.nu, p + q);
  r.holds = r.eta_value.at_least(bound);
  r.tight = !r.eta_value.is_infinite() && Frac(r.eta_value.finite()) == bound;
  return r;
}

std::string DeltaEtaReport::to_string() const {
  std::string out = "delta=" + delta.pretty() + " chi(m)=" + std::to_string(chi_m) +
                    " chi(n)=" + std::to_string(chi_n) + (holds ? " holds" : " VIOLATED") +
                    (tight ? " tight" : "");
  if (list_checked)
    out += " chi_list=" + (chi_list_value ? std::to_string(*chi_list_value) : ">ceil") +
           (list_holds ? " holds" : " VIOLATED");
  return out;
}

DeltaEtaReport check_delta_eta_bound(const Matroid& m, const Matroid& n, CoefficientField field,
                                     const Limits& limits) {
  if (m.ground() != n.ground()) throw DomainError("matroids on different ground sets");
  DeltaEtaReport r;
  SimplicialComplex inter = common_independence_complex(m, n, limits);
  r.delta = delta_eta(inter, field, limits).value;
  r.chi_m = chi_matroid(m, limits);
  r.chi_n = chi_matroid(n, limits);
  r.holds = r.delta <= Frac(r.chi_m + r.chi_n);
  r.tight = r.delta == Frac(r.chi_m + r.chi_n);

  // delta = 0 forces the intersection to be a full simplex (any minimal
  // non-face would give a finite restriction), where one color suffices; so
  // the list target is max(1, ceil(delta)).
  std::int64_t target = std::max<std::int64_t>(r.delta.ceil(), 1);
  if (!inter.ground().empty() && inter.ground().size() <= limits.max_chi_list_ground &&
      target <= limits.max_chi_list_k) {
    r.list_checked = true;
    ChiListResult lr = chi_list(inter, static_cast<int>(target), limits);
    r.chi_list_value = lr.value;
    r.list_holds = lr.value.has_value();
  }
  return r;
}

}  // namespace etanu

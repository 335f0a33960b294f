#include "etanu/suites.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>

#include "etanu/bound_engine.hpp"
#include "etanu/coloring.hpp"
#include "etanu/corpus.hpp"
#include "etanu/errors.hpp"
#include "etanu/intersection.hpp"
#include "etanu/nu.hpp"

namespace etanu {

namespace {

// ---- payload helpers ---------------------------------------------------------

Json matroid_as_circuits(const Matroid& m) { return matroid_to_circuits_json(m); }

CoefficientField payload_field(const Json& payload) {
  if (payload.contains("field")) return CoefficientField::parse(payload["field"].get<std::string>());
  return CoefficientField::rationals();
}

std::vector<Matroid> payload_matroids(const Json& payload) {
  std::vector<Matroid> out;
  for (const Json& j : payload.at("matroids")) out.push_back(matroid_from_json(j));
  return out;
}

CaseResult pass(Json values = Json::object(), bool tight = false) {
  CaseResult r;
  r.ok = true;
  r.tight = tight;
  r.values = std::move(values);
  return r;
}

CaseResult fail(std::string message, Json values = Json::object()) {
  CaseResult r;
  r.ok = false;
  r.message = std::move(message);
  r.values = std::move(values);
  return r;
}

// ---- case runners ------------------------------------------------------------

CaseResult run_duality(const Json& payload, const SuiteConfig& config) {
  SimplicialComplex c = complex_from_json(payload.at("complex"));
  if (!duality_roundtrip(c, config.limits))
    return fail("complex is not recovered from its minimal non-faces");
  return pass();
}

CaseResult run_operators_hypergraph(const Json& payload, const SuiteConfig& config) {
  Hypergraph h = hypergraph_from_json(payload.at("hypergraph"));
  ElemSet x = elemset_from_json(payload.at("x"), h.vertices);
  const Limits& limits = config.limits;

  SimplicialComplex whole = independence_complex(h, limits);

  // Membership against the raw edge list.
  bool semantic_ok = true;
  for_each_subset(h.vertices, [&](ElemSet s) {
    bool has_edge = false;
    for (ElemSet e : h.edges)
      if (e.subset_of(s)) has_edge = true;
    if (whole.is_void() ? true : whole.contains(s) == !has_edge) return;
    semantic_ok = false;
  });
  if (whole.is_void()) {
    bool empty_edge = false;
    for (ElemSet e : h.edges) empty_edge = empty_edge || e.empty();
    if (!empty_edge) semantic_ok = false;
  }
  if (!semantic_ok) return fail("independence complex disagrees with the edge list");

  if (!x.empty() && independence_complex(restrict(h, x), limits) !=
                        restrict_complex(whole, x))
    return fail("restriction does not commute with the independence complex");

  ElemSet rest = h.vertices - x;
  if (!rest.empty() && independence_complex(delete_vertices(h, x), limits) !=
                           restrict_complex(whole, rest))
    return fail("vertex deletion does not match restriction to the complement");

  Hypergraph simmed = sim(h, x);
  if (simmed.vertices != h.vertices) return fail("edge-dropping changed the vertex set");
  for (ElemSet e : simmed.edges)
    if (e.intersects(x)) return fail("edge meeting the dropped set survived");
  std::size_t expected = 0;
  for (ElemSet e : h.edges)
    if (!e.intersects(x)) ++expected;
  if (simmed.edges.size() != expected) return fail("edge-dropping lost or invented edges");

  // Contraction, checked semantically: a set is independent in h/x exactly
  // when every edge inside s | x already lies inside x.
  Hypergraph contracted = contract(h, x);
  SimplicialComplex after = independence_complex(contracted, limits);
  bool contract_ok = true;
  for_each_subset(rest, [&](ElemSet s) {
    bool dependent = false;
    for (ElemSet e : h.edges)
      if (e.subset_of(s | x) && !e.subset_of(x)) dependent = true;
    bool face = after.is_void() ? false : after.contains(s);
    if (face == !dependent) return;
    contract_ok = false;
  });
  if (!contract_ok) return fail("contraction disagrees with its defining property");

  if (!h.edges.empty()) {
    Hypergraph smaller = delete_edge(h, h.edges.front());
    if (smaller.edges.size() + 1 != h.edges.size() || smaller.vertices != h.vertices)
      return fail("single-edge deletion went wrong");
  }
  bool threw = false;
  try {
    delete_edge(h, h.vertices.empty() ? ElemSet::single(63) : h.vertices);
  } catch (const NotFoundError&) {
    threw = true;
  } catch (const DomainError&) {
    threw = true;
  }
  if (!threw && std::find(h.edges.begin(), h.edges.end(), h.vertices) == h.edges.end())
    return fail("deleting a missing edge did not raise");
  return pass();
}

CaseResult run_operators_minor(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("matroid"));
  ElemSet x = elemset_from_json(payload.at("x"), m.ground());
  Hypergraph circuits_h = make_hypergraph(m.ground(), m.circuits());

  // Restriction keeps exactly the circuits inside x.
  Matroid restricted = minor_restrict(m, x);
  if (restricted.circuits() != restrict(circuits_h, x).edges)
    return fail("restriction circuits differ from the restricted circuit hypergraph");

  // Contraction: circuits are the minimal edges of the contracted hypergraph.
  Matroid contracted_m = minor_contract(m, x);
  Hypergraph contracted_h = contract(circuits_h, x);
  std::vector<ElemSet> minimal;
  for (ElemSet e : contracted_h.edges) {
    bool dominated = false;
    for (ElemSet other : contracted_h.edges)
      if (other != e && other.subset_of(e)) dominated = true;
    if (!dominated) minimal.push_back(e);
  }
  if (contracted_m.circuits() != minimal)
    return fail("contraction circuits differ from the minimal contracted edges");
  return pass();
}

CaseResult run_axioms(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("matroid"));
  ElemSet g = m.ground();

  if (auto violation = check_circuit_axioms(make_hypergraph(g, m.circuits())))
    return fail("circuit family violates the axioms: " + violation->to_string());
  if (auto ce = verify_matroid_axioms(m.complex()))
    return fail("independence complex violates augmentation: " + ce->to_string());

  int r = m.rank();
  for (ElemSet b : m.bases())
    if (b.size() != r) return fail("base of the wrong size: " + b.to_string());
  for (ElemSet c : m.circuits()) {
    if (m.independent(c)) return fail("circuit is independent: " + c.to_string());
    for (int v : c)
      if (!m.independent(c.without(v)))
        return fail("circuit is not minimal dependent: " + c.to_string());
  }

  if (g.size() <= 7) {
    bool mono = true, sub = true;
    for_each_subset(g, [&](ElemSet s) {
      int rs = m.rank(s);
      for (int a : g - s) {
        int rsa = m.rank(s.with(a));
        if (rsa < rs || rsa > rs + 1) mono = false;
        for (int b : g - s) {
          if (b <= a) continue;
          // Local submodularity: r(s+a) + r(s+b) >= r(s+a+b) + r(s).
          if (m.rank(s.with(a)) + m.rank(s.with(b)) < m.rank(s.with(a).with(b)) + rs)
            sub = false;
        }
      }
    });
    if (!mono) return fail("rank is not monotone by unit steps");
    if (!sub) return fail("rank is not submodular");
  }
  (void)config;
  return pass();
}

CaseResult run_homology_frozen(const Json& payload, const SuiteConfig& config) {
  SimplicialComplex c = complex_from_json(payload.at("complex"));
  EtaValue expect_q = eta_from_json(payload.at("expect_q"));
  EtaValue expect_gf2 = eta_from_json(payload.at("expect_gf2"));
  EtaValue got_q = eta(c, CoefficientField::rationals(), config.limits);
  EtaValue got_gf2 = eta(c, CoefficientField::gf(2), config.limits);
  Json values{{"eta_q", eta_to_json(got_q)}, {"eta_gf2", eta_to_json(got_gf2)}};
  if (got_q != expect_q)
    return fail("rational connectivity is " + got_q.to_string() + ", expected " +
                    expect_q.to_string(),
                values);
  if (got_gf2 != expect_gf2)
    return fail("mod-2 connectivity is " + got_gf2.to_string() + ", expected " +
                    expect_gf2.to_string(),
                values);
  return pass(values);
}

CaseResult run_homology_structure(const Json& payload, const SuiteConfig& config) {
  SimplicialComplex c = complex_from_json(payload.at("complex"));
  CoefficientField field = payload_field(payload);
  bool check_cross_field = payload.value("cross_field", false);
  const Limits& limits = config.limits;

  // Boundary-of-boundary vanishes, degree by degree.
  for (int k = 0; k <= c.dim(); ++k) {
    BoundaryMatrix lower = boundary_matrix(c, k, field, limits);
    BoundaryMatrix upper = boundary_matrix(c, k + 1, field, limits);
    for (int r = 0; r < lower.rows; ++r)
      for (int col = 0; col < upper.cols; ++col) {
        std::int64_t sum = 0;
        for (int mid = 0; mid < lower.cols; ++mid) sum += lower.at(r, mid) * upper.at(mid, col);
        if (field.is_rationals() ? sum != 0 : sum % field.prime() != 0)
          return fail("boundary composed with boundary is non-zero in degree " +
                      std::to_string(k + 1));
      }
  }

  // Reduced Euler characteristic from faces equals the Betti alternating sum.
  BettiProfile profile = reduced_betti(c, field, limits);
  std::int64_t from_faces = 0;
  if (!c.is_void())
    for (ElemSet f : c.all_faces(limits)) from_faces += (f.size() % 2 == 0) ? -1 : 1;
  std::int64_t from_betti = 0;
  for (std::size_t i = 0; i < profile.numbers.size(); ++i)
    from_betti += (i % 2 == 0 ? -1 : 1) * profile.numbers[i];
  if (from_faces != from_betti)
    return fail("Euler characteristic mismatch: faces give " + std::to_string(from_faces) +
                ", homology gives " + std::to_string(from_betti));

  if (check_cross_field) {
    EtaValue q = eta(c, CoefficientField::rationals(), limits);
    EtaValue gf2 = eta(c, CoefficientField::gf(2), limits);
    if (q != gf2)
      return fail("connectivity differs between fields: " + q.to_string() + " vs " +
                  gf2.to_string());
  }
  return pass(Json{{"betti", profile.to_string()}});
}

CaseResult run_join(const Json& payload, const SuiteConfig& config) {
  SimplicialComplex c = complex_from_json(payload.at("c"));
  SimplicialComplex d = complex_from_json(payload.at("d"));
  auto report = check_join_superadditivity(c, d, payload_field(payload), config.limits);
  Json values{{"eta_c", eta_to_json(report.eta_c)},
              {"eta_d", eta_to_json(report.eta_d)},
              {"eta_join", eta_to_json(report.eta_join)}};
  if (!report.holds) return fail("join superadditivity violated: " + report.to_string(), values);
  return pass(values, report.tight);
}

CaseResult run_mayer_vietoris(const Json& payload, const SuiteConfig& config) {
  SimplicialComplex a = complex_from_json(payload.at("a"));
  SimplicialComplex b = complex_from_json(payload.at("b"));
  auto report = check_mayer_vietoris(a, b, payload_field(payload), config.limits);
  Json values{{"eta_a", eta_to_json(report.eta_a)},
              {"eta_b", eta_to_json(report.eta_b)},
              {"eta_union", eta_to_json(report.eta_union)},
              {"eta_intersection", eta_to_json(report.eta_intersection)}};
  if (!report.all_hold()) return fail("inequality violated: " + report.to_string(), values);
  return pass(values, report.tight1 || report.tight2 || report.tight3);
}

CaseResult run_game(const Json& payload, const SuiteConfig& config) {
  Hypergraph h = hypergraph_from_json(payload.at("hypergraph"));
  GameResult game = game_value(h, false, config.limits);
  EtaValue bound = eta(independence_complex(h, config.limits),
                       CoefficientField::rationals(), config.limits);
  Json values{{"game", eta_to_json(game.value)}, {"eta", eta_to_json(bound)}};
  if (!(game.value <= bound))
    return fail("game value exceeds the connectivity it bounds", values);
  if (payload.contains("perm")) {
    std::vector<int> perm;
    for (const Json& v : payload.at("perm")) perm.push_back(v.get<int>());
    EtaValue relabeled = game_value(relabel(h, perm), false, config.limits).value;
    if (relabeled != game.value)
      return fail("game value changed under relabeling", values);
  }
  return pass(values, game.value == bound);
}

CaseResult run_coloop(const Json& payload, const SuiteConfig& config) {
  std::vector<Matroid> ms = payload_matroids(payload);
  std::vector<const Matroid*> family;
  for (const Matroid& m : ms) family.push_back(&m);
  int v = payload.at("v").get<int>();
  BranchOutcome outcome = coloop_or_contract(family, v, payload_field(payload), config.limits);
  return pass(Json{{"branch", outcome.to_string()}});
}

CaseResult run_claim(const Json& payload, const SuiteConfig& config) {
  std::vector<Matroid> ms = payload_matroids(payload);
  std::vector<const Matroid*> family;
  for (const Matroid& m : ms) family.push_back(&m);
  int v = payload.at("v").get<int>();
  ClaimReport report = check_claim_equalities(family, v, config.limits);
  if (!report.all_hold()) return fail("equality failed: " + report.to_string());
  return pass(Json{{"claim", report.to_string()}});
}

CaseResult run_nu_eleven(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  NuResult by_tuples = nu_pq(m, n, 1, 1, config.limits);
  int by_augmentation = nu11(m, n);
  Json values{{"nu_tuples", by_tuples.value}, {"nu_augmentation", by_augmentation}};
  if (by_tuples.value != by_augmentation)
    return fail("nu_11 disagrees with the augmenting-path maximum", values);
  return pass(values);
}

CaseResult run_nu_qbound(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  int p = payload.at("p").get<int>(), q = payload.at("q").get<int>();
  int nu = nu_pq(m, n, p, q, config.limits).value;
  int nu_one = nu11(m, n);
  Json values{{"nu_pq", nu}, {"nu_11", nu_one}, {"p", p}, {"q", q}};
  if (nu > q * nu_one) return fail("nu_pq exceeds q times nu_11", values);
  return pass(values, nu == q * nu_one);
}

std::optional<std::string> witness_problem(const Matroid& m, const Matroid& n, int p, int q,
                                           const NuResult& w, bool equalized) {
  if (static_cast<int>(w.a.size()) != p || static_cast<int>(w.b.size()) != q)
    return "witness tuple sizes are wrong";
  for (ElemSet s : w.a)
    if (!m.independent(s)) return "left witness set is dependent: " + s.to_string();
  for (ElemSet s : w.b)
    if (!n.independent(s)) return "right witness set is dependent: " + s.to_string();
  int total = 0;
  for (int v : m.ground()) {
    int ca = multiplicity(v, w.a), cb = multiplicity(v, w.b);
    total += std::min(ca, cb);
    if (equalized && ca != cb)
      return "multiplicities differ at element " + std::to_string(v);
  }
  if (total != w.value) return "objective does not match the witness";
  if (equalized) {
    int size_a = 0, size_b = 0;
    for (ElemSet s : w.a) size_a += s.size();
    for (ElemSet s : w.b) size_b += s.size();
    if (size_a != w.value || size_b != w.value) return "equalized witness totals are off";
  }
  return std::nullopt;
}

CaseResult run_nu_equalized(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  int p = payload.at("p").get<int>(), q = payload.at("q").get<int>();
  NuResult optimal = nu_pq(m, n, p, q, config.limits);
  NuResult trimmed = equalized_witness(m, n, p, q, config.limits);
  Json values{{"nu", optimal.value}};
  if (trimmed.value != optimal.value)
    return fail("equalizing changed the objective", values);
  if (auto problem = witness_problem(m, n, p, q, trimmed, true))
    return fail(*problem, values);
  return pass(values);
}

CaseResult run_nu_monotone(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  Matroid m2 = matroid_from_json(payload.at("m_large"));
  Matroid n2 = matroid_from_json(payload.at("n_large"));
  auto report = check_monotone(m, n, m2, n2, payload.at("p").get<int>(),
                               payload.at("q").get<int>(), payload.at("p_large").get<int>(),
                               payload.at("q_large").get<int>(), config.limits);
  Json values{{"nu_small", report.nu_small}, {"nu_large", report.nu_large}};
  if (!report.holds) return fail("monotonicity violated", values);
  return pass(values, report.nu_small == report.nu_large);
}

CaseResult run_nuqq(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  int q = payload.at("q").get<int>();
  NuqqReport report = check_nuqq_bound(m, n, q, config.limits);
  Json values{{"nu_11", report.nu_11}, {"nu_qq", report.nu_qq}, {"q", q}};
  if (!report.holds) return fail("rounding bound violated: " + report.to_string(), values);
  return pass(values, report.tight);
}

CaseResult run_dangling(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  int p = payload.at("p").get<int>(), q = payload.at("q").get<int>();
  if (nu11(m, n) == 0) return pass(Json{{"skipped", "no common independent element"}});
  DanglingWitness w = dangling_witness(m, n, p, q, config.limits);
  Json values{{"z", w.z}, {"nu", w.nu}};
  if (static_cast<int>(w.x.size()) != p || static_cast<int>(w.y.size()) != q)
    return fail("witness tuple sizes are wrong", values);
  for (ElemSet s : w.x) {
    if (!m.independent(s)) return fail("left witness set is dependent", values);
    if (!s.contains(w.z)) return fail("left witness set misses the anchor", values);
  }
  int total = 0;
  for (ElemSet s : w.y) {
    if (!n.independent(s)) return fail("right witness set is dependent", values);
    total += s.size();
  }
  if (total != nu_pq(m, n, p, q, config.limits).value)
    return fail("right side total is not the optimum", values);
  for (int v : m.ground()) {
    if (v == w.z) continue;
    if (multiplicity(v, w.x) != multiplicity(v, w.y))
      return fail("multiplicities differ away from the anchor at " + std::to_string(v), values);
  }
  if (multiplicity(w.z, w.x) != p) return fail("anchor multiplicity is not p", values);
  return pass(values);
}

CaseResult run_eta_nu(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  int p = payload.at("p").get<int>(), q = payload.at("q").get<int>();
  EtaNuReport report = check_eta_nu_bound(m, n, p, q, payload_field(payload), config.limits);
  Json values{{"eta", eta_to_json(report.eta_value)}, {"nu", report.nu},
              {"p", p}, {"q", q}};
  if (!report.holds) return fail("lower bound violated: " + report.to_string(), values);
  return pass(values, report.tight);
}

CaseResult run_chi_sum(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  ChiSumReport report = check_chi_sum(m, n, config.limits);
  Json values{{"chi_m", report.chi_m},
              {"chi_n", report.chi_n},
              {"chi_intersection", report.chi_intersection},
              {"list_checked", report.list_checked}};
  if (report.chi_list_value) values["chi_list"] = *report.chi_list_value;
  if (!report.holds) return fail("cover bound violated: " + report.to_string(), values);
  if (report.list_checked && !report.list_holds)
    return fail("list version violated: " + report.to_string(), values);
  return pass(values, report.chi_intersection == report.bound);
}

CaseResult run_delta_eta(const Json& payload, const SuiteConfig& config) {
  Matroid m = matroid_from_json(payload.at("m"));
  Matroid n = matroid_from_json(payload.at("n"));
  DeltaEtaReport report = check_delta_eta_bound(m, n, payload_field(payload), config.limits);
  Json values{{"delta", frac_to_json(report.delta)},
              {"chi_m", report.chi_m},
              {"chi_n", report.chi_n},
              {"list_checked", report.list_checked}};
  if (report.chi_list_value) values["chi_list"] = *report.chi_list_value;
  if (!report.holds) return fail("ratio bound violated: " + report.to_string(), values);
  if (report.list_checked && !report.list_holds)
    return fail("list-coloring bound violated: " + report.to_string(), values);
  return pass(values, report.tight);
}

CaseResult run_tightness(const Json& payload, const SuiteConfig& config) {
  int p = payload.at("p").get<int>(), q = payload.at("q").get<int>();
  TightnessInstance inst = tightness_example(p, q);
  const Limits& limits = config.limits;

  int chi_m = chi_matroid(inst.m, limits), chi_n = chi_matroid(inst.n, limits);
  Json values{{"p", p}, {"q", q}, {"chi_m", chi_m}, {"chi_n", chi_n}};
  if (chi_m != p + q || chi_n != p + q)
    return fail("cover numbers are not p + q", values);

  SimplicialComplex inter = common_independence_complex(inst.m, inst.n, limits);

  // Independent matching oracle straight from the multigraph.
  std::vector<ElemSet> matchings;
  std::size_t edge_count = inst.graph.edges.size();
  for_each_subset(ElemSet::universe(static_cast<int>(edge_count)), [&](ElemSet s) {
    ElemSet seen;
    bool ok = true;
    for (int i : s) {
      auto [u, v] = inst.graph.edges[static_cast<std::size_t>(i)];
      if (seen.contains(u) || seen.contains(v)) ok = false;
      seen = seen.with(u).with(v);
    }
    if (ok) matchings.push_back(s);
  });
  if (inter != SimplicialComplex::from_faces(inter.ground(), matchings))
    return fail("intersection complex is not the matching complex", values);

  EtaValue connectivity = eta(inter, CoefficientField::rationals(), limits);
  values["eta"] = eta_to_json(connectivity);
  if (connectivity != EtaValue(1)) return fail("connectivity is not 1", values);

  Frac delta = delta_eta(inter, CoefficientField::rationals(), limits).value;
  values["delta"] = frac_to_json(delta);
  if (delta != Frac(2 * (p + q)))
    return fail("ratio maximum is not twice p + q", values);
  return pass(values, true);
}

// ---- case tables ---------------------------------------------------------------

struct Case {
  std::string id;
  std::string kind;
  Json payload;
};

CaseResult dispatch(const std::string& kind, const Json& payload, const SuiteConfig& config) {
  if (kind == "duality") return run_duality(payload, config);
  if (kind == "operators-hypergraph") return run_operators_hypergraph(payload, config);
  if (kind == "operators-minor") return run_operators_minor(payload, config);
  if (kind == "axioms") return run_axioms(payload, config);
  if (kind == "homology-frozen") return run_homology_frozen(payload, config);
  if (kind == "homology-structure") return run_homology_structure(payload, config);
  if (kind == "join") return run_join(payload, config);
  if (kind == "mayer-vietoris") return run_mayer_vietoris(payload, config);
  if (kind == "game") return run_game(payload, config);
  if (kind == "coloop") return run_coloop(payload, config);
  if (kind == "claim") return run_claim(payload, config);
  if (kind == "nu-eleven") return run_nu_eleven(payload, config);
  if (kind == "nu-qbound") return run_nu_qbound(payload, config);
  if (kind == "nu-equalized") return run_nu_equalized(payload, config);
  if (kind == "nu-monotone") return run_nu_monotone(payload, config);
  if (kind == "nuqq") return run_nuqq(payload, config);
  if (kind == "dangling") return run_dangling(payload, config);
  if (kind == "eta-nu") return run_eta_nu(payload, config);
  if (kind == "chi-sum") return run_chi_sum(payload, config);
  if (kind == "delta-eta") return run_delta_eta(payload, config);
  if (kind == "tightness") return run_tightness(payload, config);
  throw DomainError("unknown case kind '" + kind + "'");
}

std::string slug(const std::string& name) {
  std::string out;
  for (char ch : name) out += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '-');
  return out;
}

void stamp_field(Json& payload, const SuiteConfig& config) {
  payload["field"] = config.field.to_string();
}

// Seeded random pair of matroids on a common ground size.
std::pair<Matroid, Matroid> random_pair(std::uint64_t seed, int n) {
  return {random_matroid(seed * 2 + 0, n), random_matroid(seed * 2 + 1, n)};
}

std::vector<Case> duality_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  const Corpus& corpus = Corpus::standard();
  for (const auto& entry : corpus.complexes) {
    if (!entry.c.covers_ground()) continue;
    cases.push_back({"corpus-" + slug(entry.name), "duality",
                     Json{{"complex", complex_to_json(entry.c)}}});
  }
  for (const auto& entry : corpus.matroids)
    cases.push_back({"matroid-" + slug(entry.name), "duality",
                     Json{{"complex", complex_to_json(entry.m.complex())}}});
  Rng rng(config.seed * 7919 + 1);
  int added = 0, attempts = 0;
  while (added < config.random_cases && attempts < config.random_cases * 50) {
    ++attempts;
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax)));
    double density = 0.35 + 0.15 * static_cast<double>(rng.below(4));
    SimplicialComplex c = random_complex(rng.next(), n, density);
    if (!c.covers_ground()) continue;
    cases.push_back({"random-" + std::to_string(added), "duality",
                     Json{{"complex", complex_to_json(c)}}});
    ++added;
  }
  return cases;
}

std::vector<Case> operators_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  const Corpus& corpus = Corpus::standard();
  Rng rng(config.seed * 7919 + 2);
  auto hyper_case = [&](const std::string& id, const Hypergraph& h, ElemSet x) {
    cases.push_back({id, "operators-hypergraph",
                     Json{{"hypergraph", hypergraph_to_json(h)}, {"x", elemset_to_json(x)}}});
  };
  for (const auto& entry : corpus.hypergraphs) {
    ElemSet verts = entry.h.vertices;
    hyper_case("corpus-" + slug(entry.name) + "-v", entry.h,
               verts.empty() ? ElemSet{} : ElemSet::single(verts.min_element()));
    if (!entry.h.edges.empty())
      hyper_case("corpus-" + slug(entry.name) + "-e", entry.h, entry.h.edges.back());
    hyper_case("corpus-" + slug(entry.name) + "-r", entry.h,
               ElemSet::from_bits(rng.next() & verts.bits()));
  }
  for (const auto& entry : corpus.matroids) {
    ElemSet g = entry.m.ground();
    Json mj = matroid_as_circuits(entry.m);
    for (int i = 0; i < 3; ++i) {
      ElemSet x = ElemSet::from_bits(rng.next() & g.bits());
      if (i == 0) x = ElemSet{};
      cases.push_back({"minor-" + slug(entry.name) + "-" + std::to_string(i), "operators-minor",
                       Json{{"matroid", mj}, {"x", elemset_to_json(x)}}});
    }
  }
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax - 1)));
    Hypergraph h = random_hypergraph(rng.next(), n, 1 + static_cast<int>(rng.below(5)), 3);
    hyper_case("random-" + std::to_string(i), h,
               ElemSet::from_bits(rng.next() & h.vertices.bits()));
  }
  return cases;
}

std::vector<Case> axioms_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (const auto& entry : Corpus::standard().matroids)
    cases.push_back({"corpus-" + slug(entry.name), "axioms",
                     Json{{"matroid", matroid_as_circuits(entry.m)}}});
  Rng rng(config.seed * 7919 + 3);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(config.nmax, 6))));
    Matroid m = random_matroid(rng.next(), n);
    cases.push_back({"random-" + std::to_string(i), "axioms",
                     Json{{"matroid", matroid_as_circuits(m)}}});
  }
  return cases;
}

std::vector<Case> homology_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  const Corpus& corpus = Corpus::standard();
  struct Frozen {
    const char* name;
    const char* q;
    const char* gf2;
  };
  const Frozen frozen[] = {
      {"void-3", "0", "0"},
      {"empty-face-3", "0", "0"},
      {"point", "inf", "inf"},
      {"two-points", "1", "1"},
      {"simplex-3", "inf", "inf"},
      {"triangle-rim", "2", "2"},
      {"two-edges", "1", "1"},
      {"path-4", "inf", "inf"},
      {"pentagon-rim", "2", "2"},
      {"octahedron-shell", "3", "3"},
      {"projective-plane-6", "inf", "2"},
  };
  auto eta_json = [](const std::string& text) -> Json {
    return text == "inf" ? Json("inf") : Json(std::stoi(text));
  };
  for (const auto& entry : corpus.complexes) {
    for (const Frozen& f : frozen)
      if (entry.name == f.name)
        cases.push_back({"frozen-" + slug(entry.name), "homology-frozen",
                         Json{{"complex", complex_to_json(entry.c)},
                              {"expect_q", eta_json(f.q)},
                              {"expect_gf2", eta_json(f.gf2)}}});
    Json payload{{"complex", complex_to_json(entry.c)},
                 {"cross_field", !entry.field_sensitive}};
    stamp_field(payload, config);
    cases.push_back({"structure-" + slug(entry.name), "homology-structure", payload});
  }
  Rng rng(config.seed * 7919 + 4);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax)));
    double density = 0.3 + 0.2 * static_cast<double>(rng.below(3));
    SimplicialComplex c = random_complex(rng.next(), n, density);
    Json payload{{"complex", complex_to_json(c)}, {"cross_field", false}};
    stamp_field(payload, config);
    cases.push_back({"random-" + std::to_string(i), "homology-structure", payload});
  }
  return cases;
}

std::vector<Case> join_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  ElemSet g2 = ElemSet::universe(2);
  SimplicialComplex two_points =
      SimplicialComplex::from_facets(g2, {ElemSet::of({0}), ElemSet::of({1})});
  auto add = [&](const std::string& id, const SimplicialComplex& c,
                 const SimplicialComplex& d) {
    Json payload{{"c", complex_to_json(c)}, {"d", complex_to_json(d)}};
    stamp_field(payload, config);
    cases.push_back({id, "join", payload});
  };
  add("two-points-squared", two_points, shift_complex(two_points, 2));
  add("cone", SimplicialComplex::full_simplex(ElemSet::universe(1)),
      shift_complex(two_points, 1));
  add("identity-element", SimplicialComplex::empty_face_only(g2), shift_complex(two_points, 2));
  Rng rng(config.seed * 7919 + 5);
  for (int i = 0; i < config.random_cases; ++i) {
    int n1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax - 1)));
    int n2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax - n1)));
    double d1 = 0.25 + 0.25 * static_cast<double>(rng.below(3));
    double d2 = 0.25 + 0.25 * static_cast<double>(rng.below(3));
    SimplicialComplex c = random_complex(rng.next(), n1, d1);
    SimplicialComplex d = shift_complex(random_complex(rng.next(), n2, d2), n1);
    add("random-" + std::to_string(i), c, d);
  }
  return cases;
}

std::vector<Case> mayer_vietoris_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  ElemSet g3 = ElemSet::universe(3);
  auto add = [&](const std::string& id, const SimplicialComplex& a,
                 const SimplicialComplex& b) {
    Json payload{{"a", complex_to_json(a)}, {"b", complex_to_json(b)}};
    stamp_field(payload, config);
    cases.push_back({id, "mayer-vietoris", payload});
  };
  add("split-triangle",
      SimplicialComplex::from_facets(g3, {ElemSet::of({0, 1}), ElemSet::of({0, 2})}),
      SimplicialComplex::from_facets(g3, {ElemSet::of({1, 2})}));
  add("void-part", SimplicialComplex::void_complex(g3), SimplicialComplex::full_simplex(g3));
  Rng rng(config.seed * 7919 + 6);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax)));
    double d1 = 0.25 + 0.25 * static_cast<double>(rng.below(3));
    double d2 = 0.25 + 0.25 * static_cast<double>(rng.below(3));
    add("random-" + std::to_string(i), random_complex(rng.next(), n, d1),
        random_complex(rng.next(), n, d2));
  }
  return cases;
}

std::vector<Case> game_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (const auto& entry : Corpus::standard().hypergraphs)
    cases.push_back({"corpus-" + slug(entry.name), "game",
                     Json{{"hypergraph", hypergraph_to_json(entry.h)}}});
  Rng rng(config.seed * 7919 + 7);
  int top = std::min(config.nmax + 1, 8);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(top - 1)));
    int edges = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 3));
    Hypergraph h = random_hypergraph(rng.next(), n, edges, 3);
    Json payload{{"hypergraph", hypergraph_to_json(h)}};
    if (i % 3 == 0) {
      Json perm = Json::array();
      for (int v : random_permutation(rng, n)) perm.push_back(v);
      payload["perm"] = perm;
    }
    cases.push_back({"random-" + std::to_string(i), "game", payload});
  }
  return cases;
}

void branch_cases(const SuiteConfig& config, const std::string& kind, std::vector<Case>& cases) {
  const Corpus& corpus = Corpus::standard();
  int cap = std::min(config.nmax, 6);
  auto add_family = [&](const std::string& id, const std::vector<const Matroid*>& family) {
    Json ms = Json::array();
    for (const Matroid* m : family) ms.push_back(matroid_as_circuits(*m));
    for (int v : family[0]->ground()) {
      if (!family[0]->independent(ElemSet::single(v))) continue;
      Json payload{{"matroids", ms}, {"v", v}};
      stamp_field(payload, config);
      cases.push_back({id + "-v" + std::to_string(v), kind, payload});
    }
  };
  for (const auto& entry : corpus.pairs) {
    if (entry.m.ground().size() > cap) continue;
    add_family("corpus-" + slug(entry.name), {&entry.m, &entry.n});
  }
  const Matroid& u13 = corpus.matroids[0].m;
  const Matroid& u23 = corpus.matroids[1].m;
  Matroid part12 = Matroid::partition({ElemSet::of({0}), ElemSet::of({1, 2})}, {1, 1});
  add_family("triple-3", {&u23, &part12, &u13});
  Rng rng(config.seed * 7919 + (kind == "coloop" ? 8 : 9));
  int pairs = std::max(1, config.random_cases / 4);
  for (int i = 0; i < pairs; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    add_family("random-" + std::to_string(i), {&m, &n_matroid});
  }
}

std::vector<Case> nu_observation_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  const Corpus& corpus = Corpus::standard();
  int qcap = std::min(config.qmax, 3);
  for (const auto& entry : corpus.pairs) {
    Json m = matroid_as_circuits(entry.m), n = matroid_as_circuits(entry.n);
    std::string base = "corpus-" + slug(entry.name);
    cases.push_back({base + "-eleven", "nu-eleven", Json{{"m", m}, {"n", n}}});
    for (int q = 1; q <= qcap; ++q)
      for (int p = 1; p <= std::min(q, config.pmax); ++p)
        cases.push_back({base + "-q" + std::to_string(p) + std::to_string(q), "nu-qbound",
                         Json{{"m", m}, {"n", n}, {"p", p}, {"q", q}}});
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
      if (p > config.pmax || q > config.qmax) continue;
      cases.push_back({base + "-eq" + std::to_string(p) + std::to_string(q), "nu-equalized",
                       Json{{"m", m}, {"n", n}, {"p", p}, {"q", q}}});
    }
    if (config.pmax >= 2 && config.qmax >= 2)
      cases.push_back({base + "-grow", "nu-monotone",
                       Json{{"m", m}, {"n", n}, {"m_large", m}, {"n_large", n},
                            {"p", 1}, {"q", 1}, {"p_large", 2}, {"q_large", 2}}});
  }
  const Matroid& u13 = corpus.matroids[0].m;
  const Matroid& u23 = corpus.matroids[1].m;
  const Matroid& u24 = corpus.matroids[2].m;
  Matroid free4 = Matroid::free_matroid(4);
  Matroid part22 = Matroid::partition({ElemSet::of({0, 1}), ElemSet::of({2, 3})}, {1, 1});
  cases.push_back({"enlarge-uniform", "nu-monotone",
                   Json{{"m", matroid_as_circuits(u13)}, {"n", matroid_as_circuits(u13)},
                        {"m_large", matroid_as_circuits(u23)},
                        {"n_large", matroid_as_circuits(u23)},
                        {"p", 1}, {"q", 2}, {"p_large", 1}, {"q_large", 2}}});
  cases.push_back({"enlarge-to-free", "nu-monotone",
                   Json{{"m", matroid_as_circuits(part22)}, {"n", matroid_as_circuits(u24)},
                        {"m_large", matroid_as_circuits(free4)},
                        {"n_large", matroid_as_circuits(free4)},
                        {"p", 2}, {"q", 2}, {"p_large", 2}, {"q_large", 3}}});
  Rng rng(config.seed * 7919 + 10);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(config.nmax, 5) - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    Json mj = matroid_as_circuits(m), nj = matroid_as_circuits(n_matroid);
    cases.push_back({"random-" + std::to_string(i) + "-eleven", "nu-eleven",
                     Json{{"m", mj}, {"n", nj}}});
    if (qcap >= 2) {
      int q = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(qcap - 1)));
      cases.push_back({"random-" + std::to_string(i) + "-qbound", "nu-qbound",
                       Json{{"m", mj}, {"n", nj}, {"p", 1}, {"q", q}}});
    }
  }
  return cases;
}

std::vector<Case> nuqq_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  int qcap = std::min(config.qmax, 3);
  for (const auto& entry : Corpus::standard().pairs) {
    Json m = matroid_as_circuits(entry.m), n = matroid_as_circuits(entry.n);
    for (int q = 2; q <= qcap; ++q)
      cases.push_back({"corpus-" + slug(entry.name) + "-q" + std::to_string(q), "nuqq",
                       Json{{"m", m}, {"n", n}, {"q", q}}});
  }
  Rng rng(config.seed * 7919 + 11);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(config.nmax, 5) - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    int q = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(qcap - 1, 1))));
    q = std::min(q, qcap);
    cases.push_back({"random-" + std::to_string(i), "nuqq",
                     Json{{"m", matroid_as_circuits(m)}, {"n", matroid_as_circuits(n_matroid)},
                          {"q", q}}});
  }
  return cases;
}

std::vector<Case> dangling_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  int qcap = std::min(config.qmax, 3);
  auto add_grid = [&](const std::string& base, const Json& m, const Json& n) {
    for (int q = 1; q <= qcap; ++q)
      for (int p = 1; p <= std::min({q, config.pmax}); ++p)
        cases.push_back({base + "-p" + std::to_string(p) + "q" + std::to_string(q), "dangling",
                         Json{{"m", m}, {"n", n}, {"p", p}, {"q", q}}});
  };
  for (const auto& entry : Corpus::standard().pairs)
    add_grid("corpus-" + slug(entry.name), matroid_as_circuits(entry.m),
             matroid_as_circuits(entry.n));
  Rng rng(config.seed * 7919 + 12);
  int random_pairs = std::max(1, config.random_cases / 3);
  for (int i = 0; i < random_pairs; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(config.nmax, 5) - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    add_grid("random-" + std::to_string(i), matroid_as_circuits(m),
             matroid_as_circuits(n_matroid));
  }
  return cases;
}

std::vector<Case> eta_nu_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  const std::pair<int, int> grid[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}};
  auto add_grid = [&](const std::string& base, const Json& m, const Json& n) {
    for (auto [p, q] : grid) {
      if (p > config.pmax || q > config.qmax) continue;
      Json payload{{"m", m}, {"n", n}, {"p", p}, {"q", q}};
      stamp_field(payload, config);
      cases.push_back({base + "-p" + std::to_string(p) + "q" + std::to_string(q), "eta-nu",
                       payload});
    }
  };
  for (const auto& entry : Corpus::standard().pairs) {
    if (entry.m.ground().size() > config.nmax) continue;
    add_grid("corpus-" + slug(entry.name), matroid_as_circuits(entry.m),
             matroid_as_circuits(entry.n));
  }
  Rng rng(config.seed * 7919 + 13);
  int random_pairs = std::max(1, config.random_cases / 5);
  for (int i = 0; i < random_pairs; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(config.nmax, 5) - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    add_grid("random-" + std::to_string(i), matroid_as_circuits(m),
             matroid_as_circuits(n_matroid));
  }
  return cases;
}

std::vector<Case> chi_sum_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (const auto& entry : Corpus::standard().pairs)
    cases.push_back({"corpus-" + slug(entry.name), "chi-sum",
                     Json{{"m", matroid_as_circuits(entry.m)},
                          {"n", matroid_as_circuits(entry.n)}}});
  Rng rng(config.seed * 7919 + 14);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(config.nmax - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    cases.push_back({"random-" + std::to_string(i), "chi-sum",
                     Json{{"m", matroid_as_circuits(m)},
                          {"n", matroid_as_circuits(n_matroid)}}});
  }
  return cases;
}

std::vector<Case> delta_eta_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  int cap = std::min(config.nmax, 6);
  for (const auto& entry : Corpus::standard().pairs) {
    if (entry.m.ground().size() > cap) continue;
    Json payload{{"m", matroid_as_circuits(entry.m)}, {"n", matroid_as_circuits(entry.n)}};
    stamp_field(payload, config);
    cases.push_back({"corpus-" + slug(entry.name), "delta-eta", payload});
  }
  Rng rng(config.seed * 7919 + 15);
  for (int i = 0; i < config.random_cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - 1)));
    auto [m, n_matroid] = random_pair(rng.next(), n);
    Json payload{{"m", matroid_as_circuits(m)}, {"n", matroid_as_circuits(n_matroid)}};
    stamp_field(payload, config);
    cases.push_back({"random-" + std::to_string(i), "delta-eta", payload});
  }
  return cases;
}

std::vector<Case> tightness_cases(const SuiteConfig& config) {
  std::vector<Case> cases;
  for (int p = 1; p <= config.pmax; ++p)
    for (int q = 1; q <= config.qmax; ++q)
      cases.push_back({"blown-p" + std::to_string(p) + "q" + std::to_string(q), "tightness",
                       Json{{"p", p}, {"q", q}}});
  return cases;
}

std::vector<Case> cases_for(const std::string& name, const SuiteConfig& config) {
  if (name == "duality") return duality_cases(config);
  if (name == "operators") return operators_cases(config);
  if (name == "axioms") return axioms_cases(config);
  if (name == "homology-basics") return homology_cases(config);
  if (name == "join") return join_cases(config);
  if (name == "mayer-vietoris") return mayer_vietoris_cases(config);
  if (name == "game-soundness") return game_cases(config);
  if (name == "coloop" || name == "claim") {
    std::vector<Case> cases;
    branch_cases(config, name, cases);
    return cases;
  }
  if (name == "nu-observations") return nu_observation_cases(config);
  if (name == "nuqq") return nuqq_cases(config);
  if (name == "dangling") return dangling_cases(config);
  if (name == "eta-nu") return eta_nu_cases(config);
  if (name == "chi-sum") return chi_sum_cases(config);
  if (name == "delta-eta") return delta_eta_cases(config);
  if (name == "tightness") return tightness_cases(config);
  throw DomainError("unknown suite '" + name + "'; expected one of: " + [] {
    std::string all;
    for (const std::string& s : suite_names()) all += (all.empty() ? "" : ", ") + s;
    return all;
  }());
}

Json config_to_json(const SuiteConfig& config) {
  return Json{{"seed", config.seed},     {"random_cases", config.random_cases},
              {"nmax", config.nmax},     {"pmax", config.pmax},
              {"qmax", config.qmax},     {"field", config.field.to_string()},
              {"bundle_dir", config.bundle_dir}};
}

}  // namespace

int VerificationReport::tight_count() const {
  int t = 0;
  for (const CaseResult& c : cases) t += c.tight ? 1 : 0;
  return t;
}

Json VerificationReport::to_json() const {
  Json cs = Json::array();
  for (const CaseResult& c : cases)
    cs.push_back(Json{{"id", c.id},
                      {"ok", c.ok},
                      {"tight", c.tight},
                      {"message", c.message},
                      {"values", c.values}});
  return Json{{"suite", suite},   {"failures", failures}, {"aborted", aborted},
              {"bundle", bundle_path}, {"wall_ms", wall_ms},   {"config", config},
              {"cases", cs}};
}

std::string VerificationReport::summary() const {
  std::string out = "suite " + suite + ": " + std::to_string(cases.size()) + " cases, " +
                    std::to_string(failures) + " failures, " + std::to_string(tight_count()) +
                    " tight, " + std::to_string(static_cast<long long>(wall_ms)) + " ms";
  if (failures > 0)
    for (const CaseResult& c : cases)
      if (!c.ok) {
        out += "\n  FAIL " + c.id + ": " + c.message;
        break;
      }
  if (!bundle_path.empty()) out += "\n  replay bundle: " + bundle_path;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "duality",   "operators",      "axioms",   "homology-basics",
      "join",      "mayer-vietoris", "game-soundness",
      "coloop",    "claim",          "nu-observations",
      "nuqq",      "dangling",       "eta-nu",
      "chi-sum",   "delta-eta",      "tightness"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  report.config = config_to_json(config);
  std::vector<Case> cases = cases_for(name, config);

  for (const Case& c : cases) {
    CaseResult result;
    try {
      result = dispatch(c.kind, c.payload, config);
    } catch (const TheoremViolationError& e) {
      result = fail(std::string("theorem violation: ") + e.what());
    } catch (const ResourceError& e) {
      result = fail(std::string("resource limit: ") + e.what());
    } catch (const Error& e) {
      result = fail(e.what());
    }
    result.id = c.id;
    report.cases.push_back(result);
    if (!result.ok) {
      ++report.failures;
      report.aborted = true;
      if (!config.bundle_dir.empty()) {
        Json bundle{{"suite", name},
                    {"id", c.id},
                    {"kind", c.kind},
                    {"payload", c.payload},
                    {"message", result.message}};
        report.bundle_path = config.bundle_dir + "/replay-" + slug(name) + "-" + slug(c.id) +
                             ".json";
        try {
          save_json_file(report.bundle_path, bundle);
        } catch (const Error&) {
          report.bundle_path.clear();
        }
      }
      break;
    }
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

VerificationReport replay_bundle(const Json& bundle, const SuiteConfig& config) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = bundle.value("suite", std::string("unknown")) + "-replay";
  report.config = config_to_json(config);
  CaseResult result;
  try {
    result = dispatch(bundle.at("kind").get<std::string>(), bundle.at("payload"), config);
  } catch (const TheoremViolationError& e) {
    result = fail(std::string("theorem violation: ") + e.what());
  } catch (const ResourceError& e) {
    result = fail(std::string("resource limit: ") + e.what());
  } catch (const Error& e) {
    result = fail(e.what());
  }
  result.id = bundle.value("id", std::string("case"));
  report.cases.push_back(result);
  if (!result.ok) {
    report.failures = 1;
    report.aborted = true;
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace etanu

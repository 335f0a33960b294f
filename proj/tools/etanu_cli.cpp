#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "etanu/bound_engine.hpp"
#include "etanu/coloring.hpp"
#include "etanu/corpus.hpp"
#include "etanu/errors.hpp"
#include "etanu/homology.hpp"
#include "etanu/intersection.hpp"
#include "etanu/io.hpp"
#include "etanu/nu.hpp"
#include "etanu/suites.hpp"

namespace {

using namespace etanu;

struct Global {
  std::string field = "q";
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // 0 keeps the built-in caps
  bool json = false;
  bool trace = false;

  CoefficientField coefficient_field() const { return CoefficientField::parse(field); }
  Limits limits() const {
    Limits l;
    if (budget > 0) {
      l.nu_budget = budget;
      l.dangling_budget = budget;
    }
    return l;
  }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

ElemSet parse_elems(const std::string& text) {
  ElemSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ParseError("not an element list: '" + text + "'");
    }
    if (used != part.size() || v < 0 || v >= ElemSet::kMaxElements)
      throw ParseError("not an element list: '" + text + "'");
    out = out.with(v);
  }
  return out;
}

SimplicialComplex as_complex(const Json& j, const Limits& limits) {
  switch (detect_instance_kind(j)) {
    case InstanceKind::ComplexInstance:
      return complex_from_json(j);
    case InstanceKind::MatroidInstance:
      return matroid_from_json(j).complex();
    case InstanceKind::HypergraphInstance:
      return independence_complex(hypergraph_from_json(j), limits);
  }
  throw ParseError("unrecognized instance");
}

Json elemsets_to_json(const std::vector<ElemSet>& sets) {
  Json out = Json::array();
  for (ElemSet s : sets) out.push_back(elemset_to_json(s));
  return out;
}

Json trace_to_json(const DerivationNode& node) {
  Json j{{"position", node.position}, {"value", eta_to_json(node.value)}};
  if (node.move) j["move"] = node.move->to_string();
  if (node.delete_branch) j["delete"] = trace_to_json(*node.delete_branch);
  if (node.contract_branch) j["contract"] = trace_to_json(*node.contract_branch);
  return j;
}

Json assignment_to_json(const ListAssignment& a) {
  Json lists = Json::array();
  for (const auto& [element, colors] : a.lists)
    lists.push_back(Json{{"element", element}, {"colors", elemset_to_json(colors)}});
  return Json{{"k", a.k}, {"lists", lists}};
}

// Builds the single-case bundle run by `verify <suite> <files...>`.
Json targeted_bundle(const std::string& suite, const std::vector<std::string>& files, int p,
                     int q, int v, const std::string& x, const Global& g) {
  auto need = [&](std::size_t count) {
    if (files.size() != count)
      throw ParseError("suite '" + suite + "' takes " + std::to_string(count) +
                       " instance file(s), got " + std::to_string(files.size()));
  };
  auto complex_at = [&](std::size_t i) {
    return complex_to_json(as_complex(load_json_file(files[i]), g.limits()));
  };
  auto matroid_at = [&](std::size_t i) {
    Json j = load_json_file(files[i]);
    matroid_from_json(j);  // validate before embedding
    return j;
  };
  std::string kind;
  Json payload;
  if (suite == "duality") {
    need(1);
    kind = "duality";
    payload = Json{{"complex", complex_at(0)}};
  } else if (suite == "axioms") {
    need(1);
    kind = "axioms";
    payload = Json{{"matroid", matroid_at(0)}};
  } else if (suite == "homology-basics") {
    need(1);
    kind = "homology-structure";
    payload = Json{{"complex", complex_at(0)}, {"cross_field", false}};
  } else if (suite == "operators") {
    need(1);
    kind = "operators-hypergraph";
    Json j = load_json_file(files[0]);
    Hypergraph h = hypergraph_from_json(j);
    ElemSet sel = parse_elems(x);
    if (!sel.subset_of(h.vertices)) throw ParseError("--x is not a vertex subset");
    payload = Json{{"hypergraph", hypergraph_to_json(h)}, {"x", elemset_to_json(sel)}};
  } else if (suite == "join" || suite == "mayer-vietoris") {
    need(2);
    kind = suite;
    payload = suite == "join" ? Json{{"c", complex_at(0)}, {"d", complex_at(1)}}
                              : Json{{"a", complex_at(0)}, {"b", complex_at(1)}};
  } else if (suite == "game-soundness") {
    need(1);
    kind = "game";
    payload = Json{{"hypergraph", hypergraph_to_json(hypergraph_from_json(load_json_file(files[0])))}};
  } else if (suite == "coloop" || suite == "claim") {
    if (files.size() < 2)
      throw ParseError("suite '" + suite + "' takes at least two matroid files");
    if (v < 0) throw ParseError("suite '" + suite + "' needs --v");
    kind = suite;
    Json ms = Json::array();
    for (std::size_t i = 0; i < files.size(); ++i) ms.push_back(matroid_at(i));
    payload = Json{{"matroids", ms}, {"v", v}};
  } else if (suite == "nuqq") {
    need(2);
    kind = "nuqq";
    payload = Json{{"m", matroid_at(0)}, {"n", matroid_at(1)}, {"q", q}};
  } else if (suite == "dangling") {
    need(2);
    kind = "dangling";
    payload = Json{{"m", matroid_at(0)}, {"n", matroid_at(1)}, {"p", p}, {"q", q}};
  } else if (suite == "eta-nu") {
    need(2);
    kind = "eta-nu";
    payload = Json{{"m", matroid_at(0)}, {"n", matroid_at(1)}, {"p", p}, {"q", q}};
  } else if (suite == "nu-observations") {
    need(2);
    kind = "nu-eleven";
    payload = Json{{"m", matroid_at(0)}, {"n", matroid_at(1)}};
  } else if (suite == "chi-sum" || suite == "delta-eta") {
    need(2);
    kind = suite;
    payload = Json{{"m", matroid_at(0)}, {"n", matroid_at(1)}};
  } else {
    throw ParseError("suite '" + suite + "' does not take instance files");
  }
  payload["field"] = g.field;
  return Json{{"suite", suite}, {"id", "cli"}, {"kind", kind}, {"payload", payload}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for matroid intersections, independence complexes and their"
               " homological connectivity"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--field", g.field, "coefficient field: q, gf2, gf<p>")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for generated instances")->capture_default_str();
  app.add_option("--budget", g.budget, "tuple-search budget override (0 keeps defaults)");
  app.add_flag("--json", g.json, "machine-readable report output");
  app.add_flag("--trace", g.trace, "include the derivation tree where supported");

  std::function<int()> action;

  std::string in_a, in_b;
  std::vector<std::string> in_rest;

  auto* eta_cmd = app.add_subcommand("eta", "homological connectivity of an instance");
  eta_cmd->fallthrough();
  eta_cmd->add_option("file", in_a, "complex, matroid or hypergraph JSON")->required();
  eta_cmd->callback([&] {
    action = [&] {
      EtaValue value = eta(as_complex(load_json_file(in_a), g.limits()),
                           g.coefficient_field(), g.limits());
      emit(Json{{"eta", eta_to_json(value)}, {"field", g.field}});
      return 0;
    };
  });

  auto* betti_cmd = app.add_subcommand("betti", "reduced Betti numbers, degree -1 upward");
  betti_cmd->fallthrough();
  betti_cmd->add_option("file", in_a, "complex, matroid or hypergraph JSON")->required();
  betti_cmd->callback([&] {
    action = [&] {
      SimplicialComplex c = as_complex(load_json_file(in_a), g.limits());
      BettiProfile profile = reduced_betti(c, g.coefficient_field(), g.limits());
      emit(Json{{"betti", profile.numbers},
                {"eta", eta_to_json(eta(c, g.coefficient_field(), g.limits()))},
                {"field", g.field}});
      return 0;
    };
  });

  auto* chi_cmd = app.add_subcommand("chi", "minimum number of faces covering the ground set");
  chi_cmd->fallthrough();
  chi_cmd->add_option("file", in_a, "complex or matroid JSON")->required();
  chi_cmd->callback([&] {
    action = [&] {
      Json j = load_json_file(in_a);
      if (detect_instance_kind(j) == InstanceKind::MatroidInstance) {
        emit(Json{{"chi", chi_matroid(matroid_from_json(j), g.limits())}});
        return 0;
      }
      ChiResult r = chi(as_complex(j, g.limits()), g.limits());
      emit(Json{{"chi", r.value}, {"witness", elemsets_to_json(r.witness.classes)}});
      return 0;
    };
  });

  int kmax = 3;
  auto* chi_list_cmd = app.add_subcommand("chi-list", "list-coloring number up to a cap");
  chi_list_cmd->fallthrough();
  chi_list_cmd->add_option("file", in_a, "complex, matroid or hypergraph JSON")->required();
  chi_list_cmd->add_option("--kmax", kmax, "largest list size to try")->capture_default_str();
  chi_list_cmd->callback([&] {
    action = [&] {
      ChiListResult r = chi_list(as_complex(load_json_file(in_a), g.limits()), kmax, g.limits());
      Json out{{"kmax", r.k_max}, {"value", r.value ? Json(*r.value) : Json()}};
      out["hard_assignment"] =
          r.hard_assignment ? assignment_to_json(*r.hard_assignment) : Json();
      emit(out);
      return 0;
    };
  });

  auto* chi_sum_cmd = app.add_subcommand("chi-sum", "cover-number bound for an intersection");
  chi_sum_cmd->fallthrough();
  chi_sum_cmd->add_option("a", in_a, "matroid JSON")->required();
  chi_sum_cmd->add_option("b", in_b, "matroid JSON")->required();
  chi_sum_cmd->callback([&] {
    action = [&] {
      ChiSumReport r = check_chi_sum(matroid_from_json(load_json_file(in_a)),
                                     matroid_from_json(load_json_file(in_b)), g.limits());
      Json out{{"chi_m", r.chi_m},
               {"chi_n", r.chi_n},
               {"chi_intersection", r.chi_intersection},
               {"bound", r.bound},
               {"holds", r.holds},
               {"list_checked", r.list_checked},
               {"list_holds", r.list_holds}};
      out["chi_list"] = r.chi_list_value ? Json(*r.chi_list_value) : Json();
      emit(out);
      return r.holds && (!r.list_checked || r.list_holds) ? 0 : 1;
    };
  });

  int opt_p = 1, opt_q = 1;
  bool with_witness = false;
  auto* nu_cmd = app.add_subcommand("nu", "the tuple matching parameter of a matroid pair");
  nu_cmd->fallthrough();
  nu_cmd->add_option("a", in_a, "matroid JSON")->required();
  nu_cmd->add_option("b", in_b, "matroid JSON")->required();
  nu_cmd->add_option("--p", opt_p, "tuple size on the first side")->capture_default_str();
  nu_cmd->add_option("--q", opt_q, "tuple size on the second side")->capture_default_str();
  nu_cmd->add_flag("--witness", with_witness, "include the optimal tuples");
  nu_cmd->callback([&] {
    action = [&] {
      NuResult r = nu_pq(matroid_from_json(load_json_file(in_a)),
                         matroid_from_json(load_json_file(in_b)), opt_p, opt_q, g.limits());
      Json out{{"value", r.value}, {"p", opt_p}, {"q", opt_q}};
      if (with_witness) {
        out["a"] = elemsets_to_json(r.a);
        out["b"] = elemsets_to_json(r.b);
      }
      emit(out);
      return 0;
    };
  });

  auto* intersect_cmd =
      app.add_subcommand("intersect", "maximum common independent set with certificate");
  intersect_cmd->fallthrough();
  intersect_cmd->add_option("a", in_a, "matroid JSON")->required();
  intersect_cmd->add_option("b", in_b, "matroid JSON")->required();
  intersect_cmd->callback([&] {
    action = [&] {
      IntersectionCertificate cert = max_common_independent(
          matroid_from_json(load_json_file(in_a)), matroid_from_json(load_json_file(in_b)));
      emit(Json{{"I", elemset_to_json(cert.common)},
                {"V1", elemset_to_json(cert.v1)},
                {"V2", elemset_to_json(cert.v2)},
                {"size", cert.size()}});
      return 0;
    };
  });

  auto* game_cmd = app.add_subcommand("game", "value of the deletion/contraction game");
  game_cmd->fallthrough();
  game_cmd->add_option("file", in_a, "hypergraph JSON")->required();
  game_cmd->callback([&] {
    action = [&] {
      GameResult r =
          game_value(hypergraph_from_json(load_json_file(in_a)), g.trace, g.limits());
      Json out{{"value", eta_to_json(r.value)}};
      if (r.trace) out["trace"] = trace_to_json(*r.trace);
      emit(out);
      return 0;
    };
  });

  auto* circ_cmd = app.add_subcommand("circ", "minimal non-faces / circuits of an instance");
  circ_cmd->fallthrough();
  circ_cmd->add_option("file", in_a, "complex, matroid or hypergraph JSON")->required();
  circ_cmd->callback([&] {
    action = [&] {
      Json j = load_json_file(in_a);
      std::vector<ElemSet> out;
      if (detect_instance_kind(j) == InstanceKind::MatroidInstance)
        out = matroid_from_json(j).circuits();
      else
        out = circ(as_complex(j, g.limits()));
      emit(Json{{"circuits", elemsets_to_json(out)}});
      return 0;
    };
  });

  std::string sel_restrict, sel_contract, sel_delete, sel_sim;
  auto* minor_cmd = app.add_subcommand("minor", "restriction, contraction, deletion");
  minor_cmd->fallthrough();
  minor_cmd->add_option("file", in_a, "matroid or hypergraph JSON")->required();
  auto* o_r = minor_cmd->add_option("--restrict", sel_restrict, "keep these elements");
  auto* o_c = minor_cmd->add_option("--contract", sel_contract, "contract these elements");
  auto* o_d = minor_cmd->add_option("--delete", sel_delete, "delete these elements");
  auto* o_s = minor_cmd->add_option("--sim", sel_sim, "drop edges meeting these elements");
  minor_cmd->callback([&] {
    action = [&] {
      int chosen = (o_r->count() > 0) + (o_c->count() > 0) + (o_d->count() > 0) +
                   (o_s->count() > 0);
      if (chosen != 1)
        throw ParseError("choose exactly one of --restrict/--contract/--delete/--sim");
      Json j = load_json_file(in_a);
      if (detect_instance_kind(j) == InstanceKind::HypergraphInstance) {
        Hypergraph h = hypergraph_from_json(j);
        Hypergraph out = o_r->count() ? restrict(h, parse_elems(sel_restrict))
                         : o_c->count() ? contract(h, parse_elems(sel_contract))
                         : o_d->count() ? delete_vertices(h, parse_elems(sel_delete))
                                        : sim(h, parse_elems(sel_sim));
        emit(hypergraph_to_json(out));
        return 0;
      }
      if (detect_instance_kind(j) == InstanceKind::MatroidInstance) {
        Matroid m = matroid_from_json(j);
        Matroid out = [&] {
          if (o_r->count()) return minor_restrict(m, parse_elems(sel_restrict));
          if (o_c->count()) return minor_contract(m, parse_elems(sel_contract));
          if (o_d->count()) return minor_restrict(m, m.ground() - parse_elems(sel_delete));
          ElemSet sel = parse_elems(sel_sim);
          if (sel.size() != 1) throw ParseError("--sim on a matroid takes a single element");
          return sim_element(m, sel.min_element());
        }();
        emit(matroid_to_circuits_json(out));
        return 0;
      }
      if (!o_r->count()) throw ParseError("complexes support --restrict only");
      emit(complex_to_json(
          restrict_complex(complex_from_json(j), parse_elems(sel_restrict))));
      return 0;
    };
  });

  auto* tight_cmd =
      app.add_subcommand("tightness", "the parallel-extension family attaining the bound");
  tight_cmd->fallthrough();
  tight_cmd->add_option("--p", opt_p, "parallel copies on even sides")->capture_default_str();
  tight_cmd->add_option("--q", opt_q, "parallel copies on odd sides")->capture_default_str();
  tight_cmd->callback([&] {
    action = [&] {
      TightnessInstance inst = tightness_example(opt_p, opt_q);
      Json edges = Json::array();
      for (auto [u, v] : inst.graph.edges) edges.push_back(Json::array({u, v}));
      SimplicialComplex inter = common_independence_complex(inst.m, inst.n, g.limits());
      emit(Json{{"p", opt_p},
                {"q", opt_q},
                {"edges", edges},
                {"m", matroid_to_circuits_json(inst.m)},
                {"n", matroid_to_circuits_json(inst.n)},
                {"chi_m", chi_matroid(inst.m, g.limits())},
                {"chi_n", chi_matroid(inst.n, g.limits())},
                {"eta", eta_to_json(eta(inter, g.coefficient_field(), g.limits()))},
                {"delta",
                 frac_to_json(delta_eta(inter, g.coefficient_field(), g.limits()).value)}});
      return 0;
    };
  });

  auto* gen_cmd = app.add_subcommand("gen", "deterministic random instances");
  gen_cmd->fallthrough();
  gen_cmd->require_subcommand(1);
  int gen_n = 5, gen_edges = -1, gen_arity = 3;
  double gen_density = 0.5;
  std::string gen_kind = "mix";
  auto* gen_m = gen_cmd->add_subcommand("matroid", "one random matroid");
  gen_m->fallthrough();
  gen_m->add_option("--n", gen_n, "ground size")->capture_default_str();
  gen_m->add_option("--kind", gen_kind, "uniform, partition, graphic or mix")
      ->capture_default_str();
  gen_m->callback([&] {
    action = [&] {
      MatroidKind kind;
      if (gen_kind == "uniform")
        kind = MatroidKind::Uniform;
      else if (gen_kind == "partition")
        kind = MatroidKind::Partition;
      else if (gen_kind == "graphic")
        kind = MatroidKind::Graphic;
      else if (gen_kind == "mix")
        kind = MatroidKind::Mixed;
      else
        throw ParseError("unknown kind '" + gen_kind + "'");
      emit(matroid_to_circuits_json(random_matroid(g.seed, gen_n, kind)));
      return 0;
    };
  });
  auto* gen_c = gen_cmd->add_subcommand("complex", "one random complex");
  gen_c->fallthrough();
  gen_c->add_option("--n", gen_n, "ground size")->capture_default_str();
  gen_c->add_option("--density", gen_density, "keep probability per subset element")
      ->capture_default_str();
  gen_c->callback([&] {
    action = [&] {
      emit(complex_to_json(random_complex(g.seed, gen_n, gen_density)));
      return 0;
    };
  });
  auto* gen_h = gen_cmd->add_subcommand("hypergraph", "one random hypergraph");
  gen_h->fallthrough();
  gen_h->add_option("--n", gen_n, "vertex count")->capture_default_str();
  gen_h->add_option("--edges", gen_edges, "edge count (default n)");
  gen_h->add_option("--arity", gen_arity, "largest edge size")->capture_default_str();
  gen_h->callback([&] {
    action = [&] {
      emit(hypergraph_to_json(
          random_hypergraph(g.seed, gen_n, gen_edges < 0 ? gen_n : gen_edges, gen_arity)));
      return 0;
    };
  });
  auto* gen_p = gen_cmd->add_subcommand("pair", "two random matroids on one ground set");
  gen_p->fallthrough();
  gen_p->add_option("--n", gen_n, "ground size")->capture_default_str();
  gen_p->callback([&] {
    action = [&] {
      emit(Json{{"m", matroid_to_circuits_json(random_matroid(g.seed * 2, gen_n))},
                {"n", matroid_to_circuits_json(random_matroid(g.seed * 2 + 1, gen_n))}});
      return 0;
    };
  });

  std::string suite, replay_path, bundle_dir = ".", sel_x;
  int cases = 50, nmax = 7, pmax = 3, qmax = 3, opt_v = -1;
  bool allow_large = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a verification suite, one targeted check, or a replay bundle");
  verify_cmd->fallthrough();
  verify_cmd->add_option("suite", suite, "one of the suite names");
  verify_cmd->add_option("files", in_rest, "instance files for a targeted check");
  verify_cmd->add_option("--replay", replay_path, "re-run a failure bundle");
  verify_cmd->add_option("--cases", cases, "random cases per suite")->capture_default_str();
  verify_cmd->add_option("--nmax", nmax, "largest random ground size")->capture_default_str();
  verify_cmd->add_option("--pmax", pmax, "largest p")->capture_default_str();
  verify_cmd->add_option("--qmax", qmax, "largest q")->capture_default_str();
  verify_cmd->add_option("--bundle-dir", bundle_dir, "where failure bundles land; '' disables")
      ->capture_default_str();
  verify_cmd->add_flag("--allow-large", allow_large,
                       "acknowledge sizes beyond the desk-scale defaults");
  verify_cmd->add_option("--p", opt_p, "p for targeted checks")->capture_default_str();
  verify_cmd->add_option("--q", opt_q, "q for targeted checks")->capture_default_str();
  verify_cmd->add_option("--v", opt_v, "vertex for coloop/claim checks");
  verify_cmd->add_option("--x", sel_x, "element list for operators checks");
  verify_cmd->callback([&] {
    action = [&] {
      SuiteConfig config;
      config.seed = g.seed;
      config.random_cases = cases;
      config.nmax = nmax;
      config.pmax = pmax;
      config.qmax = qmax;
      config.field = g.coefficient_field();
      config.limits = g.limits();
      config.bundle_dir = bundle_dir;
      if ((nmax > 7 || pmax > 3 || qmax > 3) && !allow_large) {
        std::cerr << "sizes beyond n<=7, p,q<=3 can be very expensive; pass --allow-large\n";
        return 2;
      }
      VerificationReport report;
      if (!replay_path.empty()) {
        report = replay_bundle(load_json_file(replay_path), config);
      } else if (suite.empty()) {
        std::cerr << "verify needs a suite name or --replay; suites:";
        for (const std::string& s : suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
      } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
          std::cerr << "unknown suite '" << suite << "'; suites:";
          for (const std::string& s : names) std::cerr << " " << s;
          std::cerr << "\n";
          return 2;
        }
        if (in_rest.empty())
          report = run_suite(suite, config);
        else
          report = replay_bundle(targeted_bundle(suite, in_rest, opt_p, opt_q, opt_v, sel_x, g),
                                 config);
      }
      if (g.json) {
        Json full = report.to_json();
        for (const Json& c : full["cases"]) std::cout << c.dump() << "\n";
        full.erase("cases");
        full["tight"] = report.tight_count();
        std::cout << full.dump() << "\n";
      } else {
        std::cout << report.summary() << "\n";
      }
      return report.passed() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

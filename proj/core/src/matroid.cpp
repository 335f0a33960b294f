#include "etanu/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "etanu/errors.hpp"
#include "etanu/hypergraph.hpp"

namespace etanu {

struct Matroid::Caches {
  std::mutex mu;
  std::optional<std::vector<ElemSet>> circuits;
  std::optional<SimplicialComplex> complex;
  std::optional<std::vector<ElemSet>> bases;
};

Matroid::Matroid(ElemSet ground, std::function<bool(ElemSet)> oracle, std::string name)
    : ground_(ground),
      oracle_(std::move(oracle)),
      name_(std::move(name)),
      caches_(std::make_shared<Caches>()) {}

std::string AugmentationCounterexample::to_string() const {
  return "S=" + s.to_string() + " T=" + t.to_string();
}

bool Matroid::independent(ElemSet s) const {
  if (!s.subset_of(ground_))
    throw DomainError("set " + s.to_string() + " not within ground " + ground_.to_string());
  return oracle_(s);
}

int Matroid::rank(ElemSet x) const {
  if (!x.subset_of(ground_))
    throw DomainError("rank of " + x.to_string() + " outside ground " + ground_.to_string());
  ElemSet picked;
  for (int v : x)
    if (oracle_(picked.with(v))) picked = picked.with(v);
  return picked.size();
}

const std::vector<ElemSet>& Matroid::circuits() const {
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->circuits) {
    // Minimal dependent sets: dependent with every one-element deletion
    // independent.
    std::vector<ElemSet> out;
    for_each_subset(ground_, [&](ElemSet s) {
      if (s.empty() || oracle_(s)) return;
      for (int v : s)
        if (!oracle_(s.without(v))) return;
      out.push_back(s);
    });
    std::sort(out.begin(), out.end(), LexLess{});
    caches_->circuits = std::move(out);
  }
  return *caches_->circuits;
}

const SimplicialComplex& Matroid::complex() const {
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->complex) {
    std::vector<ElemSet> faces;
    for_each_subset(ground_, [&](ElemSet s) {
      if (oracle_(s)) faces.push_back(s);
    });
    caches_->complex = SimplicialComplex::from_faces(ground_, faces);
  }
  return *caches_->complex;
}

const std::vector<ElemSet>& Matroid::bases() const {
  std::lock_guard<std::mutex> lock(caches_->mu);
  if (!caches_->bases) {
    // complex() grabs the same mutex; compute facets inline.
    std::vector<ElemSet> faces;
    for_each_subset(ground_, [&](ElemSet s) {
      if (oracle_(s)) faces.push_back(s);
    });
    int r = 0;
    for (ElemSet f : faces) r = std::max(r, f.size());
    std::vector<ElemSet> maximal;
    for (ElemSet f : faces) {
      if (f.size() != r) continue;
      maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), LexLess{});
    caches_->bases = std::move(maximal);
  }
  return *caches_->bases;
}

ElemSet Matroid::loops() const {
  ElemSet out;
  for (int v : ground_)
    if (!oracle_(ElemSet::single(v))) out = out.with(v);
  return out;
}

Matroid Matroid::uniform(int n, int k) {
  if (n < 0 || n > ElemSet::kMaxElements || k < 0 || k > n)
    throw DomainError("uniform matroid needs 0 <= k <= n");
  if (k == 0 && n > 0)
    throw LoopError("rank 0 would make every element a loop");
  ElemSet ground = ElemSet::universe(n);
  return Matroid(
      ground, [k](ElemSet s) { return s.size() <= k; },
      "uniform(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Matroid Matroid::free_matroid(int n) { return uniform(n, n); }

Matroid Matroid::partition(const std::vector<ElemSet>& parts, const std::vector<int>& capacities) {
  if (parts.size() != capacities.size())
    throw DomainError("partition matroid needs one capacity per part");
  if (parts.empty()) throw DomainError("partition matroid needs at least one part");
  ElemSet ground;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw DomainError("empty part");
    if (parts[i].intersects(ground)) throw DomainError("parts overlap");
    if (capacities[i] < 1)
      throw LoopError("capacity below 1 would make part " + parts[i].to_string() + " loops");
    ground = ground | parts[i];
  }
  auto oracle = [parts, capacities](ElemSet s) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if ((s & parts[i]).size() > capacities[i]) return false;
    return true;
  };
  return Matroid(ground, oracle, "partition(" + std::to_string(parts.size()) + " parts)");
}

Matroid Matroid::graphic(const Multigraph& g) {
  if (g.edges.size() > ElemSet::kMaxElements)
    throw DomainError("too many edges for a ground set");
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
      throw DomainError("edge endpoint out of range");
    if (u == v) throw LoopError("self-loop would be a matroid loop");
  }
  ElemSet ground = ElemSet::universe(static_cast<int>(g.edges.size()));
  auto edges = g.edges;
  int vertex_count = g.vertex_count;
  // Independent = the chosen edges form a forest (union-find cycle test).
  auto oracle = [edges, vertex_count](ElemSet s) {
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (int i : s) {
      int ru = find(edges[i].first), rv = find(edges[i].second);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
    return true;
  };
  return Matroid(ground, oracle, "graphic(" + std::to_string(vertex_count) + " vertices)");
}

Matroid Matroid::from_circuits(int n, std::vector<ElemSet> circuits) {
  if (n < 0 || n > ElemSet::kMaxElements) throw DomainError("bad ground size");
  return from_circuits(ElemSet::universe(n), std::move(circuits));
}

Matroid Matroid::from_circuits(ElemSet ground, std::vector<ElemSet> circuits) {
  for (ElemSet c : circuits)
    if (c.size() == 1)
      throw LoopError("singleton circuit " + c.to_string() + " (loops are not supported)");
  Hypergraph h = make_hypergraph(ground, std::move(circuits));
  if (auto violation = check_circuit_axioms(h))
    throw InvalidCircuitsError("not a circuit family: " + violation->to_string(), *violation);
  auto edges = h.edges;
  auto oracle = [edges](ElemSet s) {
    for (ElemSet c : edges)
      if (c.subset_of(s)) return false;
    return true;
  };
  Matroid m(ground, oracle, "circuits(" + std::to_string(ground.size()) + ")");
  m.caches_->circuits = std::move(edges);
  return m;
}

Matroid Matroid::from_independent_sets(int n, const std::vector<ElemSet>& sets) {
  if (n < 0 || n > ElemSet::kMaxElements) throw DomainError("bad ground size");
  return from_independent_sets(ElemSet::universe(n), sets);
}

Matroid Matroid::from_independent_sets(ElemSet ground, const std::vector<ElemSet>& sets) {
  SimplicialComplex c = SimplicialComplex::from_faces(ground, sets);
  if (auto ce = verify_matroid_axioms(c))
    throw NotAMatroidError("independent sets fail augmentation: " + ce->to_string(), *ce);
  if (!c.covers_ground()) {
    ElemSet uncovered = ground;
    for (ElemSet f : c.facets()) uncovered = uncovered - f;
    throw LoopError("elements " + uncovered.to_string() +
                    " are in no set (loops are not supported)");
  }
  auto oracle = [c](ElemSet s) { return c.contains(s); };
  Matroid m(ground, oracle, "independent(" + std::to_string(ground.size()) + ")");
  m.caches_->complex = std::move(c);
  return m;
}

std::optional<AugmentationCounterexample> verify_matroid_axioms(const SimplicialComplex& c) {
  if (c.is_void() || !c.contains(ElemSet{}))
    return AugmentationCounterexample{ElemSet{}, ElemSet{}};  // the empty set is missing
  std::vector<ElemSet> faces = c.all_faces();
  std::sort(faces.begin(), faces.end(), LexLess{});
  for (ElemSet s : faces)
    for (ElemSet t : faces) {
      if (s.size() >= t.size()) continue;
      bool extended = false;
      for (int v : t - s)
        if (c.contains(s.with(v))) {
          extended = true;
          break;
        }
      if (!extended) return AugmentationCounterexample{s, t};
    }
  return std::nullopt;
}

Matroid minor_restrict(const Matroid& m, ElemSet x) {
  if (!x.subset_of(m.ground())) throw DomainError("restriction outside the ground set");
  auto inner = m.oracle_;
  Matroid out(x, inner, m.describe() + "|" + x.to_string());
  return out;
}

Matroid minor_contract(const Matroid& m, ElemSet x) {
  if (!x.subset_of(m.ground())) throw DomainError("contraction outside the ground set");
  // Dependent iff some circuit survives: c - x inside s for a circuit c not
  // inside x.
  std::vector<ElemSet> traces;
  for (ElemSet c : m.circuits())
    if (!c.subset_of(x)) traces.push_back(c - x);
  auto oracle = [traces](ElemSet s) {
    for (ElemSet t : traces)
      if (t.subset_of(s)) return false;
    return true;
  };
  return Matroid(m.ground() - x, oracle, m.describe() + "/" + x.to_string());
}

Matroid sim_element(const Matroid& m, int v) {
  if (!m.ground().contains(v)) throw DomainError("sim at an element outside the ground set");
  std::vector<ElemSet> kept;
  for (ElemSet c : m.circuits())
    if (!c.contains(v)) kept.push_back(c);
  auto oracle = [kept](ElemSet s) {
    for (ElemSet c : kept)
      if (c.subset_of(s)) return false;
    return true;
  };
  return Matroid(m.ground(), oracle, m.describe() + "~" + std::to_string(v));
}

SimplicialComplex common_independence_complex(const std::vector<const Matroid*>& ms,
                                              const Limits& limits) {
  if (ms.empty()) throw DomainError("intersection of zero matroids");
  ElemSet ground = ms[0]->ground();
  for (const Matroid* m : ms)
    if (m->ground() != ground) throw DomainError("matroids on different ground sets");
  if (ground.size() > limits.max_enumeration_ground)
    throw ResourceError("common independence over " + std::to_string(ground.size()) +
                        " elements exceeds the enumeration cap");
  std::vector<ElemSet> faces;
  for_each_subset(ground, [&](ElemSet s) {
    for (const Matroid* m : ms)
      if (!m->independent(s)) return;
    faces.push_back(s);
  });
  return SimplicialComplex::from_faces(ground, faces);
}

SimplicialComplex common_independence_complex(const Matroid& m, const Matroid& n,
                                              const Limits& limits) {
  return common_independence_complex({&m, &n}, limits);
}

}  // namespace etanu

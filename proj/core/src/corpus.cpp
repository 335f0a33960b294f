#include "etanu/corpus.hpp"

#include <cmath>

#include "etanu/errors.hpp"

namespace etanu {

// splitmix64: tiny, well-mixed, and identical everywhere for a given seed.
Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty range");
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
  auto map_set = [&](ElemSet s) {
    ElemSet out;
    for (int v : s) {
      if (v >= static_cast<int>(perm.size())) throw DomainError("permutation too short");
      out = out.with(perm[static_cast<std::size_t>(v)]);
    }
    return out;
  };
  std::vector<ElemSet> edges;
  edges.reserve(h.edges.size());
  for (ElemSet e : h.edges) edges.push_back(map_set(e));
  return make_hypergraph(map_set(h.vertices), std::move(edges));
}

namespace {

Matroid random_uniform(Rng& rng, int n) {
  int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return Matroid::uniform(n, k);
}

Matroid random_partition_matroid(Rng& rng, int n) {
  int part_count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
  std::vector<ElemSet> parts(static_cast<std::size_t>(part_count));
  for (int v = 0; v < n; ++v) {
    std::size_t i = rng.below(static_cast<std::uint64_t>(part_count));
    parts[i] = parts[i].with(v);
  }
  std::vector<ElemSet> kept;
  std::vector<int> caps;
  for (const ElemSet& p : parts) {
    if (p.empty()) continue;
    kept.push_back(p);
    caps.push_back(1 + static_cast<int>(rng.below(2)));
  }
  return Matroid::partition(kept, caps);
}

Matroid random_graphic(Rng& rng, int n) {
  int vc = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 4)) + 1));
  Multigraph g;
  g.vertex_count = vc;
  for (int i = 0; i < n; ++i) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(vc)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(vc) - 1));
    if (v >= u) ++v;
    g.edges.emplace_back(u, v);
  }
  return Matroid::graphic(g);
}

}  // namespace

Matroid random_matroid(std::uint64_t seed, int n, MatroidKind kind) {
  if (n < 1 || n > ElemSet::kMaxElements) throw DomainError("bad ground size");
  Rng rng(seed * 1000003ull + static_cast<std::uint64_t>(n) * 101ull +
          static_cast<std::uint64_t>(kind) * 7ull);
  switch (kind) {
    case MatroidKind::Uniform:
      return random_uniform(rng, n);
    case MatroidKind::Partition:
      return random_partition_matroid(rng, n);
    case MatroidKind::Graphic:
      return random_graphic(rng, n);
    case MatroidKind::Mixed:
      break;
  }
  switch (rng.below(4)) {
    case 0:
      return random_uniform(rng, n);
    case 1:
      return random_partition_matroid(rng, n);
    case 2:
      return random_graphic(rng, n);
    default:
      return Matroid::free_matroid(n);
  }
}

SimplicialComplex random_complex(std::uint64_t seed, int n, double density) {
  ElemSet g = ElemSet::universe(n);
  if (density >= 1.0) return SimplicialComplex::full_simplex(g);
  std::uint64_t num = static_cast<std::uint64_t>(
      std::llround(std::max(0.0, density) * 4096.0));
  if (num == 0) return SimplicialComplex::empty_face_only(g);
  Rng rng(seed * 2654435761ull + static_cast<std::uint64_t>(n));
  std::vector<ElemSet> generators{ElemSet{}};
  for_each_subset(g, [&](ElemSet s) {
    if (s.empty()) return;
    bool keep = true;
    for (int i = 0; i < s.size(); ++i)
      if (!rng.chance(num, 4096)) keep = false;
    if (keep) generators.push_back(s);
  });
  return SimplicialComplex::from_faces(g, generators);
}

Hypergraph random_hypergraph(std::uint64_t seed, int n, int edge_count, int max_arity) {
  if (n < 1 || n > ElemSet::kMaxElements) throw DomainError("bad vertex count");
  if (max_arity < 1) throw DomainError("edges need at least one vertex");
  Rng rng(seed * 0x51AB5F3ull + static_cast<std::uint64_t>(n) * 31ull +
          static_cast<std::uint64_t>(edge_count) * 7ull + static_cast<std::uint64_t>(max_arity));
  std::vector<ElemSet> edges;
  for (int i = 0; i < edge_count; ++i) {
    int arity =
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(max_arity, n))));
    ElemSet e;
    while (e.size() < arity) e = e.with(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    edges.push_back(e);
  }
  return make_hypergraph(ElemSet::universe(n), std::move(edges));
}

TightnessInstance tightness_example(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("both multiplicities must be at least 1");
  Multigraph g;
  g.vertex_count = 4;
  for (int i = 0; i < p; ++i) g.edges.emplace_back(0, 1);
  for (int i = 0; i < p; ++i) g.edges.emplace_back(2, 3);
  for (int i = 0; i < q; ++i) g.edges.emplace_back(1, 2);
  for (int i = 0; i < q; ++i) g.edges.emplace_back(3, 0);

  ElemSet at[4];
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    at[g.edges[i].first] = at[g.edges[i].first].with(static_cast<int>(i));
    at[g.edges[i].second] = at[g.edges[i].second].with(static_cast<int>(i));
  }
  Matroid m = Matroid::partition({at[0], at[2]}, {1, 1});
  Matroid n = Matroid::partition({at[1], at[3]}, {1, 1});
  return TightnessInstance{std::move(m), std::move(n), std::move(g), p, q};
}

namespace {

Corpus build_standard() {
  Corpus c;

  Matroid u13 = Matroid::uniform(3, 1);
  Matroid u23 = Matroid::uniform(3, 2);
  Matroid u24 = Matroid::uniform(4, 2);
  Matroid u25 = Matroid::uniform(5, 2);
  Matroid u35 = Matroid::uniform(5, 3);
  Matroid u36 = Matroid::uniform(6, 3);
  Matroid free3 = Matroid::free_matroid(3);
  Matroid free4 = Matroid::free_matroid(4);
  Matroid part22 = Matroid::partition({ElemSet::of({0, 1}), ElemSet::of({2, 3})}, {1, 1});
  Matroid part12 = Matroid::partition({ElemSet::of({0}), ElemSet::of({1, 2})}, {1, 1});
  Matroid part33 =
      Matroid::partition({ElemSet::of({0, 1, 2}), ElemSet::of({3, 4, 5})}, {1, 2});
  Matroid part222 = Matroid::partition(
      {ElemSet::of({0, 1}), ElemSet::of({2, 3}), ElemSet::of({4, 5})}, {1, 1, 1});
  Matroid k3 = Matroid::graphic(Multigraph{3, {{0, 1}, {1, 2}, {0, 2}}});
  Matroid k4 = Matroid::graphic(
      Multigraph{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
  Matroid parallel3 = Matroid::graphic(Multigraph{2, {{0, 1}, {0, 1}, {0, 1}}});
  Matroid doubled_path = Matroid::graphic(Multigraph{3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}});
  Matroid circ4 = Matroid::from_circuits(
      4, {ElemSet::of({0, 1, 2}), ElemSet::of({0, 1, 3}), ElemSet::of({2, 3})});
  Matroid indep3 = Matroid::from_independent_sets(
      3, {ElemSet::of({0, 1}), ElemSet::of({1, 2})});
  Matroid part8a = Matroid::partition({ElemSet::of({0, 1}), ElemSet::of({2, 3}),
                                       ElemSet::of({4, 5}), ElemSet::of({6}), ElemSet::of({7})},
                                      {1, 1, 1, 1, 1});
  Matroid part8b = Matroid::partition({ElemSet::of({0}), ElemSet::of({1, 2}),
                                       ElemSet::of({3, 4}), ElemSet::of({5, 6}), ElemSet::of({7})},
                                      {1, 1, 1, 1, 1});

  c.matroids = {
      {"uniform-1-3", u13},
      {"uniform-2-3", u23},
      {"uniform-2-4", u24},
      {"uniform-2-5", u25},
      {"uniform-3-5", u35},
      {"uniform-3-6", u36},
      {"free-3", free3},
      {"free-4", free4},
      {"partition-22", part22},
      {"partition-12", part12},
      {"partition-33", part33},
      {"partition-222", part222},
      {"cycle-k3", k3},
      {"cycle-k4", k4},
      {"parallel-triple", parallel3},
      {"doubled-path", doubled_path},
      {"circuit-built-4", circ4},
      {"independent-built-3", indep3},
  };

  TightnessInstance blown11 = tightness_example(1, 1);
  TightnessInstance blown21 = tightness_example(2, 1);

  c.pairs = {
      {"blown-11", blown11.m, blown11.n},
      {"blown-21", blown21.m, blown21.n},
      {"tiny-uniforms", u13, u23},
      {"free-free", free3, free3},
      {"free-uniform", free4, u24},
      {"uniform-partition", u24, part22},
      {"uniform-uniform-5", u25, u35},
      {"partition-partition", part33, part222},
      {"cycle-partition", k4, part33},
      {"parallel-circuit", doubled_path, circ4},
      {"uniform-partition-3", u23, part12},
      {"partition-pair-8", part8a, part8b},
  };

  ElemSet g3 = ElemSet::universe(3), g4 = ElemSet::universe(4), g5 = ElemSet::universe(5),
          g6 = ElemSet::universe(6);

  c.complexes = {
      {"void-3", SimplicialComplex::void_complex(g3), false},
      {"empty-face-3", SimplicialComplex::empty_face_only(g3), false},
      {"point", SimplicialComplex::full_simplex(ElemSet::universe(1)), false},
      {"two-points", SimplicialComplex::from_facets(
                         ElemSet::universe(2), {ElemSet::of({0}), ElemSet::of({1})}),
       false},
      {"simplex-3", SimplicialComplex::full_simplex(g3), false},
      {"triangle-rim", SimplicialComplex::from_facets(
                           g3, {ElemSet::of({0, 1}), ElemSet::of({1, 2}), ElemSet::of({0, 2})}),
       false},
      {"two-edges", SimplicialComplex::from_facets(
                        g4, {ElemSet::of({0, 1}), ElemSet::of({2, 3})}),
       false},
      {"path-4", SimplicialComplex::from_facets(
                     g4, {ElemSet::of({0, 1}), ElemSet::of({1, 2}), ElemSet::of({2, 3})}),
       false},
      {"pentagon-rim",
       SimplicialComplex::from_facets(g5, {ElemSet::of({0, 1}), ElemSet::of({1, 2}),
                                           ElemSet::of({2, 3}), ElemSet::of({3, 4}),
                                           ElemSet::of({0, 4})}),
       false},
      {"octahedron-shell",
       SimplicialComplex::from_facets(
           g6, {ElemSet::of({0, 1, 2}), ElemSet::of({0, 1, 5}), ElemSet::of({0, 4, 2}),
                ElemSet::of({0, 4, 5}), ElemSet::of({3, 1, 2}), ElemSet::of({3, 1, 5}),
                ElemSet::of({3, 4, 2}), ElemSet::of({3, 4, 5})}),
       false},
      {"projective-plane-6",
       SimplicialComplex::from_facets(
           g6, {ElemSet::of({0, 1, 2}), ElemSet::of({0, 1, 3}), ElemSet::of({0, 2, 4}),
                ElemSet::of({0, 3, 5}), ElemSet::of({0, 4, 5}), ElemSet::of({1, 2, 5}),
                ElemSet::of({1, 3, 4}), ElemSet::of({1, 4, 5}), ElemSet::of({2, 3, 4}),
                ElemSet::of({2, 3, 5})}),
       true},
  };

  c.hypergraphs = {
      {"cycle-4", make_hypergraph(g4, {ElemSet::of({0, 1}), ElemSet::of({1, 2}),
                                       ElemSet::of({2, 3}), ElemSet::of({0, 3})})},
      {"triangle-pairs", make_hypergraph(g3, {ElemSet::of({0, 1}), ElemSet::of({1, 2}),
                                              ElemSet::of({0, 2})})},
      {"singleton-edge", make_hypergraph(ElemSet::universe(2), {ElemSet::of({0})})},
      {"edgeless-3", make_hypergraph(g3, {})},
      {"dead-position", make_hypergraph(ElemSet::universe(2), {ElemSet{}})},
      {"mixed-arity-6", make_hypergraph(g6, {ElemSet::of({0, 1, 2}), ElemSet::of({2, 3}),
                                             ElemSet::of({3}), ElemSet::of({0, 4, 5})})},
      {"cycle-k4-circuits", make_hypergraph(g6, k4.circuits())},
      {"paw-5", make_hypergraph(g5, {ElemSet::of({0, 1}), ElemSet::of({1, 2}),
                                     ElemSet::of({0, 2}), ElemSet::of({2, 3}),
                                     ElemSet::of({3, 4})})},
  };

  return c;
}

}  // namespace

const Corpus& Corpus::standard() {
  static const Corpus instance = build_standard();
  return instance;
}

}  // namespace etanu

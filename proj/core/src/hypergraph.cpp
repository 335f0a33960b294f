#include "etanu/hypergraph.hpp"

#include <algorithm>

#include "etanu/complex.hpp"
#include "etanu/errors.hpp"

namespace etanu {

namespace {

std::vector<ElemSet> normalize_edges(std::vector<ElemSet> edges) {
  std::sort(edges.begin(), edges.end(), LexLess{});
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace

std::string Hypergraph::to_string() const {
  std::string out = "(V=" + vertices.to_string() + ", E={";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += edges[i].to_string();
  }
  return out + "})";
}

Hypergraph make_hypergraph(ElemSet vertices, std::vector<ElemSet> edges) {
  for (ElemSet e : edges)
    if (!e.subset_of(vertices))
      throw DomainError("edge " + e.to_string() + " not within vertex set " +
                        vertices.to_string());
  return Hypergraph{vertices, normalize_edges(std::move(edges))};
}

Hypergraph delete_edge(const Hypergraph& h, ElemSet e) {
  auto it = std::find(h.edges.begin(), h.edges.end(), e);
  if (it == h.edges.end())
    throw NotFoundError("no edge " + e.to_string() + " in " + h.to_string());
  std::vector<ElemSet> edges = h.edges;
  edges.erase(edges.begin() + (it - h.edges.begin()));
  return Hypergraph{h.vertices, std::move(edges)};
}

Hypergraph restrict(const Hypergraph& h, ElemSet x) {
  if (!x.subset_of(h.vertices))
    throw DomainError("restriction set " + x.to_string() + " not within vertices");
  std::vector<ElemSet> edges;
  for (ElemSet e : h.edges)
    if (e.subset_of(x)) edges.push_back(e);
  return Hypergraph{x, std::move(edges)};  // already sorted, subset keeps order
}

Hypergraph contract(const Hypergraph& h, ElemSet x) {
  if (!x.subset_of(h.vertices))
    throw DomainError("contraction set " + x.to_string() + " not within vertices");
  std::vector<ElemSet> edges;
  for (ElemSet e : h.edges)
    if (!e.subset_of(x)) edges.push_back(e - x);
  return Hypergraph{h.vertices - x, normalize_edges(std::move(edges))};
}

Hypergraph delete_vertices(const Hypergraph& h, ElemSet x) {
  if (!x.subset_of(h.vertices))
    throw DomainError("deletion set " + x.to_string() + " not within vertices");
  std::vector<ElemSet> edges;
  for (ElemSet e : h.edges)
    if (!e.intersects(x)) edges.push_back(e);
  return Hypergraph{h.vertices - x, std::move(edges)};
}

Hypergraph sim(const Hypergraph& h, ElemSet x) {
  if (!x.subset_of(h.vertices))
    throw DomainError("sim set " + x.to_string() + " not within vertices");
  std::vector<ElemSet> edges;
  for (ElemSet e : h.edges)
    if (!e.intersects(x)) edges.push_back(e);
  return Hypergraph{h.vertices, std::move(edges)};
}

SimplicialComplex independence_complex(const Hypergraph& h, const Limits& limits) {
  if (h.vertices.size() > limits.max_enumeration_ground)
    throw ResourceError("independence complex over " + std::to_string(h.vertices.size()) +
                        " vertices exceeds the enumeration cap");
  for (ElemSet e : h.edges)
    if (e.empty()) return SimplicialComplex::void_complex(h.vertices);

  SubsetIndexer indexer(h.vertices);
  std::vector<char> independent(indexer.count(), 1);
  for (ElemSet e : h.edges) {
    // Mark every superset of e dependent by walking supersets directly.
    std::size_t base = indexer.index_of(e);
    std::size_t rest = indexer.count() - 1 - base;  // free positions
    for (std::size_t sup = 0;; sup = (sup - rest) & rest) {
      independent[base | sup] = 0;
      if (sup == rest) break;
    }
  }

  std::vector<ElemSet> faces;
  for (std::size_t i = 0; i < indexer.count(); ++i)
    if (independent[i]) faces.push_back(indexer.set_at(i));
  return SimplicialComplex::from_faces(h.vertices, faces);
}

std::string CircuitViolation::to_string() const {
  switch (kind) {
    case Kind::EmptyEdge:
      return "empty edge";
    case Kind::NestedPair:
      return "nested pair " + c1.to_string() + " < " + c2.to_string();
    case Kind::EliminationFailure:
      return "elimination failure at C1=" + c1.to_string() + " C2=" + c2.to_string() +
             " u=" + std::to_string(u) + " v=" + std::to_string(v);
  }
  return "?";
}

std::optional<CircuitViolation> check_circuit_axioms(const Hypergraph& h) {
  for (ElemSet e : h.edges)
    if (e.empty())
      return CircuitViolation{CircuitViolation::Kind::EmptyEdge, e, ElemSet{}};

  for (ElemSet c1 : h.edges)
    for (ElemSet c2 : h.edges)
      if (c1 != c2 && c1.subset_of(c2))
        return CircuitViolation{CircuitViolation::Kind::NestedPair, c1, c2};

  // Strong elimination: for u common to C1, C2 and v only in C1, some edge
  // inside (C1 | C2) - u passes through v.
  for (ElemSet c1 : h.edges)
    for (ElemSet c2 : h.edges) {
      if (c1 == c2) continue;
      for (int u : c1 & c2)
        for (int v : c1 - c2) {
          ElemSet space = (c1 | c2).without(u);
          bool found = false;
          for (ElemSet c3 : h.edges)
            if (c3.contains(v) && c3.subset_of(space)) {
              found = true;
              break;
            }
          if (!found)
            return CircuitViolation{CircuitViolation::Kind::EliminationFailure, c1, c2, u, v};
        }
    }
  return std::nullopt;
}

}  // namespace etanu

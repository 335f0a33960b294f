#include "etanu/intersection.hpp"

#include <deque>
#include <map>

#include "etanu/errors.hpp"

namespace etanu {

std::string IntersectionCertificate::to_string() const {
  return "common=" + common.to_string() + " v1=" + v1.to_string() + " v2=" + v2.to_string();
}

namespace {

struct SearchOutcome {
  std::vector<int> path;  // empty when no augmenting path exists
  ElemSet reached;        // complete only when path is empty
};

// BFS over the exchange digraph of the common independent set `current`:
// sources are {x outside : current + x independent in m}, sinks are
// {x outside : current + x independent in n}; arcs go y -> x for m-exchanges
// (y inside, x outside) and x -> y for n-exchanges.  Sources and neighbors
// are visited in ascending element order, so the shortest augmenting path
// found is reproducible.  When no sink is reachable the full reachable set
// doubles as the optimality certificate.
SearchOutcome bfs_augment(const Matroid& m, const Matroid& n, ElemSet current) {
  ElemSet ground = m.ground();
  ElemSet outside = ground - current;

  ElemSet sources, sinks;
  for (int x : outside) {
    if (m.independent(current.with(x))) sources = sources.with(x);
    if (n.independent(current.with(x))) sinks = sinks.with(x);
  }

  SearchOutcome out;
  std::map<int, int> parent;
  std::deque<int> queue;
  for (int x : sources) {
    parent[x] = -1;
    out.reached = out.reached.with(x);
    queue.push_back(x);
  }

  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    if (sinks.contains(at)) {
      for (int step = at; step >= 0; step = parent.at(step)) out.path.push_back(step);
      return out;
    }
    if (current.contains(at)) {
      for (int x : outside)
        if (!out.reached.contains(x) && m.independent(current.without(at).with(x))) {
          parent[x] = at;
          out.reached = out.reached.with(x);
          queue.push_back(x);
        }
    } else {
      for (int y : current)
        if (!out.reached.contains(y) && n.independent(current.without(y).with(at))) {
          parent[y] = at;
          out.reached = out.reached.with(y);
          queue.push_back(y);
        }
    }
  }
  return out;
}

}  // namespace

IntersectionCertificate max_common_independent(const Matroid& m, const Matroid& n) {
  if (m.ground() != n.ground()) throw DomainError("matroids on different ground sets");

  ElemSet current;
  while (true) {
    SearchOutcome outcome = bfs_augment(m, n, current);
    if (outcome.path.empty()) {
      IntersectionCertificate cert;
      cert.common = current;
      cert.v2 = outcome.reached;
      cert.v1 = m.ground() - outcome.reached;
      return cert;
    }
    for (int v : outcome.path)
      current = current.contains(v) ? current.without(v) : current.with(v);
  }
}

int nu11(const Matroid& m, const Matroid& n) { return max_common_independent(m, n).size(); }

}  // namespace etanu

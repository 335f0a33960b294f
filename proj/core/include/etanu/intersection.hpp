#pragma once

#include <string>

#include "etanu/elem_set.hpp"
#include "etanu/matroid.hpp"

namespace etanu {

// A maximum common independent set together with the min-max certificate:
// ground = v1 + v2 (disjoint), |set| = rank_m(v1) + rank_n(v2).  v1 is the
// side not reachable from the augmentation sources at termination.
struct IntersectionCertificate {
  ElemSet common;
  ElemSet v1, v2;
  int size() const { return common.size(); }
  std::string to_string() const;
};

// Maximum common independent set of two matroids on the same ground set, by
// shortest augmenting paths in the exchange digraph (lowest-index
// tie-breaking, so the result is deterministic).
IntersectionCertificate max_common_independent(const Matroid& m, const Matroid& n);

// Size of a maximum common independent set.
int nu11(const Matroid& m, const Matroid& n);

}  // namespace etanu

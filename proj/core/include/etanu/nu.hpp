#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "etanu/elem_set.hpp"
#include "etanu/limits.hpp"
#include "etanu/matroid.hpp"
#include "etanu/rational.hpp"

namespace etanu {

// Number of sets in the tuple containing v.
int multiplicity(int v, std::span<const ElemSet> sets);

// An optimal tuple for the fractional-matching style parameter
//   nu_pq(M, N) = max sum_v min(multiplicity of v in A, multiplicity in B)
// over p-tuples A of independent sets of M and q-tuples B of N.  The search
// runs over tuples of bases; enlarging a set never lowers the objective, so
// this is exact.  A and B are the lexicographically least optimal witness.
struct NuResult {
  int value = 0;
  std::vector<ElemSet> a;  // p sets, independent in m
  std::vector<ElemSet> b;  // q sets, independent in n
  std::string to_string() const;
};
NuResult nu_pq(const Matroid& m, const Matroid& n, int p, int q, const Limits& limits = Limits{});

// Trims an optimal witness until every element has equal multiplicity on the
// two sides; then both sides have total size exactly nu_pq.  Surplus is
// removed from the highest-index set containing the element.
NuResult equalized_witness(const Matroid& m, const Matroid& n, int p, int q,
                           const Limits& limits = Limits{});

// nu is monotone under enlarging the matroids or the tuple sizes.
struct MonotoneReport {
  int nu_small = 0, nu_large = 0;
  bool holds = false;
  std::string to_string() const;
};
MonotoneReport check_monotone(const Matroid& m, const Matroid& n, const Matroid& m_large,
                              const Matroid& n_large, int p, int q, int p_large, int q_large,
                              const Limits& limits = Limits{});

// nu_11 >= ceil(nu_qq / q).
struct NuqqReport {
  int nu_11 = 0;
  int nu_qq = 0;
  int q = 0;
  bool holds = false;
  bool tight = false;
  std::string to_string() const;
};
NuqqReport check_nuqq_bound(const Matroid& m, const Matroid& n, int q,
                            const Limits& limits = Limits{});

// A dangling witness at z: p sets independent in M all containing z, q sets
// independent in N, with equal multiplicities away from z and the N side of
// total size exactly nu_pq.
struct DanglingWitness {
  std::vector<ElemSet> x;  // p sets, independent in m, each containing z
  std::vector<ElemSet> y;  // q sets, independent in n, total size nu_pq
  int z = -1;
  int nu = 0;
  std::string to_string() const;
};

// Finds a dangling witness by exhaustive search: z ascending, then Y-tuples
// of independent sets with the total-size constraint, then the X side by
// multiplicity matching.  Requires p <= q and nu11 > 0.  The witness exists
// whenever those hold; exhausting the search without one raises
// TheoremViolationError.
DanglingWitness dangling_witness(const Matroid& m, const Matroid& n, int p, int q,
                                 const Limits& limits = Limits{});

}  // namespace etanu

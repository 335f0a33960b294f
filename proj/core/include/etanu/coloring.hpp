#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etanu/complex.hpp"
#include "etanu/elem_set.hpp"
#include "etanu/limits.hpp"
#include "etanu/matroid.hpp"

namespace etanu {

// A partition of the ground set into faces of a complex.
struct Coloring {
  std::vector<ElemSet> classes;
  int class_of(int element) const;
  std::string to_string() const;
};

// chi(c): the minimum number of faces covering the ground set, by exact set
// cover over the facets.  Requires every element to lie in a face.  The
// witness is a genuine partition (later classes shed repeated elements).
struct ChiResult {
  int value = 0;
  Coloring witness;
};
ChiResult chi(const SimplicialComplex& c, const Limits& limits = Limits{});

// chi of a matroid by the covering formula max over non-empty x of
// ceil(|x| / rank(x)).  Loops make covering impossible -> LoopError.
int chi_matroid(const Matroid& m, const Limits& limits = Limits{});

// An assignment of a color list to every ground element.  Colors are indices
// into a palette of size at most k * |ground|.
struct ListAssignment {
  int k = 0;
  std::vector<std::pair<int, ElemSet>> lists;  // (element, colors), ascending elements
  std::string to_string() const;
};

// True when some choice of one color per element makes every color class a
// face of c.
bool list_colorable(const SimplicialComplex& c, const ListAssignment& lists);

// The list-coloring number: the least k <= k_max such that every k-list
// assignment admits a proper choice, or "exceeded" if none does.  List
// assignments are enumerated up to renaming of colors.  Enforces the
// enumeration caps in limits.
struct ChiListResult {
  std::optional<int> value;  // empty: greater than k_max
  int k_max = 0;
  // For the largest failing k (= value-1, or k_max when exceeded), one list
  // assignment with no proper choice; empty when value is 1.
  std::optional<ListAssignment> hard_assignment;
  bool exceeded() const { return !value.has_value(); }
  std::string to_string() const;
};
ChiListResult chi_list(const SimplicialComplex& c, int k_max, const Limits& limits = Limits{});

// chi(M & N) <= chi(M) + chi(N), and on small instances the list version.
// Both matroids must live on the same ground set and every singleton must be
// independent in both.
struct ChiSumReport {
  int chi_m = 0, chi_n = 0, chi_intersection = 0;
  int bound = 0;  // chi_m + chi_n
  bool holds = false;
  // List-coloring side, only attempted within the chi_list limits.
  bool list_checked = false;
  std::optional<int> chi_list_value;  // empty and list_checked: exceeded bound
  bool list_holds = false;
  std::string to_string() const;
};
ChiSumReport check_chi_sum(const Matroid& m, const Matroid& n, const Limits& limits = Limits{});

}  // namespace etanu

#include "etanu/coloring.hpp"

#include <algorithm>
#include <limits>

#include "etanu/errors.hpp"
#include "etanu/rational.hpp"

namespace etanu {

int Coloring::class_of(int element) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].contains(element)) return static_cast<int>(i);
  return -1;
}

std::string Coloring::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out += " ";
    out += classes[i].to_string();
  }
  return out + "]";
}

ChiResult chi(const SimplicialComplex& c, const Limits& limits) {
  if (!c.covers_ground())
    throw DomainError("cannot color: some element lies in no face");
  if (c.ground().size() > limits.max_enumeration_ground)
    throw ResourceError("cover search over " + std::to_string(c.ground().size()) +
                        " elements exceeds the enumeration cap");
  if (c.ground().empty()) return ChiResult{0, Coloring{}};

  // Exact set cover over the facets: dp by covered subset, always extending
  // at the first uncovered element, facets tried in lexicographic order.
  SubsetIndexer indexer(c.ground());
  const int kUnset = std::numeric_limits<int>::max();
  std::vector<int> cost(indexer.count(), kUnset);
  std::vector<int> via(indexer.count(), -1);        // facet used to get here
  std::vector<std::size_t> from(indexer.count(), 0);  // previous covered set
  cost[0] = 0;
  const auto& facets = c.facets();
  for (std::size_t mask = 0; mask < indexer.count(); ++mask) {
    if (cost[mask] == kUnset) continue;
    ElemSet covered = indexer.set_at(mask);
    ElemSet missing = c.ground() - covered;
    if (missing.empty()) continue;
    int v = missing.min_element();
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      if (!facets[fi].contains(v)) continue;
      std::size_t next = indexer.index_of(covered | facets[fi]);
      if (cost[mask] + 1 < cost[next]) {
        cost[next] = cost[mask] + 1;
        via[next] = static_cast<int>(fi);
        from[next] = mask;
      }
    }
  }

  std::size_t full = indexer.count() - 1;
  // Coverage guarantees singleton faces, so the DP always completes.
  ChiResult result;
  result.value = cost[full];
  std::vector<ElemSet> cover;
  for (std::size_t at = full; at != 0; at = from[at]) cover.push_back(facets[static_cast<std::size_t>(via[at])]);
  std::reverse(cover.begin(), cover.end());
  // Turn the cover into a partition: later classes shed repeats.
  ElemSet used;
  for (ElemSet f : cover) {
    result.witness.classes.push_back(f - used);
    used = used | f;
  }
  return result;
}

int chi_matroid(const Matroid& m, const Limits& limits) {
  if (!m.loops().empty())
    throw LoopError("matroid has loops " + m.loops().to_string() + "; no covering exists");
  if (m.ground().size() > limits.max_enumeration_ground)
    throw ResourceError("covering formula over " + std::to_string(m.ground().size()) +
                        " elements exceeds the enumeration cap");
  if (m.ground().empty()) return 0;
  std::int64_t best = 0;
  for_each_subset(m.ground(), [&](ElemSet x) {
    if (x.empty()) return;
    std::int64_t need = Frac(x.size(), m.rank(x)).ceil();
    best = std::max(best, need);
  });
  return static_cast<int>(best);
}

std::string ListAssignment::to_string() const {
  std::string out;
  for (auto& [v, colors] : lists) {
    if (!out.empty()) out += " ";
    out += std::to_string(v) + ":" + colors.to_string();
  }
  return out;
}

namespace {

// Backtracking existence of a proper choice: one color per element, classes
// staying faces.  Elements are processed in ascending order.
bool choice_exists(const SimplicialComplex& c, const std::vector<std::pair<int, ElemSet>>& lists,
                   std::size_t at, std::vector<std::pair<int, ElemSet>>& classes) {
  if (at == lists.size()) return true;
  auto [v, colors] = lists[at];
  for (int color : colors) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [color](auto& e) { return e.first == color; });
    ElemSet current = it == classes.end() ? ElemSet{} : it->second;
    ElemSet extended = current.with(v);
    if (!c.contains(extended)) continue;
    if (it == classes.end()) {
      classes.emplace_back(color, extended);
      if (choice_exists(c, lists, at + 1, classes)) return true;
      classes.pop_back();
    } else {
      it->second = extended;
      if (choice_exists(c, lists, at + 1, classes)) return true;
      it->second = current;
    }
  }
  return false;
}

// Enumerates k-lists for elements[at..] where `used` colors already appear in
// earlier lists.  New colors always take the smallest unused palette indices,
// which enumerates every assignment up to color renaming.  Returns false
// (and fills `defeat`) as soon as an assignment with no proper choice shows.
bool all_assignments_colorable(const SimplicialComplex& c, const std::vector<int>& elements,
                               int k, std::size_t at, int used,
                               std::vector<std::pair<int, ElemSet>>& lists,
                               ListAssignment* defeat) {
  if (at == elements.size()) {
    std::vector<std::pair<int, ElemSet>> classes;
    if (choice_exists(c, lists, 0, classes)) return true;
    if (defeat) *defeat = ListAssignment{k, lists};
    return false;
  }
  for (int fresh = 0; fresh <= k; ++fresh) {
    int old_needed = k - fresh;
    if (old_needed > used) continue;
    ElemSet fresh_part;
    for (int i = 0; i < fresh; ++i) fresh_part = fresh_part.with(used + i);
    // All old_needed-subsets of the used prefix {0..used-1}.
    std::vector<int> pick(static_cast<std::size_t>(old_needed));
    auto recurse = [&](auto&& self, int start, int depth) -> bool {
      if (depth == old_needed) {
        ElemSet colors = fresh_part;
        for (int i = 0; i < old_needed; ++i) colors = colors.with(pick[static_cast<std::size_t>(i)]);
        lists.emplace_back(elements[at], colors);
        bool ok = all_assignments_colorable(c, elements, k, at + 1, used + fresh, lists, defeat);
        lists.pop_back();
        return ok;
      }
      for (int v = start; v < used; ++v) {
        pick[static_cast<std::size_t>(depth)] = v;
        if (!self(self, v + 1, depth + 1)) return false;
      }
      return true;
    };
    if (!recurse(recurse, 0, 0)) return false;
  }
  return true;
}

}  // namespace

bool list_colorable(const SimplicialComplex& c, const ListAssignment& lists) {
  for (auto& [v, colors] : lists.lists) {
    if (!c.ground().contains(v)) throw DomainError("list for element outside the ground set");
    if (colors.size() != lists.k) throw DomainError("list size differs from k");
  }
  if (lists.lists.size() != static_cast<std::size_t>(c.ground().size()))
    throw DomainError("assignment must cover the ground set");
  std::vector<std::pair<int, ElemSet>> classes;
  return choice_exists(c, lists.lists, 0, classes);
}

ChiListResult chi_list(const SimplicialComplex& c, int k_max, const Limits& limits) {
  if (!c.covers_ground())
    throw DomainError("cannot list-color: some element lies in no face");
  if (c.ground().size() > limits.max_chi_list_ground)
    throw ResourceError("list coloring over " + std::to_string(c.ground().size()) +
                        " elements exceeds the cap of " +
                        std::to_string(limits.max_chi_list_ground));
  if (k_max < 1 || k_max > limits.max_chi_list_k)
    throw ResourceError("k_max " + std::to_string(k_max) + " outside 1.." +
                        std::to_string(limits.max_chi_list_k));

  ChiListResult result;
  result.k_max = k_max;
  std::vector<int> elements = c.ground().to_vector();
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::pair<int, ElemSet>> lists;
    ListAssignment defeat;
    if (all_assignments_colorable(c, elements, k, 0, 0, lists, &defeat)) {
      result.value = k;
      return result;
    }
    result.hard_assignment = defeat;
  }
  return result;  // exceeded: every k up to k_max admits a defeating assignment
}

std::string ChiListResult::to_string() const {
  return value ? std::to_string(*value) : (">" + std::to_string(k_max));
}

std::string ChiSumReport::to_string() const {
  std::string out = "chi(m)=" + std::to_string(chi_m) + " chi(n)=" + std::to_string(chi_n) +
                    " chi(m&n)=" + std::to_string(chi_intersection) +
                    " bound=" + std::to_string(bound) + (holds ? " holds" : " VIOLATED");
  if (list_checked)
    out += " chi_list=" + (chi_list_value ? std::to_string(*chi_list_value) : ">bound") +
           (list_holds ? " holds" : " VIOLATED");
  return out;
}

ChiSumReport check_chi_sum(const Matroid& m, const Matroid& n, const Limits& limits) {
  if (m.ground() != n.ground()) throw DomainError("matroids on different ground sets");
  for (int v : m.ground())
    if (!m.independent(ElemSet::single(v)) || !n.independent(ElemSet::single(v)))
      throw LoopError("element " + std::to_string(v) + " is a loop in one of the matroids");

  ChiSumReport r;
  SimplicialComplex inter = common_independence_complex(m, n, limits);
  r.chi_m = chi_matroid(m, limits);
  r.chi_n = chi_matroid(n, limits);
  r.chi_intersection = chi(inter, limits).value;
  r.bound = r.chi_m + r.chi_n;
  r.holds = r.chi_intersection <= r.bound;

  if (inter.ground().size() <= limits.max_chi_list_ground && r.bound <= limits.max_chi_list_k) {
    r.list_checked = true;
    ChiListResult lr = chi_list(inter, r.bound, limits);
    r.chi_list_value = lr.value;
    r.list_holds = lr.value.has_value();  // found within the bound
  }
  return r;
}

}  // namespace etanu

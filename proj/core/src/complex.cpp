#include "etanu/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "etanu/errors.hpp"
#include "etanu/hypergraph.hpp"

namespace etanu {

namespace {

// Keeps the maximal sets of a family, sorted lexicographically.
std::vector<ElemSet> maximal_antichain(std::vector<ElemSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](ElemSet a, ElemSet b) { return a.size() > b.size(); });
  std::vector<ElemSet> out;
  for (ElemSet s : sets) {
    bool dominated = false;
    for (ElemSet kept : out)
      if (s.subset_of(kept)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(ElemSet ground) {
  return SimplicialComplex(ground, true, {});
}

SimplicialComplex SimplicialComplex::empty_face_only(ElemSet ground) {
  // Canonical facet list of {{}} is a single empty facet, so equality
  // comparisons see one representation regardless of construction route.
  return SimplicialComplex(ground, false, {ElemSet{}});
}

SimplicialComplex SimplicialComplex::from_facets(ElemSet ground, std::vector<ElemSet> facets) {
  for (ElemSet f : facets)
    if (!f.subset_of(ground))
      throw DomainError("facet " + f.to_string() + " not within ground " + ground.to_string());
  if (facets.empty()) return empty_face_only(ground);
  return SimplicialComplex(ground, false, maximal_antichain(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_faces(ElemSet ground,
                                                const std::vector<ElemSet>& faces) {
  if (faces.empty()) return void_complex(ground);
  return from_facets(ground, faces);
}

SimplicialComplex SimplicialComplex::full_simplex(ElemSet ground) {
  return SimplicialComplex(ground, false, {ground});
}

bool SimplicialComplex::contains(ElemSet s) const {
  if (!s.subset_of(ground_))
    throw DomainError("set " + s.to_string() + " not within ground " + ground_.to_string());
  if (void_) return false;
  for (ElemSet f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

int SimplicialComplex::dim() const {
  if (void_) return -2;
  int d = -1;
  for (ElemSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

std::size_t SimplicialComplex::face_count() const {
  if (void_) return 0;
  std::unordered_set<std::uint64_t> seen;
  for (ElemSet f : facets_)
    for_each_subset(f, [&](ElemSet s) { seen.insert(s.bits()); });
  return seen.size();
}

std::vector<ElemSet> SimplicialComplex::all_faces(const Limits& limits) const {
  if (void_) return {};
  std::unordered_set<std::uint64_t> seen;
  for (ElemSet f : facets_) {
    for_each_subset(f, [&](ElemSet s) { seen.insert(s.bits()); });
    if (seen.size() > limits.max_faces)
      throw ResourceError("complex exceeds the face budget of " +
                          std::to_string(limits.max_faces));
  }
  std::vector<ElemSet> faces;
  faces.reserve(seen.size());
  for (std::uint64_t bits : seen) faces.push_back(ElemSet::from_bits(bits));
  std::sort(faces.begin(), faces.end(), [](ElemSet a, ElemSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return faces;
}

bool SimplicialComplex::covers_ground() const {
  if (void_) return ground_.empty();
  ElemSet covered;
  for (ElemSet f : facets_) covered = covered | f;
  return covered == ground_;
}

std::string SimplicialComplex::to_string() const {
  if (void_) return "void" + ground_.to_string();
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ",";
    out += facets_[i].to_string();
  }
  return out + ">" + ground_.to_string();
}

std::vector<ElemSet> circ(const SimplicialComplex& c) {
  if (c.is_void()) throw DomainError("the void complex has no minimal non-faces");
  // e is a minimal non-face iff e is not a face but every e - {x} is.
  std::vector<ElemSet> out;
  for_each_subset(c.ground(), [&](ElemSet e) {
    if (e.empty() || c.contains(e)) return;
    for (int x : e)
      if (!c.contains(e.without(x))) return;
    out.push_back(e);
  });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

bool duality_roundtrip(const SimplicialComplex& c, const Limits& limits) {
  if (!c.covers_ground())
    throw DomainError("duality roundtrip requires every ground element in a face");
  Hypergraph h = make_hypergraph(c.ground(), circ(c));
  return independence_complex(h, limits) == c;
}

SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d) {
  if (c.ground().intersects(d.ground()))
    throw DomainError("join requires disjoint ground sets");
  ElemSet ground = c.ground() | d.ground();
  if (c.is_void() || d.is_void()) return SimplicialComplex::void_complex(ground);
  std::vector<ElemSet> facets;
  facets.reserve(c.facets().size() * d.facets().size());
  for (ElemSet f : c.facets())
    for (ElemSet g : d.facets()) facets.push_back(f | g);
  return SimplicialComplex::from_facets(ground, std::move(facets));
}

SimplicialComplex union_complex(const SimplicialComplex& c, const SimplicialComplex& d) {
  if (c.ground() != d.ground()) throw DomainError("union requires equal ground sets");
  if (c.is_void()) return d;
  if (d.is_void()) return c;
  std::vector<ElemSet> facets = c.facets();
  facets.insert(facets.end(), d.facets().begin(), d.facets().end());
  return SimplicialComplex::from_facets(c.ground(), std::move(facets));
}

SimplicialComplex intersection_complex(const SimplicialComplex& c, const SimplicialComplex& d) {
  if (c.ground() != d.ground()) throw DomainError("intersection requires equal ground sets");
  if (c.is_void() || d.is_void()) return SimplicialComplex::void_complex(c.ground());
  std::vector<ElemSet> faces;
  for (ElemSet f : c.all_faces())
    if (d.contains(f)) faces.push_back(f);
  return SimplicialComplex::from_faces(c.ground(), faces);
}

SimplicialComplex restrict_complex(const SimplicialComplex& c, ElemSet s) {
  if (s.empty()) throw DomainError("restriction to the empty set");
  if (!s.subset_of(c.ground()))
    throw DomainError("restriction set " + s.to_string() + " not within ground");
  if (c.is_void()) return SimplicialComplex::void_complex(s);
  std::vector<ElemSet> facets;
  facets.reserve(c.facets().size());
  for (ElemSet f : c.facets()) facets.push_back(f & s);
  return SimplicialComplex::from_facets(s, std::move(facets));
}

SimplicialComplex shift_complex(const SimplicialComplex& c, int offset) {
  auto shift = [offset](ElemSet s) {
    ElemSet out;
    for (int v : s) out = out.with(v + offset);
    return out;
  };
  if (c.is_void()) return SimplicialComplex::void_complex(shift(c.ground()));
  std::vector<ElemSet> facets;
  for (ElemSet f : c.facets()) facets.push_back(shift(f));
  return SimplicialComplex::from_facets(shift(c.ground()), std::move(facets));
}

}  // namespace etanu

#include "etanu/homology.hpp"

#include <algorithm>
#include <map>

#include "etanu/errors.hpp"
#include "linalg.hpp"

namespace etanu {

CoefficientField CoefficientField::gf(int p) {
  if (p < 2) throw DomainError("field order must be a prime >= 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw DomainError(std::to_string(p) + " is not prime");
  return CoefficientField(p);
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf", 0) == 0) {
    try {
      return gf(std::stoi(text.substr(2)));
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad field '" + text + "'");
    }
  }
  throw ParseError("bad field '" + text + "' (want q or gf<p>)");
}

std::string BettiProfile::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(numbers[i]);
  }
  return out + "]";
}

namespace {

// Faces of each dimension, lexicographically sorted; index 0 holds the empty
// face (dimension -1).
std::vector<std::vector<ElemSet>> faces_by_dimension(const SimplicialComplex& c,
                                                     const Limits& limits) {
  std::vector<std::vector<ElemSet>> by_dim(static_cast<std::size_t>(c.dim() + 2));
  for (ElemSet f : c.all_faces(limits)) by_dim[static_cast<std::size_t>(f.size())].push_back(f);
  for (auto& level : by_dim) std::sort(level.begin(), level.end(), LexLess{});
  return by_dim;
}

BoundaryMatrix boundary_from_levels(const std::vector<ElemSet>& sources,
                                    const std::vector<ElemSet>& targets,
                                    CoefficientField field) {
  BoundaryMatrix m;
  m.rows = static_cast<int>(targets.size());
  m.cols = static_cast<int>(sources.size());
  m.field = field;
  m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  std::map<std::uint64_t, int> row_of;
  for (int r = 0; r < m.rows; ++r) row_of[targets[static_cast<std::size_t>(r)].bits()] = r;
  for (int col = 0; col < m.cols; ++col) {
    ElemSet f = sources[static_cast<std::size_t>(col)];
    int i = 0;
    for (int v : f) {
      std::int64_t sign = (i % 2 == 0) ? 1 : -1;
      if (!field.is_rationals()) sign = (sign % field.prime() + field.prime()) % field.prime();
      m.entries[static_cast<std::size_t>(row_of.at(f.without(v).bits())) * m.cols + col] = sign;
      ++i;
    }
  }
  return m;
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k, CoefficientField field,
                               const Limits& limits) {
  if (k < -1 || k > c.dim() + 1)
    throw DomainError("boundary degree " + std::to_string(k) + " outside -1.." +
                      std::to_string(c.dim() + 1));
  auto by_dim = faces_by_dimension(c, limits);
  auto level = [&](int dim) -> std::vector<ElemSet> {
    std::size_t i = static_cast<std::size_t>(dim + 1);
    return i < by_dim.size() ? by_dim[i] : std::vector<ElemSet>{};
  };
  return boundary_from_levels(level(k), level(k - 1), field);
}

int matrix_rank(const BoundaryMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (m.field.is_rationals()) return linalg::rational_rank(m.entries, m.rows, m.cols);
  return linalg::gf_rank(m.entries, m.rows, m.cols, m.field.prime());
}

BettiProfile reduced_betti(const SimplicialComplex& c, CoefficientField field,
                           const Limits& limits) {
  BettiProfile profile;
  if (c.is_void()) return profile;  // no chain groups at all
  auto by_dim = faces_by_dimension(c, limits);
  int top = c.dim();
  // rank of the boundary map leaving dimension k, for k = -1 .. top+1.
  std::vector<int> out_rank(static_cast<std::size_t>(top + 3), 0);
  for (int k = 0; k <= top; ++k) {
    BoundaryMatrix m = boundary_from_levels(by_dim[static_cast<std::size_t>(k + 1)],
                                            by_dim[static_cast<std::size_t>(k)], field);
    out_rank[static_cast<std::size_t>(k + 1)] = matrix_rank(m);
  }
  profile.numbers.resize(static_cast<std::size_t>(top + 2));
  for (int k = -1; k <= top; ++k) {
    auto chain_dim = static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(k + 1)].size());
    profile.numbers[static_cast<std::size_t>(k + 1)] =
        chain_dim - out_rank[static_cast<std::size_t>(k + 1)] -
        out_rank[static_cast<std::size_t>(k + 2)];
  }
  return profile;
}

EtaValue eta(const SimplicialComplex& c, CoefficientField field, const Limits& limits) {
  if (c.is_void()) return EtaValue(0);
  BettiProfile profile = reduced_betti(c, field, limits);
  for (std::size_t i = 0; i < profile.numbers.size(); ++i)
    if (profile.numbers[i] != 0) return EtaValue(static_cast<int>(i));
  return EtaValue::infinity();
}

DeltaEtaResult delta_eta(const SimplicialComplex& c, CoefficientField field,
                         const Limits& limits) {
  if (!c.covers_ground())
    throw DomainError("delta_eta requires every ground element in a face");
  if (c.ground().size() > limits.max_delta_ground)
    throw ResourceError("delta_eta over " + std::to_string(c.ground().size()) +
                        " elements exceeds the cap of " +
                        std::to_string(limits.max_delta_ground));
  if (c.ground().empty()) return DeltaEtaResult{Frac(0), ElemSet{}};

  DeltaEtaResult best{Frac(0), ElemSet{}};
  bool first = true;
  for_each_subset(c.ground(), [&](ElemSet s) {
    if (s.empty()) return;
    EtaValue e = eta(restrict_complex(c, s), field, limits);
    // Coverage makes every non-empty restriction contain a vertex, so eta
    // is at least 1 here; |s|/infinity counts as 0.
    Frac ratio = e.is_infinite() ? Frac(0) : Frac(s.size(), e.finite());
    if (first || ratio > best.value) {
      best = DeltaEtaResult{ratio, s};
      first = false;
    }
  });
  return best;
}

std::string JoinSuperadditivityReport::to_string() const {
  return "eta(c)=" + eta_c.to_string() + " eta(d)=" + eta_d.to_string() +
         " eta(join)=" + eta_join.to_string() + (holds ? " holds" : " VIOLATED") +
         (tight ? " tight" : "");
}

JoinSuperadditivityReport check_join_superadditivity(const SimplicialComplex& c,
                                                     const SimplicialComplex& d,
                                                     CoefficientField field,
                                                     const Limits& limits) {
  JoinSuperadditivityReport r;
  r.eta_c = eta(c, field, limits);
  r.eta_d = eta(d, field, limits);
  r.eta_join = eta(join(c, d), field, limits);
  EtaValue sum = r.eta_c.is_infinite() || r.eta_d.is_infinite()
                     ? EtaValue::infinity()
                     : EtaValue(r.eta_c.finite() + r.eta_d.finite());
  r.holds = r.eta_join >= sum;
  r.tight = r.eta_join == sum;
  return r;
}

std::string MayerVietorisReport::to_string() const {
  auto flag = [](bool h, bool t) { return std::string(h ? "holds" : "VIOLATED") + (t ? "=" : ""); };
  return "eta(a)=" + eta_a.to_string() + " eta(b)=" + eta_b.to_string() +
         " eta(union)=" + eta_union.to_string() +
         " eta(inter)=" + eta_intersection.to_string() + " (1)" + flag(holds1, tight1) + " (2)" +
         flag(holds2, tight2) + " (3)" + flag(holds3, tight3);
}

MayerVietorisReport check_mayer_vietoris(const SimplicialComplex& a, const SimplicialComplex& b,
                                         CoefficientField field, const Limits& limits) {
  MayerVietorisReport r;
  r.eta_a = eta(a, field, limits);
  r.eta_b = eta(b, field, limits);
  r.eta_union = eta(union_complex(a, b), field, limits);
  r.eta_intersection = eta(intersection_complex(a, b), field, limits);

  // Work in Z + {inf} so the -1 in inequality (2) stays honest at eta = 0.
  struct Ext {
    bool inf;
    long v;
  };
  auto ext = [](EtaValue e, long shift) {
    return e.is_infinite() ? Ext{true, 0} : Ext{false, e.finite() + shift};
  };
  auto le = [](Ext x, Ext y) { return y.inf || (!x.inf && x.v <= y.v); };
  auto min3 = [&](Ext x, Ext y, Ext z) {
    Ext m = x;
    if (le(y, m)) m = y;
    if (le(z, m)) m = z;
    return m;
  };
  auto eq = [](Ext x, Ext y) { return x.inf == y.inf && (x.inf || x.v == y.v); };

  Ext ea = ext(r.eta_a, 0), eb = ext(r.eta_b, 0);
  Ext eu = ext(r.eta_union, 0), ei = ext(r.eta_intersection, 0);

  Ext bound1 = min3(ea, eb, ext(r.eta_intersection, 1));
  Ext bound2 = min3(ea, eb, ext(r.eta_union, -1));
  Ext bound3a = eu, bound3b = ei;
  Ext bound3 = le(bound3a, bound3b) ? bound3a : bound3b;

  r.holds1 = le(bound1, eu);
  r.holds2 = le(bound2, ei);
  r.holds3 = le(bound3, ea);
  r.tight1 = eq(bound1, eu);
  r.tight2 = eq(bound2, ei);
  r.tight3 = eq(bound3, ea);
  return r;
}

}  // namespace etanu

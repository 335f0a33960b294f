#include "etanu/nu.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "etanu/errors.hpp"
#include "etanu/intersection.hpp"

namespace etanu {

int multiplicity(int v, std::span<const ElemSet> sets) {
  int count = 0;
  for (ElemSet s : sets)
    if (s.contains(v)) ++count;
  return count;
}

namespace {

using Counts = std::array<std::uint8_t, ElemSet::kMaxElements>;

Counts counts_of(const std::vector<ElemSet>& tuple) {
  Counts c{};
  for (ElemSet s : tuple)
    for (int v : s) ++c[static_cast<std::size_t>(v)];
  return c;
}

struct SideTuple {
  std::vector<int> picks;  // non-decreasing base indices
  Counts counts;
};

// All multisets of `arity` bases, in lexicographic pick order.  Tuples are
// multisets because the objective only sees multiplicities.
std::vector<SideTuple> enumerate_side(const std::vector<ElemSet>& bases, int arity) {
  std::vector<SideTuple> out;
  std::vector<int> picks(static_cast<std::size_t>(arity), 0);
  auto rec = [&](auto&& self, int at, int from) -> void {
    if (at == arity) {
      SideTuple t;
      t.picks = picks;
      std::vector<ElemSet> sets;
      for (int i : picks) sets.push_back(bases[static_cast<std::size_t>(i)]);
      t.counts = counts_of(sets);
      out.push_back(std::move(t));
      return;
    }
    for (int i = from; i < static_cast<int>(bases.size()); ++i) {
      picks[static_cast<std::size_t>(at)] = i;
      self(self, at + 1, i);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

std::string NuResult::to_string() const {
  std::string out = "nu=" + std::to_string(value) + " A=[";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + a[i].to_string();
  out += "] B=[";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + b[i].to_string();
  return out + "]";
}

NuResult nu_pq(const Matroid& m, const Matroid& n, int p, int q, const Limits& limits) {
  if (m.ground() != n.ground()) throw DomainError("matroids on different ground sets");
  if (p < 1 || q < 1) throw DomainError("tuple sizes must be at least 1");

  const auto& bases_m = m.bases();
  const auto& bases_n = n.bases();
  // Budget on the raw tuple count bases^p * bases^q (the multiset walk below
  // visits fewer, but the budget is defined on the plain product).
  std::uint64_t wa = checked_pow(bases_m.size(), p, limits.nu_budget);
  std::uint64_t wb = checked_pow(bases_n.size(), q, limits.nu_budget);
  if (wa > limits.nu_budget || wb > limits.nu_budget || wa > limits.nu_budget / wb)
    throw ResourceError("base-tuple search space exceeds the budget of " +
                        std::to_string(limits.nu_budget));

  std::vector<SideTuple> side_a = enumerate_side(bases_m, p);
  std::vector<SideTuple> side_b = enumerate_side(bases_n, q);
  std::vector<int> members = m.ground().to_vector();

  NuResult best;
  best.value = -1;
  for (const SideTuple& a : side_a)
    for (const SideTuple& b : side_b) {
      int total = 0;
      for (int v : members)
        total += std::min(a.counts[static_cast<std::size_t>(v)],
                          b.counts[static_cast<std::size_t>(v)]);
      // Strict improvement keeps the lexicographically first optimal witness.
      if (total > best.value) {
        best.value = total;
        best.a.clear();
        best.b.clear();
        for (int i : a.picks) best.a.push_back(bases_m[static_cast<std::size_t>(i)]);
        for (int i : b.picks) best.b.push_back(bases_n[static_cast<std::size_t>(i)]);
      }
    }
  return best;
}

NuResult equalized_witness(const Matroid& m, const Matroid& n, int p, int q,
                           const Limits& limits) {
  NuResult w = nu_pq(m, n, p, q, limits);
  // Shed surplus multiplicity, always from the highest-index set holding the
  // element.  The objective never moves: only the strictly larger side
  // shrinks, one copy at a time.
  for (int v : m.ground()) {
    auto trim = [v](std::vector<ElemSet>& side, int down_to) {
      for (auto it = side.rbegin(); it != side.rend(); ++it) {
        if (multiplicity(v, side) <= down_to) break;
        if (it->contains(v)) *it = it->without(v);
      }
    };
    int ma = multiplicity(v, w.a), mb = multiplicity(v, w.b);
    if (ma > mb) trim(w.a, mb);
    if (mb > ma) trim(w.b, ma);
  }
  return w;
}

std::string MonotoneReport::to_string() const {
  return "nu(small)=" + std::to_string(nu_small) + " nu(large)=" + std::to_string(nu_large) +
         (holds ? " holds" : " VIOLATED");
}

MonotoneReport check_monotone(const Matroid& m, const Matroid& n, const Matroid& m_large,
                              const Matroid& n_large, int p, int q, int p_large, int q_large,
                              const Limits& limits) {
  if (p > p_large || q > q_large) throw DomainError("tuple sizes must not shrink");
  if (m.ground() != m_large.ground() || n.ground() != n_large.ground())
    throw DomainError("matroids on different ground sets");
  // Independent sets of the small matroids must stay independent: facets are
  // enough because independence is downward closed.
  for (ElemSet f : m.complex().facets())
    if (!m_large.independent(f))
      throw DomainError("first matroid is not contained in its enlargement");
  for (ElemSet f : n.complex().facets())
    if (!n_large.independent(f))
      throw DomainError("second matroid is not contained in its enlargement");

  MonotoneReport r;
  r.nu_small = nu_pq(m, n, p, q, limits).value;
  r.nu_large = nu_pq(m_large, n_large, p_large, q_large, limits).value;
  r.holds = r.nu_small <= r.nu_large;
  return r;
}

std::string NuqqReport::to_string() const {
  return "nu11=" + std::to_string(nu_11) + " nu" + std::to_string(q) + std::to_string(q) + "=" +
         std::to_string(nu_qq) + (holds ? " holds" : " VIOLATED") + (tight ? " tight" : "");
}

NuqqReport check_nuqq_bound(const Matroid& m, const Matroid& n, int q, const Limits& limits) {
  if (q < 1) throw DomainError("q must be at least 1");
  NuqqReport r;
  r.q = q;
  r.nu_11 = nu11(m, n);
  r.nu_qq = nu_pq(m, n, q, q, limits).value;
  std::int64_t bound = Frac(r.nu_qq, q).ceil();
  r.holds = r.nu_11 >= bound;
  r.tight = r.nu_11 == bound;
  return r;
}

std::string DanglingWitness::to_string() const {
  std::string out = "z=" + std::to_string(z) + " X=[";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + x[i].to_string();
  out += "] Y=[";
  for (std::size_t i = 0; i < y.size(); ++i) out += (i ? "," : "") + y[i].to_string();
  return out + "]";
}

namespace {

// Finds p sets independent in m, each containing z, with prescribed
// multiplicity target[v] for every v != z.  Distributes element copies in
// ascending element order over the p slots; first success wins.
bool match_x_side(const Matroid& m, int z, const std::vector<int>& elements,
                  const Counts& target, std::size_t at, std::vector<ElemSet>& slots) {
  if (at == elements.size()) return true;
  int v = elements[at];
  int need = target[static_cast<std::size_t>(v)];
  if (need == 0) return match_x_side(m, z, elements, target, at + 1, slots);

  int pn = static_cast<int>(slots.size());
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from, int left) -> bool {
    if (left == 0) return match_x_side(m, z, elements, target, at + 1, slots);
    for (int i = from; i <= pn - left; ++i) {
      ElemSet prev = slots[static_cast<std::size_t>(i)];
      ElemSet next = prev.with(v);
      if (!m.independent(next)) continue;
      slots[static_cast<std::size_t>(i)] = next;
      if (self(self, i + 1, left - 1)) return true;
      slots[static_cast<std::size_t>(i)] = prev;
    }
    return false;
  };
  return rec(rec, 0, need);
}

}  // namespace

DanglingWitness dangling_witness(const Matroid& m, const Matroid& n, int p, int q,
                                 const Limits& limits) {
  if (m.ground() != n.ground()) throw DomainError("matroids on different ground sets");
  if (p < 1 || p > q) throw DomainError("need 1 <= p <= q");
  if (nu11(m, n) == 0) throw DomainError("a dangling witness needs nu11 > 0");

  int nu = nu_pq(m, n, p, q, limits).value;
  std::vector<ElemSet> n_independent = n.complex().all_faces(limits);
  // all_faces sorts by (size, lex); re-sort lexicographically for the
  // promised enumeration order.
  std::sort(n_independent.begin(), n_independent.end(), LexLess{});
  std::vector<int> members = m.ground().to_vector();

  std::uint64_t visited = 0;
  int max_size = 0;
  for (ElemSet s : n_independent) max_size = std::max(max_size, s.size());

  for (int z : m.ground()) {
    if (!m.independent(ElemSet::single(z))) continue;  // X side needs z everywhere
    std::vector<ElemSet> y_tuple(static_cast<std::size_t>(q));
    DanglingWitness found;
    // Non-decreasing tuples of independent sets with total size exactly nu.
    auto rec = [&](auto&& self, int at, int from, int size_so_far) -> bool {
      if (++visited > limits.dangling_budget)
        throw ResourceError("dangling-witness search exceeds its budget");
      if (at == q) {
        if (size_so_far != nu) return false;
        Counts target = counts_of(y_tuple);
        bool feasible = true;
        for (int v : members)
          if (v != z && target[static_cast<std::size_t>(v)] > p) {
            feasible = false;
            break;
          }
        if (!feasible) return false;
        target[static_cast<std::size_t>(z)] = 0;  // only off-z multiplicities bind
        std::vector<ElemSet> slots(static_cast<std::size_t>(p), ElemSet::single(z));
        if (!match_x_side(m, z, members, target, 0, slots)) return false;
        found.x = slots;
        found.y = y_tuple;
        found.z = z;
        found.nu = nu;
        return true;
      }
      int slots_left = q - at;
      for (std::size_t i = static_cast<std::size_t>(from); i < n_independent.size(); ++i) {
        int size = n_independent[i].size();
        if (size_so_far + size > nu) continue;
        if (size_so_far + size + (slots_left - 1) * max_size < nu) continue;
        y_tuple[static_cast<std::size_t>(at)] = n_independent[i];
        if (self(self, at + 1, static_cast<int>(i), size_so_far + size)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0, 0)) return found;
  }
  throw TheoremViolationError("no dangling witness for p=" + std::to_string(p) +
                              " q=" + std::to_string(q) + " on " + m.describe() + " / " +
                              n.describe());
}

}  // namespace etanu

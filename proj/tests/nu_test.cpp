#include "doctest.h"

#include <algorithm>
#include <vector>

#include "etanu/corpus.hpp"
#include "etanu/errors.hpp"
#include "etanu/intersection.hpp"
#include "etanu/nu.hpp"

using namespace etanu;

namespace {

int objective(const std::vector<ElemSet>& a, const std::vector<ElemSet>& b, ElemSet ground) {
  int total = 0;
  for (int v : ground)
    total += std::min(multiplicity(v, a), multiplicity(v, b));
  return total;
}

// Brute force over all tuples of independent sets, not just bases.
int nu_oracle(const Matroid& m, const Matroid& n, int p, int q) {
  std::vector<ElemSet> mi, ni;
  for_each_subset(m.ground(), [&](ElemSet s) {
    if (m.independent(s)) mi.push_back(s);
    if (n.independent(s)) ni.push_back(s);
  });
  std::vector<ElemSet> a(p), b(q);
  int best = 0;
  auto walk_b = [&](auto&& self, int j) -> void {
    if (j == q) {
      best = std::max(best, objective(a, b, m.ground()));
      return;
    }
    for (ElemSet s : ni) {
      b[j] = s;
      self(self, j + 1);
    }
  };
  auto walk_a = [&](auto&& self, int i) -> void {
    if (i == p) {
      walk_b(walk_b, 0);
      return;
    }
    for (ElemSet s : mi) {
      a[i] = s;
      self(self, i + 1);
    }
  };
  walk_a(walk_a, 0);
  return best;
}

void check_witness(const Matroid& m, const Matroid& n, int p, int q, const NuResult& r) {
  CHECK(static_cast<int>(r.a.size()) == p);
  CHECK(static_cast<int>(r.b.size()) == q);
  for (ElemSet s : r.a) CHECK(m.independent(s));
  for (ElemSet s : r.b) CHECK(n.independent(s));
  CHECK(objective(r.a, r.b, m.ground()) == r.value);
}

}  // namespace

TEST_CASE("multiplicity counts containing sets") {
  std::vector<ElemSet> sets = {ElemSet::of({0, 1}), ElemSet::single(1), ElemSet()};
  CHECK(multiplicity(0, sets) == 1);
  CHECK(multiplicity(1, sets) == 2);
  CHECK(multiplicity(5, sets) == 0);
}

TEST_CASE("base-tuple search equals the all-independent-tuples oracle") {
  // The search restricts to bases; enlarging a set never lowers the
  // objective, so the values must agree with the unrestricted brute force.
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    int ground = 3 + static_cast<int>(seed % 2);
    Matroid m = random_matroid(seed * 2, ground);
    Matroid n = random_matroid(seed * 2 + 1, ground);
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}})
      CHECK(nu_pq(m, n, p, q).value == nu_oracle(m, n, p, q));
  }
}

TEST_CASE("tuple value at one-one is the matroid intersection number") {
  for (const auto& entry : Corpus::standard().pairs) {
    if (entry.m.ground().size() > 6) continue;
    NuResult r = nu_pq(entry.m, entry.n, 1, 1);
    CHECK(r.value == nu11(entry.m, entry.n));
    check_witness(entry.m, entry.n, 1, 1, r);
  }
}

TEST_CASE("hand values on uniform pairs") {
  Matroid f4 = Matroid::free_matroid(4);
  Matroid u42 = Matroid::uniform(4, 2);
  CHECK(nu_pq(f4, f4, 2, 2).value == 8);
  CHECK(nu_pq(f4, u42, 2, 2).value == 4);
  CHECK(nu_pq(f4, u42, 1, 2).value == 4);  // two bases of u42 can cover the ground
  CHECK(nu_pq(f4, u42, 2, 1).value == 2);
  check_witness(f4, u42, 2, 1, nu_pq(f4, u42, 2, 1));
}

TEST_CASE("equalized witness balances every element") {
  for (const auto& entry : Corpus::standard().pairs) {
    if (entry.m.ground().size() > 5) continue;
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
      NuResult full = nu_pq(entry.m, entry.n, p, q);
      NuResult eq = equalized_witness(entry.m, entry.n, p, q);
      CHECK(eq.value == full.value);
      check_witness(entry.m, entry.n, p, q, eq);
      int size_a = 0, size_b = 0;
      for (ElemSet s : eq.a) size_a += s.size();
      for (ElemSet s : eq.b) size_b += s.size();
      CHECK(size_a == eq.value);
      CHECK(size_b == eq.value);
      for (int v : entry.m.ground())
        CHECK(multiplicity(v, eq.a) == multiplicity(v, eq.b));
    }
  }
}

TEST_CASE("monotone under enlarging matroids and tuples") {
  Matroid u42 = Matroid::uniform(4, 2);
  Matroid u43 = Matroid::uniform(4, 3);
  Matroid f4 = Matroid::free_matroid(4);
  MonotoneReport grow_m = check_monotone(u42, u42, u43, f4, 1, 1, 1, 1);
  CHECK(grow_m.holds);
  CHECK(grow_m.nu_small == 2);
  CHECK(grow_m.nu_large == 3);
  MonotoneReport grow_pq = check_monotone(u42, u42, u42, u42, 1, 1, 2, 2);
  CHECK(grow_pq.holds);
  CHECK(grow_pq.nu_small <= grow_pq.nu_large);
}

TEST_CASE("repeated-tuple bound") {
  Matroid f3 = Matroid::free_matroid(3);
  NuqqReport rep = check_nuqq_bound(f3, f3, 2);
  CHECK(rep.nu_11 == 3);
  CHECK(rep.nu_qq == 6);
  CHECK(rep.holds);
  CHECK(rep.tight);
  for (const auto& entry : Corpus::standard().pairs) {
    if (entry.m.ground().size() > 5) continue;
    NuqqReport r = check_nuqq_bound(entry.m, entry.n, 3);
    CHECK(r.holds);
    CHECK(r.nu_qq <= 3 * r.nu_11);
  }
}

TEST_CASE("dangling witness structure") {
  Matroid u12 = Matroid::uniform(2, 1);
  DanglingWitness w = dangling_witness(u12, u12, 1, 2);
  CHECK(static_cast<int>(w.x.size()) == 1);
  CHECK(static_cast<int>(w.y.size()) == 2);
  CHECK(w.nu == nu_pq(u12, u12, 1, 2).value);
  CHECK(w.z >= 0);
  int y_total = 0;
  for (ElemSet s : w.y) {
    CHECK(u12.independent(s));
    y_total += s.size();
  }
  CHECK(y_total == w.nu);
  for (ElemSet s : w.x) {
    CHECK(u12.independent(s));
    CHECK(s.contains(w.z));
  }
  for (int v : u12.ground())
    if (v != w.z) CHECK(multiplicity(v, w.x) == multiplicity(v, w.y));

  CHECK_THROWS_AS(dangling_witness(u12, u12, 2, 1), DomainError);
  CHECK_THROWS_AS(dangling_witness(u12, u12, 0, 1), DomainError);
}

TEST_CASE("budget guards raise instead of degrading") {
  Limits tiny;
  tiny.nu_budget = 1;
  Matroid u = Matroid::uniform(4, 2);
  CHECK_THROWS_AS(nu_pq(u, u, 2, 2, tiny), ResourceError);
  Limits tiny2;
  tiny2.dangling_budget = 0;
  CHECK_THROWS_AS(dangling_witness(u, u, 1, 1, tiny2), ResourceError);
}

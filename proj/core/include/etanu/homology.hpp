#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "etanu/complex.hpp"
#include "etanu/limits.hpp"
#include "etanu/rational.hpp"

namespace etanu {

// Coefficients for homology: the rationals or a prime field.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  static CoefficientField gf(int p);

  bool is_rationals() const { return p_ == 0; }
  int prime() const { return p_; }
  std::string to_string() const { return p_ == 0 ? "q" : "gf" + std::to_string(p_); }
  bool operator==(const CoefficientField&) const = default;

  static CoefficientField parse(const std::string& text);

 private:
  explicit CoefficientField(int p) : p_(p) {}
  int p_;  // 0 means the rationals
};

// The homological connectivity index: a non-negative integer or infinity.
// Infinity absorbs addition and wins every max.
class EtaValue {
 public:
  constexpr EtaValue() : k_(0) {}
  constexpr explicit EtaValue(int k) : k_(k) {}
  static constexpr EtaValue infinity() { return EtaValue(kInf); }

  constexpr bool is_infinite() const { return k_ == kInf; }
  // Only valid on finite values.
  constexpr int finite() const { return k_; }

  constexpr EtaValue operator+(int bonus) const {
    return is_infinite() ? *this : EtaValue(k_ + bonus);
  }

  constexpr bool operator==(const EtaValue&) const = default;
  constexpr bool operator<(EtaValue o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return k_ < o.k_;
  }
  constexpr bool operator<=(EtaValue o) const { return *this < o || *this == o; }
  constexpr bool operator>(EtaValue o) const { return o < *this; }
  constexpr bool operator>=(EtaValue o) const { return o <= *this; }

  // Comparison against an exact rational, for bounds of the form eta >= r.
  bool at_least(const Frac& r) const {
    return is_infinite() || Frac(k_) >= r;
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(k_); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int k_;
};

inline EtaValue min(EtaValue a, EtaValue b) { return a < b ? a : b; }
inline EtaValue max(EtaValue a, EtaValue b) { return a < b ? b : a; }

// Reduced Betti numbers with the augmented convention: profile[0] is the
// Betti number in degree -1, profile[k+1] the one in degree k.  The void
// complex has an empty profile; {{}} has profile [1].
struct BettiProfile {
  std::vector<std::int64_t> numbers;

  std::int64_t in_degree(int k) const {
    std::size_t i = static_cast<std::size_t>(k + 1);
    return i < numbers.size() ? numbers[i] : 0;
  }
  bool all_zero() const {
    for (auto b : numbers)
      if (b != 0) return false;
    return true;
  }
  bool operator==(const BettiProfile&) const = default;
  std::string to_string() const;
};

// The boundary map from k-chains to (k-1)-chains of the augmented complex.
// Rows are the (k-1)-faces, columns the k-faces, both in lexicographic order;
// the entry for dropping the i-th smallest vertex is (-1)^i, reduced mod p
// over a prime field.  k = 0 maps vertices onto the empty face; k = dim + 1
// has no columns.
struct BoundaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> entries;  // row-major
  CoefficientField field = CoefficientField::rationals();

  std::int64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k,
                               CoefficientField field = CoefficientField::rationals(),
                               const Limits& limits = Limits{});

// Exact rank of a boundary matrix over its field: fraction-free elimination
// over the rationals, Gaussian elimination over GF(p).
int matrix_rank(const BoundaryMatrix& m);

BettiProfile reduced_betti(const SimplicialComplex& c,
                           CoefficientField field = CoefficientField::rationals(),
                           const Limits& limits = Limits{});

// The least k such that homology in degree k-1 is non-zero; infinity when the
// complex is acyclic.  The void complex and {{}} both get 0.
EtaValue eta(const SimplicialComplex& c,
             CoefficientField field = CoefficientField::rationals(),
             const Limits& limits = Limits{});

// max over non-empty subsets s of |s| / eta(c[s]), with |s|/infinity = 0.
// Requires every ground element to lie in a face, which forces every
// restriction to have eta >= 1.
struct DeltaEtaResult {
  Frac value;
  ElemSet witness;  // a subset attaining the maximum
};
DeltaEtaResult delta_eta(const SimplicialComplex& c,
                         CoefficientField field = CoefficientField::rationals(),
                         const Limits& limits = Limits{});

// eta(join(c, d)) >= eta(c) + eta(d); ground sets must be disjoint.
struct JoinSuperadditivityReport {
  EtaValue eta_c, eta_d, eta_join;
  bool holds = false;
  bool tight = false;  // equality, infinity included
  std::string to_string() const;
};
JoinSuperadditivityReport check_join_superadditivity(const SimplicialComplex& c,
                                                     const SimplicialComplex& d,
                                                     CoefficientField field,
                                                     const Limits& limits = Limits{});

// The three inequalities tying eta of a union, an intersection and the parts
// (complexes on one ground set):
//   (1) eta(A | B) >= min(eta A, eta B, eta(A & B) + 1)
//   (2) eta(A & B) >= min(eta A, eta B, eta(A | B) - 1)
//   (3) eta(A)     >= min(eta(A | B), eta(A & B))
struct MayerVietorisReport {
  EtaValue eta_a, eta_b, eta_union, eta_intersection;
  bool holds1 = false, holds2 = false, holds3 = false;
  bool tight1 = false, tight2 = false, tight3 = false;
  bool all_hold() const { return holds1 && holds2 && holds3; }
  std::string to_string() const;
};
MayerVietorisReport check_mayer_vietoris(const SimplicialComplex& a, const SimplicialComplex& b,
                                         CoefficientField field, const Limits& limits = Limits{});

}  // namespace etanu

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etanu/complex.hpp"
#include "etanu/hypergraph.hpp"
#include "etanu/matroid.hpp"

namespace etanu {

// Deterministic pseudo-random generation.  The engine is a fixed-constant
// 64-bit mix sequence so instances are identical across compilers and
// standard libraries for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  // Bernoulli with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::uint64_t state_;
};

// The element-permutation images of a structure, used by relabeling-
// invariance tests.
std::vector<int> random_permutation(Rng& rng, int n);
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

// Random instances.  All are deterministic functions of their arguments.
enum class MatroidKind { Uniform, Partition, Graphic, Mixed };
Matroid random_matroid(std::uint64_t seed, int n, MatroidKind kind = MatroidKind::Mixed);

// density in [0,1]: each subset joins the generating family with probability
// density^|subset|, so density 1 is the full simplex and 0 keeps only the
// empty face.
SimplicialComplex random_complex(std::uint64_t seed, int n, double density);

Hypergraph random_hypergraph(std::uint64_t seed, int n, int edge_count, int max_arity);

// The parallel-extension family on a 4-cycle: sides 0-1 and 2-3 get p
// parallel edges, sides 1-2 and 3-0 get q.  M bounds the edges at the two
// even corners, N at the two odd corners; their common independent sets are
// exactly the matchings.
struct TightnessInstance {
  Matroid m, n;
  Multigraph graph;
  int p = 0, q = 0;
};
TightnessInstance tightness_example(int p, int q);

// The curated instance families the verification suites iterate.
struct Corpus {
  struct MatroidEntry {
    std::string name;
    Matroid m;
  };
  struct PairEntry {
    std::string name;
    Matroid m, n;
  };
  struct ComplexEntry {
    std::string name;
    SimplicialComplex c;
    // Complexes whose rational and GF(2) connectivity are known to differ.
    bool field_sensitive = false;
  };
  struct HypergraphEntry {
    std::string name;
    Hypergraph h;
  };

  std::vector<MatroidEntry> matroids;
  std::vector<PairEntry> pairs;
  std::vector<ComplexEntry> complexes;
  std::vector<HypergraphEntry> hypergraphs;

  static const Corpus& standard();
};

}  // namespace etanu

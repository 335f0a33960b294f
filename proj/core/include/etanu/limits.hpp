#pragma once

#include <cstddef>
#include <cstdint>

namespace etanu {

// Budgets for the exhaustive computations.  Everything here is a guard, not a
// tuning knob: exceeding a budget raises ResourceError instead of degrading
// the answer.
struct Limits {
  // Maximum number of faces a complex may have before homology refuses.
  std::size_t max_faces = std::size_t{1} << 20;

  // Subset enumerations (independence complexes, circuits, covers) refuse
  // ground sets larger than this.
  int max_enumeration_ground = 20;

  // delta_eta enumerates all restrictions; its ground cap.
  int max_delta_ground = 16;

  // List-coloring enumeration caps.
  int max_chi_list_ground = 6;
  int max_chi_list_k = 3;

  // Game recursion refuses hypergraphs with more vertices than this.
  int max_game_vertices = 12;

  // Cap on bases(M)^p * bases(N)^q before the tuple search refuses.
  std::uint64_t nu_budget = 10'000'000;

  // Cap on enumerated tuples in the dangling-witness search.
  std::uint64_t dangling_budget = 10'000'000;
};

}  // namespace etanu

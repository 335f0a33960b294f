#pragma once

#include <cstdint>
#include <vector>

namespace etanu::linalg {

// Rank over the rationals of an integer matrix (row-major), by fraction-free
// Bareiss elimination in arbitrary precision.
int rational_rank(const std::vector<std::int64_t>& entries, int rows, int cols);

// Rank over GF(p) of a matrix whose entries are already reduced mod p.
int gf_rank(const std::vector<std::int64_t>& entries, int rows, int cols, int p);

}  // namespace etanu::linalg

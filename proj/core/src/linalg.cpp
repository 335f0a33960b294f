#include "linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace etanu::linalg {

using boost::multiprecision::cpp_int;

int rational_rank(const std::vector<std::int64_t>& entries, int rows, int cols) {
  std::vector<cpp_int> a(entries.begin(), entries.end());
  auto at = [&](int r, int c) -> cpp_int& { return a[static_cast<std::size_t>(r) * cols + c]; };

  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    // Bareiss step: the division by the previous pivot is exact.
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        at(r, c) = (at(r, c) * at(rank, col) - at(r, col) * at(rank, c)) / prev;
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

int gf_rank(const std::vector<std::int64_t>& entries, int rows, int cols, int p) {
  std::vector<std::int64_t> a = entries;
  auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r) * cols + c]; };
  auto inv = [p](std::int64_t x) {
    // Fermat inverse; p is a small prime.
    std::int64_t result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    std::int64_t scale = inv((at(rank, col) % p + p) % p);
    for (int c = col; c < cols; ++c) at(rank, c) = ((at(rank, c) % p + p) % p) * scale % p;
    for (int r = rank + 1; r < rows; ++r) {
      std::int64_t f = (at(r, col) % p + p) % p;
      if (f == 0) continue;
      for (int c = col; c < cols; ++c)
        at(r, c) = ((at(r, c) - f * at(rank, c)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace etanu::linalg

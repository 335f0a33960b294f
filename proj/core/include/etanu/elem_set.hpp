#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace etanu {

// A set of ground elements 0..63, stored as a bitmask.  Ground sets shrink
// under minors without renumbering, so an element keeps its identity for the
// lifetime of a computation; only the I/O layer maps labels.
class ElemSet {
 public:
  static constexpr int kMaxElements = 64;

  constexpr ElemSet() : bits_(0) {}

  static constexpr ElemSet from_bits(std::uint64_t bits) { return ElemSet(bits); }

  static ElemSet of(std::initializer_list<int> elems) {
    ElemSet s;
    for (int v : elems) s = s.with(v);
    return s;
  }

  static ElemSet single(int v) { return ElemSet().with(v); }

  // {0, 1, ..., n-1}
  static ElemSet universe(int n) {
    assert(n >= 0 && n <= kMaxElements);
    if (n == 0) return ElemSet();
    if (n == kMaxElements) return ElemSet(~std::uint64_t{0});
    return ElemSet((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int v) const {
    return v >= 0 && v < kMaxElements && (bits_ >> v & 1) != 0;
  }
  constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElemSet o) const { return (bits_ & o.bits_) != 0; }

  ElemSet with(int v) const {
    assert(v >= 0 && v < kMaxElements);
    return ElemSet(bits_ | std::uint64_t{1} << v);
  }
  ElemSet without(int v) const {
    assert(v >= 0 && v < kMaxElements);
    return ElemSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }
  constexpr ElemSet operator^(ElemSet o) const { return ElemSet(bits_ ^ o.bits_); }
  constexpr bool operator==(const ElemSet&) const = default;

  int min_element() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  int max_element() const {
    assert(bits_ != 0);
    return kMaxElements - 1 - std::countl_zero(bits_);
  }

  // Iterates elements in increasing order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

 private:
  explicit constexpr ElemSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_;
};

// Lexicographic order on sets viewed as increasing element sequences, e.g.
// {1} < {1,2} < {1,3} < {2}.  This is the iteration order used everywhere a
// deterministic witness is promised.
inline bool lex_less(ElemSet a, ElemSet b) {
  if (a == b) return false;
  std::uint64_t diff = a.bits() ^ b.bits();
  int e = std::countr_zero(diff);
  // The sequences agree strictly below e; the set owning e continues with e,
  // the other either stops (strict prefix, hence smaller) or jumps past e.
  bool e_in_a = a.contains(e);
  std::uint64_t tail_of_other = (e_in_a ? b : a).bits() >> e;
  return e_in_a ? tail_of_other != 0 : tail_of_other == 0;
}

struct LexLess {
  bool operator()(ElemSet a, ElemSet b) const { return lex_less(a, b); }
};

// All subsets of `space`, empty set first, in submask order (not lex).
template <typename F>
void for_each_subset(ElemSet space, F&& fn) {
  std::uint64_t full = space.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElemSet::from_bits(sub));
    if (sub == full) break;
    sub = (sub - full) & full;  // next submask of full after sub
  }
}

// Maps subsets of a (possibly sparse) space to dense indices 0..2^|space|-1
// and back, so per-subset tables stay flat arrays.
class SubsetIndexer {
 public:
  explicit SubsetIndexer(ElemSet space) : space_(space), members_(space.to_vector()) {}

  std::size_t count() const { return std::size_t{1} << members_.size(); }
  ElemSet space() const { return space_; }

  std::size_t index_of(ElemSet s) const {
    assert(s.subset_of(space_));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (s.contains(members_[i])) idx |= std::size_t{1} << i;
    return idx;
  }

  ElemSet set_at(std::size_t idx) const {
    ElemSet s;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (idx >> i & 1) s = s.with(members_[i]);
    return s;
  }

 private:
  ElemSet space_;
  std::vector<int> members_;
};

}  // namespace etanu

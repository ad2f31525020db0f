#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tverberg {

// Small subset of {0,...,31}; holds ray index sets and supports.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }
  static IndexSet full(int n) {
    IndexSet s;
    s.bits_ = n >= 32 ? ~0u : (1u << n) - 1u;
    return s;
  }

  void insert(int i) { bits_ |= 1u << i; }
  void erase(int i) { bits_ &= ~(1u << i); }
  bool contains(int i) const { return (bits_ >> i) & 1u; }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(const IndexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool proper_subset_of(const IndexSet& o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  friend IndexSet operator&(IndexSet a, IndexSet b) {
    a.bits_ &= b.bits_;
    return a;
  }
  friend IndexSet operator|(IndexSet a, IndexSet b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend IndexSet difference(IndexSet a, IndexSet b) {
    a.bits_ &= ~b.bits_;
    return a;
  }

  bool operator==(const IndexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  std::uint32_t bits() const { return bits_; }

private:
  std::uint32_t bits_ = 0;
};

}  // namespace tverberg

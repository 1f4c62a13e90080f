#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace diamond {

// Subset of {0, ..., 63} stored as a bit mask.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> xs) {
    for (int x : xs) insert(x);
  }
  static IndexSet from_bits(std::uint64_t b) {
    IndexSet s;
    s.bits_ = b;
    return s;
  }
  // Closed interval [lo, hi]; empty when hi < lo.
  static IndexSet range(int lo, int hi) {
    IndexSet s;
    for (int x = lo; x <= hi; ++x) s.insert(x);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int x) const { return x >= 0 && x < 64 && ((bits_ >> x) & 1U); }
  void insert(int x) { bits_ |= std::uint64_t{1} << x; }
  void erase(int x) { bits_ &= ~(std::uint64_t{1} << x); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  int min() const { return std::countr_zero(bits_); }
  int max() const { return 63 - std::countl_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  // k-th smallest element, 0-based.
  int nth(int k) const {
    std::uint64_t b = bits_;
    for (int i = 0; i < k; ++i) b &= b - 1;
    return std::countr_zero(b);
  }
  IndexSet with(int x) const {
    IndexSet s = *this;
    s.insert(x);
    return s;
  }
  IndexSet without(int x) const {
    IndexSet s = *this;
    s.erase(x);
    return s;
  }

  friend IndexSet operator|(IndexSet a, IndexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend IndexSet operator-(IndexSet a, IndexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(IndexSet, IndexSet) = default;
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace diamond

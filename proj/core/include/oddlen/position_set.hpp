#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace oddlen {

/// Set of 1-based positions, typically a subset of [n-1] for an ambient n.
/// Backed by a bitmask: element i occupies bit i, so elements range over
/// [1, kMaxElement]. Bit 0 is never used.
class PositionSet {
 public:
  static constexpr int kMaxElement = 31;

  PositionSet() = default;
  PositionSet(std::initializer_list<int> elements);

  static PositionSet from_mask(std::uint32_t mask);
  /// All integers in [lo, hi]; empty when lo > hi.
  static PositionSet range(int lo, int hi);

  bool contains(int i) const {
    return i >= 1 && i <= kMaxElement && ((mask_ >> i) & 1u) != 0;
  }
  void insert(int i);
  void erase(int i);

  bool empty() const { return mask_ == 0; }
  int size() const;
  int min() const;  // set must be nonempty
  int max() const;  // set must be nonempty

  std::uint32_t mask() const { return mask_; }
  std::vector<int> elements() const;  // increasing order

  /// {i+1 : i in set}
  PositionSet shifted_up() const;
  /// {i-1 : i in set, i >= 2}
  PositionSet shifted_down() const;

  /// Every element of this set is an element of other.
  bool subset_of(const PositionSet& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  friend PositionSet operator|(PositionSet a, PositionSet b);
  friend PositionSet operator&(PositionSet a, PositionSet b);
  /// Set difference.
  friend PositionSet operator-(PositionSet a, PositionSet b);

  bool operator==(const PositionSet&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Closed integer interval [lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

/// Maximal runs of consecutive elements, in increasing order.
/// {1,7,8,9} -> [1,1], [7,9]; the empty set has no components.
std::vector<Interval> connected_components(const PositionSet& s);

std::string to_string(const PositionSet& s);  // "{1,3,5}", "{}"
std::string to_string(const Interval& iv);    // "[7,9]"

}  // namespace oddlen

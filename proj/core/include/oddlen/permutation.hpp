#pragma once

#include <string>
#include <vector>

#include "oddlen/position_set.hpp"

namespace oddlen {

/// A permutation of [n] in one-line notation. Positions and values are both
/// 1-based; the parity conditions in the statistics below depend on that.
class Permutation {
 public:
  /// one_line[i-1] is the image of position i; must be a bijection of [n], n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int position) const { return values_[position - 1]; }
  const std::vector<int>& one_line() const { return values_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// The order-reversing permutation i -> n+1-i.
Permutation longest_element(int n);

/// (p . q)(i) = p(q(i)); sizes must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// Number of inversions: pairs i < j with p(i) > p(j). This is the Coxeter
/// length with respect to the adjacent transpositions.
int inv_length(const Permutation& p);

/// Number of inversions whose two positions have opposite parity.
int odd_length(const Permutation& p);

/// Positions i in [n-1] with p(i) > p(i+1).
PositionSet descent_set(const Permutation& p);

enum class ChessboardClass { EvenChessboard, OddChessboard, NotChessboard };

/// EvenChessboard when i + p(i) is even for every i, OddChessboard when it is
/// odd for every i, NotChessboard otherwise. OddChessboard is impossible for
/// odd n.
ChessboardClass chessboard_class(const Permutation& p);

std::string to_string(const Permutation& p);  // "3 4 1 2"

}  // namespace oddlen

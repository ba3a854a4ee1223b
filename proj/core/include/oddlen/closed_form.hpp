#pragma once

#include <string>
#include <vector>

#include "oddlen/class_spec.hpp"
#include "oddlen/laurent.hpp"

namespace oddlen {

/// Subpopulation of S_n a signed sum ranges over. The chessboard populations
/// are the permutations whose position-value sums are all even (ChessEven) or
/// all odd (ChessOdd); ChessAll is their union.
enum class Population { FullSn, ChessEven, ChessOdd, ChessAll };

/// Per-component weights of an unmixed class, the quantities the product
/// formulas are built from. A component of size s contributes ceil(s/2).
struct UnmixedShape {
  std::vector<int> ascent_weights;
  std::vector<int> descent_weights;
  int ascent_weight_sum = 0;
  int descent_weight_sum = 0;
  int weight_sum = 0;          // ascent_weight_sum + descent_weight_sum
  int half_n = 0;              // floor(n/2)
  int descent_square_sum = 0;  // sum of squared descent weights
};

/// Throws std::invalid_argument (naming the violated clause) on mixed input.
UnmixedShape shape_of(const ClassSpec& c);

/// Signed generating function of the odd length over a quotient-type class
/// (forced ascents only, no forced descents) restricted to one chessboard
/// population. pop must be ChessEven or ChessOdd; ChessOdd with odd n is a
/// domain error since that population is empty.
SignedPoly quotient_formula(int n, const PositionSet& ascents, Population pop);

/// Signed generating function over the full S_n for an unmixed class, as a
/// closed product. The balanced branch (weights filling n/2 exactly) divides
/// by [weight_sum] at q = x^2 via exact_div.
SignedPoly unmixed_formula(const ClassSpec& c);

/// Signed generating function over one chessboard population for an unmixed
/// class. pop must be ChessEven or ChessOdd. ChessOdd with odd n gives the
/// zero polynomial (empty population).
SignedPoly chessboard_formula(const ClassSpec& c, Population pop);

enum class AlternatingKind {
  Alternating,         // p(1) > p(2) < p(3) > ...
  ReverseAlternating,  // p(1) < p(2) > p(3) < ...
};

/// Signed generating function over the alternating or reverse-alternating
/// permutations of S_n: zero for odd n; (-x)^{n/2} respectively
/// x^{(n/2)(n/2-1)} for even n.
SignedPoly alternating_formula(int n, AlternatingKind kind);

std::string to_string(Population pop);  // "sn", "cn+", "cn-", "cn"

}  // namespace oddlen

#pragma once

#include "oddlen/class_spec.hpp"
#include "oddlen/laurent.hpp"

namespace oddlen {

/// How chessboard populations correspond across a transform.
enum class PopulationMap { Identity, SwapEvenOdd };

/// A rewritten class together with the exact relation between the signed
/// generating functions of the old and new classes:
///
///   gf(old) = factor * (reciprocal ? gf(new) with x -> 1/x : gf(new))
///
/// factor is always a single signed monomial. population_map states which
/// chessboard population of the new class corresponds to each population of
/// the old one when the relation is restricted to chessboard permutations.
struct TransformResult {
  ClassSpec new_spec;
  SignedPoly factor;
  bool reciprocal = false;
  PopulationMap population_map = PopulationMap::Identity;
  /// True when the relation is conjectural (checked computationally, not
  /// proved). Callers must not treat such results as established identities.
  bool conjectural = false;
};

/// Moves the odd-size forced-ascent run [i, i+2k] to [i+1, i+2k+1].
/// Preconditions: [i, i+2k] is a connected component of the forced positions
/// and lies inside the ascents; i+2k+1 <= n-1; position i+2k+2 is not forced
/// (positions beyond n-1 count as absent). The generating functions over S_n
/// are equal (factor 1), and remain equal when the moved endpoint is kept as
/// well, i.e. with ascents | {i+2k+1}.
TransformResult shift_right_ascent(const ClassSpec& c, int i, int k);

/// Mirror image: moves the forced-ascent run [i+1, i+2k+1] to [i, i+2k].
/// Requires i >= 1 and position i-1 not forced (0 counts as absent).
TransformResult shift_left_ascent(const ClassSpec& c, int i, int k);

/// Same rewrites for a forced-descent run.
TransformResult shift_right_descent(const ClassSpec& c, int i, int k);
TransformResult shift_left_descent(const ClassSpec& c, int i, int k);

/// Turns an even-size forced-descent component comp = [lo, lo+2k-1] into
/// forced ascents. factor is (-1)^k x^{k(k+1)}. The relation holds over S_n
/// and over each chessboard population separately (population map identity).
TransformResult reverse_descent_component(const ClassSpec& c, Interval comp);

/// Swaps the roles of ascents and descents. factor is
/// (-1)^{n(n-1)/2} x^{floor(n/2) ceil(n/2)} and the new generating function is
/// taken at 1/x. For even n the chessboard populations swap; for odd n they
/// are preserved.
TransformResult complement(const ClassSpec& c);

/// Conjectured generalization of the shifts to a component [i, i+2k] that may
/// mix forced ascents and descents: every forced position in the component
/// moves up by one. Same preconditions as shift_right_ascent apart from the
/// containment requirement. The result is flagged conjectural.
TransformResult conjectured_mixed_shift(const ClassSpec& c, int i, int k);

}  // namespace oddlen

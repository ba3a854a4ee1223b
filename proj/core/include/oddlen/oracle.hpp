#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "oddlen/class_spec.hpp"
#include "oddlen/closed_form.hpp"
#include "oddlen/laurent.hpp"

namespace oddlen {

/// Largest n the factorial enumerations accept by default. Overridable per
/// call; meant to keep accidental huge enumerations from hanging a session.
inline constexpr int kDefaultEnumerationCap = 11;

struct BuildOptions {
  int cap = kDefaultEnumerationCap;
  /// 0 picks a thread count automatically; 1 forces sequential enumeration.
  unsigned threads = 0;
};

/// Signed generating functions of the odd length bucketed by exact descent
/// set, from one pass over S_n. Each bucket holds the sum over the
/// permutations with exactly that descent set, for the full population and
/// for the two chessboard subpopulations (sub-sums of the bucket, not a
/// partition of it). Any descent-class query is then a union of buckets.
class BucketTable {
 public:
  int n() const { return n_; }

  /// Bucket entry for the permutations whose descent set is exactly
  /// exact_descents. pop must be FullSn, ChessEven or ChessOdd.
  const SignedPoly& cell(const PositionSet& exact_descents, Population pop) const;

  /// Number of permutations in the bucket.
  long long permutation_count(const PositionSet& exact_descents) const;

  /// Sum of all bucket counts; always n!.
  long long total_permutations() const { return total_; }

  friend BucketTable build_bucket_table(int n, const BuildOptions& options);
  friend SignedPoly signed_poly(const ClassSpec& c, Population pop,
                                const BucketTable* table);

 private:
  explicit BucketTable(int n);
  std::size_t index_of(std::uint32_t descent_mask) const;

  int n_ = 0;
  std::vector<std::array<SignedPoly, 3>> cells_;  // FullSn, ChessEven, ChessOdd
  std::vector<long long> counts_;
  long long total_ = 0;
};

/// Enumerates S_n once and builds the bucket table. The enumeration is
/// partitioned by the first entry of the permutation; partitions may run on
/// several threads and are merged in a fixed order, so the result does not
/// depend on the thread count. Throws std::invalid_argument when n exceeds
/// the cap.
BucketTable build_bucket_table(int n, const BuildOptions& options = {});

/// Signed generating function sum_p (-1)^{inv_length(p)} x^{odd_length(p)}
/// over the members of c drawn from pop. With a table, queries sum the
/// buckets between the forced descents and the complement of the forced
/// ascents; without one, S_n is enumerated afresh and filtered through
/// membership. Both paths agree. The table's n must match c.
SignedPoly signed_poly(const ClassSpec& c, Population pop,
                       const BucketTable* table = nullptr);

/// Unsigned distribution sum_p x^{odd_length(p)} over all of S_n.
SignedPoly distribution(int n, int cap = kDefaultEnumerationCap);

}  // namespace oddlen

#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "oddlen/oracle.hpp"

namespace oddlen {

/// One mismatch found by a scan. `expected` is the value the identity or
/// conjecture under test predicts; `actual` is what direct enumeration found.
struct ScanFailure {
  std::string case_desc;
  SignedPoly expected;
  SignedPoly actual;
  bool operator==(const ScanFailure&) const = default;
};

enum class Verdict { Pass, Fail, ConjectureConsistent };

/// Outcome of one verification sweep. Reports are deterministic for a given
/// n apart from `elapsed`: cases are enumerated in a fixed order (every
/// assignment of each position in [n-1] to ascent/descent/free) and failures
/// are sorted before the report is returned. `observations` records findings
/// that are data rather than errors, e.g. classes whose signed sum vanishes
/// without the sufficient condition holding.
struct ScanReport {
  std::string suite;
  int n = 0;
  long long cases_checked = 0;
  std::vector<ScanFailure> failures;
  std::vector<std::string> observations;
  std::chrono::duration<double> elapsed{0};
  Verdict verdict = Verdict::Pass;
};

std::string to_string(Verdict v);  // "pass", "fail", "conjecture-consistent"

/// Every unmixed class of the table's n: closed product formula over the full
/// S_n versus the bucketed oracle.
ScanReport scan_theorem_main(const BucketTable& table);

/// Every unmixed class, both chessboard populations: chessboard closed form
/// versus the oracle.
ScanReport scan_theorem_chessboard(const BucketTable& table);

/// Every forced-ascent set with no forced descents: quotient closed form
/// versus the oracle. For odd n the odd-chessboard population is instead
/// checked to be empty.
ScanReport scan_quotients(const BucketTable& table);

/// Every class where the vanishing condition holds: oracle must be zero.
/// Classes with a zero oracle but a false condition are logged as
/// observations, not failures (the condition is not necessary).
ScanReport scan_zero_condition(const BucketTable& table);

/// Every qualifying application of the shift, reverse and complement
/// transforms on every class: relation versus the oracle. Shift checks
/// include the three-way variant that keeps the vacated endpoint forced, and
/// the corollary that a component of ascents closed off by one forced descent
/// makes the signed sum vanish. Complement checks include the chessboard
/// population correspondence.
ScanReport scan_transforms(const BucketTable& table);

/// Alternating and reverse-alternating classes versus their closed forms.
/// Requires n >= 2.
ScanReport scan_alternating(const BucketTable& table);

/// Conjectured mixed shift on every qualifying mixed component. Verdict is
/// ConjectureConsistent when no counterexample appears.
ScanReport check_mixed_shift_conjecture(const BucketTable& table);

/// Symmetry (must hold) and unimodality of the odd-length distribution for
/// 3 <= n <= n_max. Non-unimodality at n = 4 is recorded as an observation;
/// any other non-unimodal n is a conjecture counterexample.
ScanReport check_unimodality(int n_max, int cap = kDefaultEnumerationCap);

}  // namespace oddlen

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddlen {

/// Sparse Laurent polynomial in one variable with exact 64-bit integer
/// coefficients. Zero coefficients are never stored, so structural equality is
/// polynomial equality. All coefficient arithmetic is overflow-checked and
/// throws std::overflow_error instead of wrapping.
class SignedPoly {
 public:
  using TermMap = std::map<int, long long>;

  SignedPoly() = default;  // the zero polynomial

  static SignedPoly constant(long long value);
  static SignedPoly monomial(long long coefficient, int exponent);
  /// Builds from (exponent, coefficient) pairs; duplicates are summed and zero
  /// coefficients dropped, so the result is canonical.
  static SignedPoly from_terms(const std::vector<std::pair<int, long long>>& terms);

  bool is_zero() const { return terms_.empty(); }
  long long coefficient(int exponent) const;
  int min_exponent() const;  // nonzero polynomial only
  int max_exponent() const;  // nonzero polynomial only
  const TermMap& terms() const { return terms_; }

  SignedPoly operator-() const;
  SignedPoly& operator+=(const SignedPoly& rhs);
  SignedPoly& operator-=(const SignedPoly& rhs);
  friend SignedPoly operator+(SignedPoly lhs, const SignedPoly& rhs);
  friend SignedPoly operator-(SignedPoly lhs, const SignedPoly& rhs);
  friend SignedPoly operator*(const SignedPoly& lhs, const SignedPoly& rhs);

  bool operator==(const SignedPoly&) const = default;

  /// Substitute x -> 1/x, negating every exponent.
  SignedPoly reciprocal() const;

  /// Sum of all coefficients (the value at x = 1).
  long long value_at_one() const;

  /// Coefficient sequence is palindromic over the support range.
  /// The zero polynomial counts as symmetric.
  bool is_symmetric() const;

  /// Coefficients weakly rise then weakly fall over the contiguous exponent
  /// range from lowest to highest degree. Exponents missing from that range
  /// count as zero coefficients, so internal gaps break unimodality.
  /// Throws std::domain_error if any coefficient is negative.
  bool is_unimodal() const;

  /// Canonical rendering, ascending exponents: "0", "1 - x", "2x^5",
  /// "-x^6 - x^8 - x^10". A unit coefficient is suppressed and exponent 1 is
  /// written as plain "x".
  std::string to_string() const;

 private:
  void add_term(int exponent, long long coefficient);

  TermMap terms_;
};

/// Thrown by exact_div when the division leaves a remainder.
class ExactDivisionError : public std::runtime_error {
 public:
  ExactDivisionError(const std::string& what, SignedPoly remainder);
  const SignedPoly& remainder() const { return remainder_; }

 private:
  SignedPoly remainder_;
};

/// Quotient num/den when the division is exact over the integers; throws
/// ExactDivisionError carrying the offending remainder otherwise. Used as a
/// formula integrity check: callers rely on the loud failure.
SignedPoly exact_div(const SignedPoly& num, const SignedPoly& den);

/// [k] at q = x^2: 1 + x^2 + ... + x^{2(k-1)}; [0] is the zero polynomial.
SignedPoly q_integer(int k);

/// [k]! at q = x^2; [0]! = 1.
SignedPoly q_factorial(int k);

/// Gaussian multinomial with upper index sum(parts) at q = x^2. The empty part
/// list gives 1. Division is always exact; a remainder would be a bug.
SignedPoly gaussian_multinomial(const std::vector<int>& parts);

std::string to_string(const SignedPoly& p);

/// Overflow-checked 64-bit helpers used for coefficient arithmetic.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace oddlen

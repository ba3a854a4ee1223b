#include "oddlen/laurent.hpp"

namespace oddlen {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

void SignedPoly::add_term(int exponent, long long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

SignedPoly SignedPoly::constant(long long value) { return monomial(value, 0); }

SignedPoly SignedPoly::monomial(long long coefficient, int exponent) {
  SignedPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

SignedPoly SignedPoly::from_terms(const std::vector<std::pair<int, long long>>& terms) {
  SignedPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

long long SignedPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int SignedPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no support");
  return terms_.begin()->first;
}

int SignedPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no support");
  return terms_.rbegin()->first;
}

SignedPoly SignedPoly::operator-() const {
  SignedPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, checked_mul(c, -1));
  return p;
}

SignedPoly& SignedPoly::operator+=(const SignedPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SignedPoly& SignedPoly::operator-=(const SignedPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

SignedPoly operator+(SignedPoly lhs, const SignedPoly& rhs) {
  lhs += rhs;
  return lhs;
}

SignedPoly operator-(SignedPoly lhs, const SignedPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

SignedPoly operator*(const SignedPoly& lhs, const SignedPoly& rhs) {
  SignedPoly out;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_)
      out.add_term(ea + eb, checked_mul(ca, cb));
  return out;
}

SignedPoly SignedPoly::reciprocal() const {
  SignedPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

long long SignedPoly::value_at_one() const {
  long long sum = 0;
  for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

bool SignedPoly::is_symmetric() const {
  if (terms_.empty()) return true;
  const int lo = min_exponent(), hi = max_exponent();
  for (int i = 0; lo + i < hi - i; ++i)
    if (coefficient(lo + i) != coefficient(hi - i)) return false;
  return true;
}

bool SignedPoly::is_unimodal() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) throw std::domain_error("is_unimodal needs nonnegative coefficients");
  if (terms_.empty()) return true;
  const int lo = min_exponent(), hi = max_exponent();
  bool rising = true;
  long long prev = coefficient(lo);
  for (int e = lo + 1; e <= hi; ++e) {
    const long long cur = coefficient(e);
    if (rising) {
      if (cur < prev) rising = false;
    } else if (cur > prev) {
      return false;
    }
    prev = cur;
  }
  return true;
}

std::string SignedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const unsigned long long mag =
        c < 0 ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "x";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

ExactDivisionError::ExactDivisionError(const std::string& what, SignedPoly remainder)
    : std::runtime_error(what + "; remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

SignedPoly exact_div(const SignedPoly& num, const SignedPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (num.is_zero()) return {};
  // An exact quotient has support inside [num.min - den.min, num.max - den.max].
  const int quot_min = num.min_exponent() - den.min_exponent();
  const int den_top = den.max_exponent();
  const long long den_lead = den.coefficient(den_top);
  SignedPoly quot, rem = num;
  while (!rem.is_zero()) {
    const int e = rem.max_exponent() - den_top;
    const long long lead = rem.coefficient(rem.max_exponent());
    if (e < quot_min || lead % den_lead != 0)
      throw ExactDivisionError("polynomial division is not exact", rem);
    const SignedPoly t = SignedPoly::monomial(lead / den_lead, e);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

SignedPoly q_integer(int k) {
  if (k < 0) throw std::invalid_argument("q_integer needs k >= 0");
  SignedPoly p;
  for (int i = 0; i < k; ++i) p += SignedPoly::monomial(1, 2 * i);
  return p;
}

SignedPoly q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("q_factorial needs k >= 0");
  SignedPoly p = SignedPoly::constant(1);
  for (int i = 1; i <= k; ++i) p = p * q_integer(i);
  return p;
}

SignedPoly gaussian_multinomial(const std::vector<int>& parts) {
  int sum = 0;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial parts must be >= 0");
    sum += part;
  }
  SignedPoly den = SignedPoly::constant(1);
  for (int part : parts) den = den * q_factorial(part);
  return exact_div(q_factorial(sum), den);
}

std::string to_string(const SignedPoly& p) { return p.to_string(); }

}  // namespace oddlen

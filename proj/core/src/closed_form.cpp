#include "oddlen/closed_form.hpp"

#include <stdexcept>

namespace oddlen {

namespace {

SignedPoly one() { return SignedPoly::constant(1); }

// (-1)^{sign_power} x^{exponent}
SignedPoly sign_monomial(int sign_power, int exponent) {
  return SignedPoly::monomial((sign_power & 1) ? -1 : 1, exponent);
}

// prod_{k=from}^{to} (1 - x^{2k}); empty range gives 1.
SignedPoly even_gap_product(int from, int to) {
  SignedPoly out = one();
  for (int k = from; k <= to; ++k)
    out = out * (one() - SignedPoly::monomial(1, 2 * k));
  return out;
}

// prod_{k=from}^{to} (1 + (-1)^{k-1} x^{floor(k/2)}); empty range gives 1.
SignedPoly alternating_sign_product(int from, int to) {
  SignedPoly out = one();
  for (int k = from; k <= to; ++k)
    out = out * (one() + SignedPoly::monomial((k % 2 == 0) ? -1 : 1, k / 2));
  return out;
}

std::vector<int> component_weights(const PositionSet& s) {
  std::vector<int> out;
  for (const auto& comp : connected_components(s))
    out.push_back((comp.size() + 1) / 2);
  return out;
}

void require_chessboard_population(Population pop, const char* who) {
  if (pop != Population::ChessEven && pop != Population::ChessOdd)
    throw std::invalid_argument(std::string(who) +
                                " expects a single chessboard population");
}

}  // namespace

UnmixedShape shape_of(const ClassSpec& c) {
  if (auto v = unmixed_violation(c))
    throw std::invalid_argument("shape_of needs an unmixed class; " + *v);
  UnmixedShape s;
  s.ascent_weights = component_weights(c.ascents());
  s.descent_weights = component_weights(c.descents());
  for (int w : s.ascent_weights) s.ascent_weight_sum += w;
  for (int w : s.descent_weights) {
    s.descent_weight_sum += w;
    s.descent_square_sum += w * w;
  }
  s.weight_sum = s.ascent_weight_sum + s.descent_weight_sum;
  s.half_n = c.n() / 2;
  return s;
}

SignedPoly quotient_formula(int n, const PositionSet& ascents, Population pop) {
  if (n < 1) throw std::invalid_argument("quotient_formula needs n >= 1");
  if (!ascents.empty() && ascents.max() > n - 1)
    throw std::invalid_argument("ascent positions must lie in [1, n-1]");
  require_chessboard_population(pop, "quotient_formula");
  if (pop == Population::ChessOdd && n % 2 == 1)
    throw std::domain_error("odd-chessboard population is empty for odd n");

  const std::vector<int> weights = component_weights(ascents);
  int weight_sum = 0;
  for (int w : weights) weight_sum += w;
  const SignedPoly even_value =
      gaussian_multinomial(weights) * even_gap_product(weight_sum + 1, (n - 1) / 2);
  if (pop == Population::ChessEven) return even_value;
  const int m = n / 2;
  if (weight_sum == m) return {};
  return SignedPoly::monomial(-1, m) * even_value;
}

SignedPoly unmixed_formula(const ClassSpec& c) {
  if (auto v = unmixed_violation(c))
    throw std::invalid_argument("unmixed_formula needs an unmixed class; " + *v);
  const UnmixedShape s = shape_of(c);
  const int n = c.n();

  std::vector<int> parts = s.ascent_weights;
  parts.insert(parts.end(), s.descent_weights.begin(), s.descent_weights.end());
  const SignedPoly mult = gaussian_multinomial(parts);

  const bool balanced = (n == 2 * s.weight_sum);
  if (balanced != is_compressed(c))
    throw std::logic_error("balanced-branch detection disagrees with is_compressed");

  if (balanced) {
    const SignedPoly numer =
        (SignedPoly::monomial(1, s.descent_weight_sum) * q_integer(s.ascent_weight_sum) +
         SignedPoly::monomial(1, s.ascent_weight_sum) * q_integer(s.descent_weight_sum)) *
        mult;
    return sign_monomial(s.descent_weight_sum, s.descent_square_sum) *
           exact_div(numer, q_integer(s.weight_sum));
  }
  return sign_monomial(s.descent_weight_sum,
                       s.descent_weight_sum + s.descent_square_sum) *
         mult * alternating_sign_product(2 * s.weight_sum + 2, n);
}

SignedPoly chessboard_formula(const ClassSpec& c, Population pop) {
  if (auto v = unmixed_violation(c))
    throw std::invalid_argument("chessboard_formula needs an unmixed class; " + *v);
  require_chessboard_population(pop, "chessboard_formula");
  const UnmixedShape s = shape_of(c);
  const int n = c.n();

  std::vector<int> parts = s.ascent_weights;
  parts.insert(parts.end(), s.descent_weights.begin(), s.descent_weights.end());
  const SignedPoly mult = gaussian_multinomial(parts);

  if (n % 2 == 1) {
    if (pop == Population::ChessOdd) return {};
    return sign_monomial(s.descent_weight_sum,
                         s.descent_weight_sum + s.descent_square_sum) *
           mult * even_gap_product(s.weight_sum + 1, s.half_n);
  }

  if (s.weight_sum == s.half_n) {
    // Balanced even case: one factor of the q-factorial cancels exactly.
    if (pop == Population::ChessEven)
      return sign_monomial(s.descent_weight_sum,
                           s.descent_weight_sum + s.descent_square_sum) *
             exact_div(q_integer(s.ascent_weight_sum) * mult, q_integer(s.half_n));
    return sign_monomial(s.descent_weight_sum,
                         s.ascent_weight_sum + s.descent_square_sum) *
           exact_div(q_integer(s.descent_weight_sum) * mult, q_integer(s.half_n));
  }

  const SignedPoly base = mult * even_gap_product(s.weight_sum + 1, s.half_n - 1);
  if (pop == Population::ChessEven)
    return sign_monomial(s.descent_weight_sum,
                         s.descent_weight_sum + s.descent_square_sum) *
           base;
  return sign_monomial(s.descent_weight_sum + 1,
                       s.descent_weight_sum + s.half_n + s.descent_square_sum) *
         base;
}

SignedPoly alternating_formula(int n, AlternatingKind kind) {
  if (n < 1) throw std::invalid_argument("alternating_formula needs n >= 1");
  if (n % 2 == 1) return {};
  const int h = n / 2;
  if (kind == AlternatingKind::Alternating)
    return sign_monomial(h, h);
  return SignedPoly::monomial(1, h * (h - 1));
}

std::string to_string(Population pop) {
  switch (pop) {
    case Population::FullSn: return "sn";
    case Population::ChessEven: return "cn+";
    case Population::ChessOdd: return "cn-";
    case Population::ChessAll: return "cn";
  }
  return "?";
}

}  // namespace oddlen

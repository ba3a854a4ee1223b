#include "oddlen/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace oddlen {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = static_cast<int>(values_.size());
  if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " outside [1, " + std::to_string(n) + "]");
    if (seen[v])
      throw std::invalid_argument("value " + std::to_string(v) + " repeats");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("cannot compose permutations of different sizes");
  const int n = p.n();
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = p(q(i));
  return Permutation(std::move(v));
}

int inv_length(const Permutation& p) {
  const auto& v = p.one_line();
  const int n = p.n();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

int odd_length(const Permutation& p) {
  const auto& v = p.one_line();
  const int n = p.n();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      // 0-based indices differ in parity exactly when the 1-based positions do.
      if (v[i] > v[j] && ((i ^ j) & 1)) ++count;
  return count;
}

PositionSet descent_set(const Permutation& p) {
  const auto& v = p.one_line();
  PositionSet d;
  for (int i = 1; i < p.n(); ++i)
    if (v[i - 1] > v[i]) d.insert(i);
  return d;
}

ChessboardClass chessboard_class(const Permutation& p) {
  const auto& v = p.one_line();
  bool all_even = true, all_odd = true;
  for (int i = 0; i < p.n(); ++i) {
    if (((i + 1 + v[i]) & 1) == 0)
      all_odd = false;
    else
      all_even = false;
  }
  if (all_even) return ChessboardClass::EvenChessboard;
  if (all_odd) return ChessboardClass::OddChessboard;
  return ChessboardClass::NotChessboard;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.n(); ++i) {
    if (i) out += " ";
    out += std::to_string(p.one_line()[i]);
  }
  return out;
}

}  // namespace oddlen

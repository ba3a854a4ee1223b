#include "oddlen/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddlen {

namespace {

SignedPoly unit() { return SignedPoly::constant(1); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool is_component(const ClassSpec& c, const Interval& iv) {
  const auto comps = connected_components(c.forced());
  return std::find(comps.begin(), comps.end(), iv) != comps.end();
}

// Shared core of the four run shifts. The run occupies [i, i+2k] before a
// right shift and [i+1, i+2k+1] before a left shift; in both directions only
// the vacated endpoint moves to the far side of the run.
TransformResult shift_run(const ClassSpec& c, int i, int k, bool ascent_side,
                          bool right) {
  require(i >= 1, "shift needs i >= 1");
  require(k >= 0, "shift needs k >= 0");
  const int n = c.n();
  const int lo = right ? i : i + 1;
  const int hi = right ? i + 2 * k : i + 2 * k + 1;
  const std::string run = right ? "[i, i+2k]" : "[i+1, i+2k+1]";
  require(hi <= n - 1, "run " + run + " must lie inside [1, n-1]");
  const Interval comp{lo, hi};
  require(is_component(c, comp),
          run + " = " + to_string(comp) +
              " is not a connected component of the forced positions");
  const char* side_name = ascent_side ? "ascents" : "descents";
  const PositionSet& own = ascent_side ? c.ascents() : c.descents();
  require(PositionSet::range(lo, hi).subset_of(own),
          run + " = " + to_string(comp) + " is not contained in the forced " +
              side_name);
  int moved_from, moved_to;
  if (right) {
    require(hi + 1 <= n - 1, "shift target i+2k+1 = " + std::to_string(hi + 1) +
                                 " lies outside [1, n-1]");
    require(!c.forced().contains(hi + 2),
            "position i+2k+2 = " + std::to_string(hi + 2) + " must not be forced");
    moved_from = lo;
    moved_to = hi + 1;
  } else {
    require(!c.forced().contains(i - 1),
            "position i-1 = " + std::to_string(i - 1) + " must not be forced");
    moved_from = hi;
    moved_to = i;
  }
  PositionSet shifted = own;
  shifted.erase(moved_from);
  shifted.insert(moved_to);
  ClassSpec spec = ascent_side ? ClassSpec(n, shifted, c.descents())
                               : ClassSpec(n, c.ascents(), shifted);
  return {spec, unit(), false, PopulationMap::Identity, false};
}

}  // namespace

TransformResult shift_right_ascent(const ClassSpec& c, int i, int k) {
  return shift_run(c, i, k, true, true);
}

TransformResult shift_left_ascent(const ClassSpec& c, int i, int k) {
  return shift_run(c, i, k, true, false);
}

TransformResult shift_right_descent(const ClassSpec& c, int i, int k) {
  return shift_run(c, i, k, false, true);
}

TransformResult shift_left_descent(const ClassSpec& c, int i, int k) {
  return shift_run(c, i, k, false, false);
}

TransformResult reverse_descent_component(const ClassSpec& c, Interval comp) {
  const int n = c.n();
  require(comp.lo >= 1 && comp.hi <= n - 1 && comp.lo <= comp.hi,
          "component " + to_string(comp) + " must lie inside [1, n-1]");
  require(is_component(c, comp),
          to_string(comp) + " is not a connected component of the forced positions");
  require(comp.size() % 2 == 0,
          "component " + to_string(comp) + " must have even size");
  require(PositionSet::range(comp.lo, comp.hi).subset_of(c.descents()),
          to_string(comp) + " is not contained in the forced descents");
  const int k = comp.size() / 2;
  const PositionSet run = PositionSet::range(comp.lo, comp.hi);
  return {ClassSpec(n, c.ascents() | run, c.descents() - run),
          SignedPoly::monomial((k & 1) ? -1 : 1, k * (k + 1)),
          false, PopulationMap::Identity, false};
}

TransformResult complement(const ClassSpec& c) {
  const int n = c.n();
  const int inv_parity = (n * (n - 1) / 2) & 1;
  const int odd_len_max = (n / 2) * ((n + 1) / 2);
  return {ClassSpec(n, c.descents(), c.ascents()),
          SignedPoly::monomial(inv_parity ? -1 : 1, odd_len_max),
          true,
          n % 2 == 0 ? PopulationMap::SwapEvenOdd : PopulationMap::Identity,
          false};
}

TransformResult conjectured_mixed_shift(const ClassSpec& c, int i, int k) {
  require(i >= 1, "shift needs i >= 1");
  require(k >= 0, "shift needs k >= 0");
  const int n = c.n();
  const int hi = i + 2 * k;
  require(hi <= n - 1, "component [i, i+2k] must lie inside [1, n-1]");
  const Interval comp{i, hi};
  require(is_component(c, comp),
          "[i, i+2k] = " + to_string(comp) +
              " is not a connected component of the forced positions");
  require(hi + 1 <= n - 1, "shift target i+2k+1 = " + std::to_string(hi + 1) +
                               " lies outside [1, n-1]");
  require(!c.forced().contains(hi + 2),
          "position i+2k+2 = " + std::to_string(hi + 2) + " must not be forced");
  const PositionSet run = PositionSet::range(i, hi);
  const PositionSet asc_part = c.ascents() & run;
  const PositionSet desc_part = c.descents() & run;
  return {ClassSpec(n,
                    (c.ascents() - asc_part) | asc_part.shifted_up(),
                    (c.descents() - desc_part) | desc_part.shifted_up()),
          unit(), false, PopulationMap::Identity, true};
}

}  // namespace oddlen

#include <doctest.h>

#include <stdexcept>
#include <string>

#include "oddlen/oracle.hpp"
#include "oddlen/transforms.hpp"

using oddlen::ClassSpec;
using oddlen::Interval;
using oddlen::Population;
using oddlen::PopulationMap;
using oddlen::PositionSet;
using oddlen::SignedPoly;
using oddlen::TransformResult;

namespace {

template <typename Fn>
void for_each_class(int n, Fn fn) {
  long long total = 1;
  for (int i = 1; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    PositionSet asc, desc;
    long long rest = code;
    for (int pos = 1; pos <= n - 1; ++pos) {
      switch (rest % 3) {
        case 1: asc.insert(pos); break;
        case 2: desc.insert(pos); break;
      }
      rest /= 3;
    }
    fn(ClassSpec(n, asc, desc));
  }
}

// The relation contract: gf(old) = factor * (reciprocal ? gf(new)(1/x) : gf(new)).
bool relation_holds(const ClassSpec& old_spec, const TransformResult& t,
                    Population old_pop, Population new_pop,
                    const oddlen::BucketTable& table) {
  SignedPoly rhs = signed_poly(t.new_spec, new_pop, &table);
  if (t.reciprocal) rhs = rhs.reciprocal();
  return signed_poly(old_spec, old_pop, &table) == t.factor * rhs;
}

std::string thrown_message(void (*fn)()) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("right shift of an ascent run") {
  const TransformResult t =
      oddlen::shift_right_ascent(ClassSpec(5, {1}, {}), 1, 0);
  CHECK(t.new_spec == ClassSpec(5, {2}, {}));
  CHECK(t.factor == SignedPoly::constant(1));
  CHECK_FALSE(t.reciprocal);
  CHECK(t.population_map == PopulationMap::Identity);
  CHECK_FALSE(t.conjectural);

  CHECK(oddlen::shift_right_ascent(ClassSpec(7, {2, 3, 4}, {}), 2, 1).new_spec ==
        ClassSpec(7, {3, 4, 5}, {}));
  // The run may sit next to other forced components as long as it is one.
  CHECK(oddlen::shift_right_ascent(ClassSpec(7, {1}, {4, 5, 6}), 1, 0).new_spec ==
        ClassSpec(7, {2}, {4, 5, 6}));
}

TEST_CASE("shift precondition failures name the clause") {
  const std::string target_forced = thrown_message(
      [] { oddlen::shift_right_ascent(ClassSpec(5, {1, 3}, {}), 1, 0); });
  CHECK(target_forced.find("i+2k+2 = 3") != std::string::npos);

  const std::string not_inside = thrown_message(
      [] { oddlen::shift_right_ascent(ClassSpec(4, {3}, {}), 3, 1); });
  CHECK(not_inside.find("must lie inside [1, n-1]") != std::string::npos);

  const std::string not_component = thrown_message(
      [] { oddlen::shift_right_ascent(ClassSpec(6, {1, 2, 3}, {}), 1, 0); });
  CHECK(not_component.find("not a connected component") != std::string::npos);

  const std::string wrong_side = thrown_message(
      [] { oddlen::shift_right_descent(ClassSpec(6, {1, 2, 3}, {}), 1, 1); });
  CHECK(wrong_side.find("not contained in the forced descents") !=
        std::string::npos);

  const std::string target_outside = thrown_message(
      [] { oddlen::shift_right_ascent(ClassSpec(4, {3}, {}), 3, 0); });
  CHECK(target_outside.find("lies outside [1, n-1]") != std::string::npos);

  const std::string left_blocked = thrown_message(
      [] { oddlen::shift_left_ascent(ClassSpec(5, {3}, {1}), 2, 0); });
  CHECK(left_blocked.find("i-1 = 1") != std::string::npos);

  CHECK_THROWS_AS(oddlen::shift_left_ascent(ClassSpec(4, {1}, {}), 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(oddlen::shift_right_ascent(ClassSpec(4, {1}, {}), 1, -1),
                  std::invalid_argument);
}

TEST_CASE("left shift of an ascent run") {
  CHECK(oddlen::shift_left_ascent(ClassSpec(5, {2}, {}), 1, 0).new_spec ==
        ClassSpec(5, {1}, {}));
  CHECK(oddlen::shift_left_ascent(ClassSpec(7, {3, 4, 5}, {}), 2, 1).new_spec ==
        ClassSpec(7, {2, 3, 4}, {}));
}

TEST_CASE("descent-run shifts") {
  CHECK(oddlen::shift_right_descent(ClassSpec(5, {}, {1}), 1, 0).new_spec ==
        ClassSpec(5, {}, {2}));
  CHECK(oddlen::shift_right_descent(ClassSpec(7, {}, {2, 3, 4}), 2, 1).new_spec ==
        ClassSpec(7, {}, {3, 4, 5}));
  CHECK(oddlen::shift_left_descent(ClassSpec(5, {}, {2}), 1, 0).new_spec ==
        ClassSpec(5, {}, {1}));
  CHECK(oddlen::shift_left_descent(ClassSpec(7, {}, {3, 4, 5}), 2, 1).new_spec ==
        ClassSpec(7, {}, {2, 3, 4}));
}

TEST_CASE("reversing a descent component") {
  const TransformResult t =
      oddlen::reverse_descent_component(ClassSpec(6, {1}, {3, 4}), {3, 4});
  CHECK(t.new_spec == ClassSpec(6, {1, 3, 4}, {}));
  CHECK(t.factor == SignedPoly::monomial(-1, 2));
  CHECK_FALSE(t.reciprocal);
  CHECK(t.population_map == PopulationMap::Identity);

  CHECK(oddlen::reverse_descent_component(ClassSpec(7, {}, {2, 3, 4, 5}), {2, 5})
            .factor == SignedPoly::monomial(1, 6));

  CHECK_THROWS_AS(
      oddlen::reverse_descent_component(ClassSpec(7, {}, {2, 3, 4}), {2, 4}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      oddlen::reverse_descent_component(ClassSpec(6, {3, 4}, {1}), {3, 4}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      oddlen::reverse_descent_component(ClassSpec(6, {}, {1, 2, 4}), {1, 4}),
      std::invalid_argument);
}

TEST_CASE("complementation") {
  const TransformResult t4 = oddlen::complement(ClassSpec(4, {1}, {3}));
  CHECK(t4.new_spec == ClassSpec(4, {3}, {1}));
  CHECK(t4.factor == SignedPoly::monomial(1, 4));
  CHECK(t4.reciprocal);
  CHECK(t4.population_map == PopulationMap::SwapEvenOdd);

  const TransformResult t3 = oddlen::complement(ClassSpec(3, {}, {}));
  CHECK(t3.factor == SignedPoly::monomial(-1, 2));
  CHECK(t3.population_map == PopulationMap::Identity);

  // Involution on specs.
  const ClassSpec c(6, {1}, {3, 5});
  CHECK(oddlen::complement(oddlen::complement(c).new_spec).new_spec == c);

  const oddlen::BucketTable table = oddlen::build_bucket_table(6);
  const TransformResult t = oddlen::complement(c);
  CHECK(relation_holds(c, t, Population::FullSn, Population::FullSn, table));
  CHECK(relation_holds(c, t, Population::ChessEven, Population::ChessOdd, table));
  CHECK(relation_holds(c, t, Population::ChessOdd, Population::ChessEven, table));
}

TEST_CASE("conjectured mixed shift") {
  const TransformResult t =
      oddlen::conjectured_mixed_shift(ClassSpec(6, {1, 3}, {2}), 1, 1);
  CHECK(t.new_spec == ClassSpec(6, {2, 4}, {3}));
  CHECK(t.factor == SignedPoly::constant(1));
  CHECK(t.conjectural);

  // On a pure ascent run it degenerates to the proved right shift, minus the flag.
  const ClassSpec pure(7, {2, 3, 4}, {});
  CHECK(oddlen::conjectured_mixed_shift(pure, 2, 1).new_spec ==
        oddlen::shift_right_ascent(pure, 2, 1).new_spec);
  CHECK_FALSE(oddlen::shift_right_ascent(pure, 2, 1).conjectural);

  CHECK_THROWS_AS(oddlen::conjectured_mixed_shift(ClassSpec(4, {1, 3}, {2}), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      oddlen::conjectured_mixed_shift(ClassSpec(7, {1, 3, 5}, {2}), 1, 1),
      std::invalid_argument);
}

TEST_CASE("right shift then left shift is the identity") {
  for (int n = 2; n <= 7; ++n)
    for_each_class(n, [&](const ClassSpec& c) {
      const PositionSet forced = c.forced();
      for (const Interval& comp : oddlen::connected_components(forced)) {
        if (comp.size() % 2 == 0) continue;
        const bool in_asc =
            PositionSet::range(comp.lo, comp.hi).subset_of(c.ascents());
        const bool in_desc =
            PositionSet::range(comp.lo, comp.hi).subset_of(c.descents());
        if (!in_asc && !in_desc) continue;
        if (comp.hi + 1 > n - 1 || forced.contains(comp.hi + 2)) continue;
        const int k = (comp.size() - 1) / 2;
        const TransformResult right =
            in_asc ? oddlen::shift_right_ascent(c, comp.lo, k)
                   : oddlen::shift_right_descent(c, comp.lo, k);
        const TransformResult back =
            in_asc ? oddlen::shift_left_ascent(right.new_spec, comp.lo, k)
                   : oddlen::shift_left_descent(right.new_spec, comp.lo, k);
        CHECK(back.new_spec == c);
      }
    });
}

TEST_CASE("relations hold against enumeration") {
  for (int n = 2; n <= 6; ++n) {
    const oddlen::BucketTable table = oddlen::build_bucket_table(n);
    for_each_class(n, [&](const ClassSpec& c) {
      const PositionSet forced = c.forced();
      for (const Interval& comp : oddlen::connected_components(forced)) {
        const PositionSet run = PositionSet::range(comp.lo, comp.hi);
        const bool in_asc = run.subset_of(c.ascents());
        const bool in_desc = run.subset_of(c.descents());
        if (comp.size() % 2 == 1 && (in_asc || in_desc)) {
          const int k = (comp.size() - 1) / 2;
          if (comp.hi + 1 <= n - 1 && !forced.contains(comp.hi + 2)) {
            const TransformResult t =
                in_asc ? oddlen::shift_right_ascent(c, comp.lo, k)
                       : oddlen::shift_right_descent(c, comp.lo, k);
            CHECK(relation_holds(c, t, Population::FullSn, Population::FullSn,
                                 table));
          }
          if (comp.lo - 1 >= 1 && !forced.contains(comp.lo - 2)) {
            const TransformResult t =
                in_asc ? oddlen::shift_left_ascent(c, comp.lo - 1, k)
                       : oddlen::shift_left_descent(c, comp.lo - 1, k);
            CHECK(relation_holds(c, t, Population::FullSn, Population::FullSn,
                                 table));
          }
        }
        if (comp.size() % 2 == 0 && in_desc) {
          const TransformResult t = oddlen::reverse_descent_component(c, comp);
          CHECK(relation_holds(c, t, Population::FullSn, Population::FullSn,
                               table));
          CHECK(relation_holds(c, t, Population::ChessEven,
                               Population::ChessEven, table));
          CHECK(relation_holds(c, t, Population::ChessOdd, Population::ChessOdd,
                               table));
        }
      }
      const TransformResult t = oddlen::complement(c);
      CHECK(relation_holds(c, t, Population::FullSn, Population::FullSn, table));
      const bool swap = t.population_map == PopulationMap::SwapEvenOdd;
      CHECK(relation_holds(c, t, Population::ChessEven,
                           swap ? Population::ChessOdd : Population::ChessEven,
                           table));
      CHECK(relation_holds(c, t, Population::ChessOdd,
                           swap ? Population::ChessEven : Population::ChessOdd,
                           table));
    });
  }
}

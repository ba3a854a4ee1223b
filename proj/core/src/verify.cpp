#include "oddlen/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddlen/closed_form.hpp"
#include "oddlen/transforms.hpp"

namespace oddlen {

namespace {

using Clock = std::chrono::steady_clock;

long long pow3(int e) {
  long long r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Visits every disjoint ascent/descent assignment of [n-1] in a fixed order:
// position p is free, a forced ascent or a forced descent according to the
// base-3 digit of the counter at p.
template <typename Fn>
void for_each_class(int n, Fn&& fn) {
  const long long total = pow3(n - 1);
  for (long long code = 0; code < total; ++code) {
    std::uint32_t asc = 0, desc = 0;
    long long rest = code;
    for (int pos = 1; pos <= n - 1; ++pos) {
      switch (rest % 3) {
        case 1: asc |= 1u << pos; break;
        case 2: desc |= 1u << pos; break;
      }
      rest /= 3;
    }
    fn(ClassSpec(n, PositionSet::from_mask(asc), PositionSet::from_mask(desc)));
  }
}

ScanReport make_report(std::string suite, int n) {
  ScanReport r;
  r.suite = std::move(suite);
  r.n = n;
  return r;
}

void check(ScanReport& r, std::string desc, const SignedPoly& expected,
           const SignedPoly& actual) {
  ++r.cases_checked;
  if (expected != actual)
    r.failures.push_back({std::move(desc), expected, actual});
}

void finalize(ScanReport& r, Clock::time_point t0, bool conjecture) {
  std::sort(r.failures.begin(), r.failures.end(),
            [](const ScanFailure& a, const ScanFailure& b) {
              return a.case_desc < b.case_desc;
            });
  r.elapsed = Clock::now() - t0;
  if (!r.failures.empty())
    r.verdict = Verdict::Fail;
  else
    r.verdict = conjecture ? Verdict::ConjectureConsistent : Verdict::Pass;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::ConjectureConsistent: return "conjecture-consistent";
  }
  return "?";
}

ScanReport scan_theorem_main(const BucketTable& table) {
  ScanReport r = make_report("theorem-main", table.n());
  const auto t0 = Clock::now();
  for_each_class(table.n(), [&](const ClassSpec& c) {
    if (!is_unmixed(c)) return;
    check(r, to_string(c), unmixed_formula(c),
          signed_poly(c, Population::FullSn, &table));
  });
  finalize(r, t0, false);
  return r;
}

ScanReport scan_theorem_chessboard(const BucketTable& table) {
  ScanReport r = make_report("theorem-chessboard", table.n());
  const auto t0 = Clock::now();
  for_each_class(table.n(), [&](const ClassSpec& c) {
    if (!is_unmixed(c)) return;
    for (Population pop : {Population::ChessEven, Population::ChessOdd})
      check(r, to_string(c) + " population=" + to_string(pop),
            chessboard_formula(c, pop), signed_poly(c, pop, &table));
  });
  finalize(r, t0, false);
  return r;
}

ScanReport scan_quotients(const BucketTable& table) {
  ScanReport r = make_report("quotients", table.n());
  const auto t0 = Clock::now();
  const int n = table.n();
  const std::uint32_t buckets = (n >= 2) ? (1u << (n - 1)) : 1u;
  for (std::uint32_t b = 0; b < buckets; ++b) {
    const PositionSet asc = PositionSet::from_mask(b << 1);
    const ClassSpec c(n, asc, {});
    check(r, to_string(c) + " population=cn+",
          quotient_formula(n, asc, Population::ChessEven),
          signed_poly(c, Population::ChessEven, &table));
    if (n % 2 == 0)
      check(r, to_string(c) + " population=cn-",
            quotient_formula(n, asc, Population::ChessOdd),
            signed_poly(c, Population::ChessOdd, &table));
    else
      // The odd-chessboard population is empty for odd n.
      check(r, to_string(c) + " population=cn- (empty)", SignedPoly{},
            signed_poly(c, Population::ChessOdd, &table));
  }
  finalize(r, t0, false);
  return r;
}

ScanReport scan_zero_condition(const BucketTable& table) {
  ScanReport r = make_report("zero-condition", table.n());
  const auto t0 = Clock::now();
  for_each_class(table.n(), [&](const ClassSpec& c) {
    if (zero_condition(c)) {
      check(r, to_string(c), SignedPoly{},
            signed_poly(c, Population::FullSn, &table));
    } else if (signed_poly(c, Population::FullSn, &table).is_zero()) {
      r.observations.push_back("zero without condition: " + to_string(c));
    }
  });
  finalize(r, t0, false);
  return r;
}

ScanReport scan_transforms(const BucketTable& table) {
  ScanReport r = make_report("transforms", table.n());
  const auto t0 = Clock::now();
  const int n = table.n();

  auto gf = [&](const ClassSpec& c, Population pop) {
    return signed_poly(c, pop, &table);
  };
  auto relation_value = [&](const TransformResult& t, Population new_pop) {
    SignedPoly g = gf(t.new_spec, new_pop);
    if (t.reciprocal) g = g.reciprocal();
    return t.factor * g;
  };
  auto mapped = [](PopulationMap map, Population pop) {
    if (map == PopulationMap::Identity) return pop;
    if (pop == Population::ChessEven) return Population::ChessOdd;
    if (pop == Population::ChessOdd) return Population::ChessEven;
    return pop;
  };

  for_each_class(n, [&](const ClassSpec& c) {
    const PositionSet forced = c.forced();
    for (const Interval& comp : connected_components(forced)) {
      const PositionSet run = PositionSet::range(comp.lo, comp.hi);
      const bool in_asc = run.subset_of(c.ascents());
      const bool in_desc = run.subset_of(c.descents());
      if (comp.size() % 2 == 1) {
        if (!in_asc && !in_desc) continue;  // mixed runs belong to the conjecture scan
        const std::string side = in_asc ? "ascent" : "descent";
        const int k = (comp.size() - 1) / 2;
        if (comp.hi + 1 <= n - 1 && !forced.contains(comp.hi + 2)) {
          const TransformResult t = in_asc ? shift_right_ascent(c, comp.lo, k)
                                           : shift_right_descent(c, comp.lo, k);
          check(r, "shift-right-" + side + " " + to_string(comp) + " on " + to_string(c),
                relation_value(t, Population::FullSn), gf(c, Population::FullSn));
          // Keeping the vacated endpoint forced as well gives the same sum.
          const ClassSpec middle =
              in_asc ? ClassSpec(n, c.ascents() | PositionSet{comp.hi + 1}, c.descents())
                     : ClassSpec(n, c.ascents(), c.descents() | PositionSet{comp.hi + 1});
          check(r, "shift-right-" + side + "-middle " + to_string(comp) + " on " + to_string(c),
                gf(middle, Population::FullSn), gf(c, Population::FullSn));
        }
        if (comp.lo - 1 >= 1 && !forced.contains(comp.lo - 2)) {
          const TransformResult t = in_asc ? shift_left_ascent(c, comp.lo - 1, k)
                                           : shift_left_descent(c, comp.lo - 1, k);
          check(r, "shift-left-" + side + " " + to_string(comp) + " on " + to_string(c),
                relation_value(t, Population::FullSn), gf(c, Population::FullSn));
          const ClassSpec middle =
              in_asc ? ClassSpec(n, c.ascents() | PositionSet{comp.lo - 1}, c.descents())
                     : ClassSpec(n, c.ascents(), c.descents() | PositionSet{comp.lo - 1});
          check(r, "shift-left-" + side + "-middle " + to_string(comp) + " on " + to_string(c),
                gf(middle, Population::FullSn), gf(c, Population::FullSn));
        }
      } else {
        if (in_desc) {
          const TransformResult t = reverse_descent_component(c, comp);
          for (Population pop : {Population::FullSn, Population::ChessEven,
                                 Population::ChessOdd})
            check(r, "reverse " + to_string(comp) + " population=" + to_string(pop) +
                         " on " + to_string(c),
                  relation_value(t, pop), gf(c, pop));
        }
        // An ascent run closed off by one forced descent makes the signed sum
        // vanish.
        if (c.descents().contains(comp.hi) &&
            PositionSet::range(comp.lo, comp.hi - 1).subset_of(c.ascents()))
          check(r, "closed-ascent-run " + to_string(comp) + " on " + to_string(c),
                SignedPoly{}, gf(c, Population::FullSn));
      }
    }
    const TransformResult t = complement(c);
    check(r, "complement on " + to_string(c),
          relation_value(t, Population::FullSn), gf(c, Population::FullSn));
    for (Population pop : {Population::ChessEven, Population::ChessOdd})
      check(r, "complement population=" + to_string(pop) + " on " + to_string(c),
            relation_value(t, mapped(t.population_map, pop)), gf(c, pop));
  });
  finalize(r, t0, false);
  return r;
}

ScanReport scan_alternating(const BucketTable& table) {
  const int n = table.n();
  if (n < 2) throw std::invalid_argument("scan_alternating needs n >= 2");
  ScanReport r = make_report("alternating", n);
  const auto t0 = Clock::now();
  PositionSet odd_positions, even_positions;
  for (int i = 1; i <= n - 1; ++i)
    (i % 2 ? odd_positions : even_positions).insert(i);
  const ClassSpec down_up(n, even_positions, odd_positions);
  const ClassSpec up_down(n, odd_positions, even_positions);
  check(r, "alternating " + to_string(down_up),
        alternating_formula(n, AlternatingKind::Alternating),
        signed_poly(down_up, Population::FullSn, &table));
  check(r, "reverse-alternating " + to_string(up_down),
        alternating_formula(n, AlternatingKind::ReverseAlternating),
        signed_poly(up_down, Population::FullSn, &table));
  finalize(r, t0, false);
  return r;
}

ScanReport check_mixed_shift_conjecture(const BucketTable& table) {
  ScanReport r = make_report("mixed-shift", table.n());
  const auto t0 = Clock::now();
  const int n = table.n();
  for_each_class(n, [&](const ClassSpec& c) {
    const PositionSet forced = c.forced();
    for (const Interval& comp : connected_components(forced)) {
      if (comp.size() % 2 == 0) continue;
      const PositionSet run = PositionSet::range(comp.lo, comp.hi);
      if ((run & c.ascents()).empty() || (run & c.descents()).empty())
        continue;  // pure runs are covered by the proved shifts
      if (comp.hi + 1 > n - 1 || forced.contains(comp.hi + 2)) continue;
      const TransformResult t =
          conjectured_mixed_shift(c, comp.lo, (comp.size() - 1) / 2);
      check(r, "mixed-shift " + to_string(comp) + " on " + to_string(c),
            signed_poly(t.new_spec, Population::FullSn, &table),
            signed_poly(c, Population::FullSn, &table));
    }
  });
  finalize(r, t0, true);
  return r;
}

ScanReport check_unimodality(int n_max, int cap) {
  ScanReport r = make_report("unimodality", n_max);
  const auto t0 = Clock::now();
  for (int n = 3; n <= n_max; ++n) {
    const SignedPoly d = distribution(n, cap);
    ++r.cases_checked;
    if (!d.is_symmetric())
      r.failures.push_back({"L_" + std::to_string(n) + " symmetry", d, d});
    ++r.cases_checked;
    if (!d.is_unimodal()) {
      if (n == 4)
        r.observations.push_back("non-unimodal: n=4");
      else
        r.failures.push_back({"L_" + std::to_string(n) + " unimodality", d, d});
    }
  }
  finalize(r, t0, true);
  return r;
}

}  // namespace oddlen

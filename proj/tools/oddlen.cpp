// Command-line front end: evaluate closed forms against the enumeration
// oracle, apply class transforms, and run the verification scans.

#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddlen/class_spec.hpp"
#include "oddlen/closed_form.hpp"
#include "oddlen/oracle.hpp"
#include "oddlen/transforms.hpp"
#include "oddlen/verify.hpp"

namespace {

using nlohmann::json;
using namespace oddlen;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
  int n = 0;
  std::vector<int> ascents;
  std::vector<int> descents;
  Population population = Population::FullSn;
  std::string method = "closed";
  std::string output = "text";
  int cap = kDefaultEnumerationCap;
  std::string suite;
  std::string which;
  int n_max = 10;
  int i = 0;
  int k = 0;
  std::vector<int> comp;
  bool verify = false;
};

PositionSet to_set(const std::vector<int>& v) {
  PositionSet s;
  for (int e : v) s.insert(e);
  return s;
}

json poly_json(const SignedPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c});
  return {{"terms", terms}, {"text", p.to_string()}};
}

json spec_json(const ClassSpec& c) {
  return {{"n", c.n()},
          {"ascents", json(c.ascents().elements())},
          {"descents", json(c.descents().elements())}};
}

json report_json(const ScanReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"case", f.case_desc},
                        {"expected", poly_json(f.expected)},
                        {"actual", poly_json(f.actual)}});
  return {{"suite", r.suite},
          {"n", r.n},
          {"cases_checked", r.cases_checked},
          {"failures", failures},
          {"observations", r.observations},
          {"elapsed_seconds", r.elapsed.count()},
          {"verdict", to_string(r.verdict)}};
}

void print_report_text(const ScanReport& r) {
  std::cout << "suite: " << r.suite << "\n"
            << "n: " << r.n << "\n"
            << "cases checked: " << r.cases_checked << "\n"
            << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures)
    std::cout << "  case: " << f.case_desc << "\n"
              << "    expected: " << f.expected.to_string() << "\n"
              << "    actual:   " << f.actual.to_string() << "\n";
  if (!r.observations.empty()) {
    std::cout << "observations: " << r.observations.size() << "\n";
    for (const auto& o : r.observations) std::cout << "  " << o << "\n";
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed.count());
  std::cout << "elapsed: " << elapsed << " s\n"
            << "verdict: " << to_string(r.verdict) << "\n";
}

void print_report(const ScanReport& r, const Options& o) {
  if (o.output == "json")
    std::cout << report_json(r).dump(2) << "\n";
  else
    print_report_text(r);
}

BucketTable build_table(const Options& o) {
  BuildOptions b;
  b.cap = o.cap;
  return build_bucket_table(o.n, b);
}

// Closed-form value for any population; the whole-chessboard population is
// the sum of the two single-color formulas.
SignedPoly closed_value(const ClassSpec& c, Population pop) {
  switch (pop) {
    case Population::FullSn: return unmixed_formula(c);
    case Population::ChessEven:
    case Population::ChessOdd: return chessboard_formula(c, pop);
    case Population::ChessAll:
      return chessboard_formula(c, Population::ChessEven) +
             chessboard_formula(c, Population::ChessOdd);
  }
  throw std::logic_error("unhandled population");
}

int run_eval(const Options& o, bool oracle_only) {
  const ClassSpec c(o.n, to_set(o.ascents), to_set(o.descents));
  const bool want_closed =
      !oracle_only && (o.method == "closed" || o.method == "both");
  const bool want_oracle =
      oracle_only || o.method == "oracle" || o.method == "both";
  SignedPoly closed, oracle_value;
  if (want_closed) closed = closed_value(c, o.population);
  if (want_oracle) {
    const BucketTable table = build_table(o);
    oracle_value = signed_poly(c, o.population, &table);
  }
  const bool both = want_closed && want_oracle;
  const bool match = !both || closed == oracle_value;
  if (o.output == "json") {
    json out{{"command", oracle_only ? "oracle" : "eval"},
             {"spec", spec_json(c)},
             {"population", to_string(o.population)}};
    if (want_closed) out["closed"] = poly_json(closed);
    if (want_oracle) out["oracle"] = poly_json(oracle_value);
    if (both) out["match"] = match;
    std::cout << out.dump(2) << "\n";
  } else if (both) {
    std::cout << "closed: " << closed.to_string() << "\n"
              << "oracle: " << oracle_value.to_string() << "\n"
              << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
  } else {
    std::cout << (want_closed ? closed : oracle_value).to_string() << "\n";
  }
  return match ? kOk : kMismatch;
}

int run_distribution(const Options& o) {
  const SignedPoly d = distribution(o.n, o.cap);
  if (o.output == "json")
    std::cout << json{{"command", "distribution"}, {"n", o.n}, {"value", poly_json(d)}}
                     .dump(2)
              << "\n";
  else
    std::cout << d.to_string() << "\n";
  return kOk;
}

int run_transform(const Options& o) {
  const ClassSpec c(o.n, to_set(o.ascents), to_set(o.descents));
  const TransformResult t = [&] {
    if (o.which == "shift-right-ascent") return shift_right_ascent(c, o.i, o.k);
    if (o.which == "shift-left-ascent") return shift_left_ascent(c, o.i, o.k);
    if (o.which == "shift-right-descent") return shift_right_descent(c, o.i, o.k);
    if (o.which == "shift-left-descent") return shift_left_descent(c, o.i, o.k);
    if (o.which == "reverse") {
      if (o.comp.size() != 2)
        throw std::invalid_argument("reverse needs --comp lo,hi");
      return reverse_descent_component(c, {o.comp[0], o.comp[1]});
    }
    if (o.which == "complement") return complement(c);
    if (o.which == "mixed-shift") return conjectured_mixed_shift(c, o.i, o.k);
    throw std::invalid_argument("unknown transform " + o.which);
  }();

  bool verified = true;
  SignedPoly lhs, rhs;
  if (o.verify) {
    const BucketTable table = build_table(o);
    lhs = signed_poly(c, Population::FullSn, &table);
    rhs = signed_poly(t.new_spec, Population::FullSn, &table);
    if (t.reciprocal) rhs = rhs.reciprocal();
    rhs = t.factor * rhs;
    verified = lhs == rhs;
  }

  const char* pop_map_name =
      t.population_map == PopulationMap::SwapEvenOdd ? "swap-even-odd" : "identity";
  if (o.output == "json") {
    json out{{"command", "transform"},
             {"which", o.which},
             {"spec", spec_json(c)},
             {"new_spec", spec_json(t.new_spec)},
             {"factor", poly_json(t.factor)},
             {"reciprocal", t.reciprocal},
             {"population_map", pop_map_name},
             {"conjectural", t.conjectural}};
    if (o.verify) {
      out["lhs"] = poly_json(lhs);
      out["rhs"] = poly_json(rhs);
      out["verified"] = verified;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "new spec: " << to_string(t.new_spec) << "\n"
              << "factor: " << t.factor.to_string() << "\n"
              << "reciprocal: " << (t.reciprocal ? "yes" : "no") << "\n"
              << "population map: " << pop_map_name << "\n"
              << "conjectural: " << (t.conjectural ? "yes" : "no") << "\n";
    if (o.verify)
      std::cout << "verified: " << (verified ? "MATCH" : "MISMATCH") << "\n";
  }
  return verified ? kOk : kMismatch;
}

int run_scan(const Options& o) {
  const BucketTable table = build_table(o);
  ScanReport r;
  if (o.suite == "main")
    r = scan_theorem_main(table);
  else if (o.suite == "chessboard")
    r = scan_theorem_chessboard(table);
  else if (o.suite == "quotients")
    r = scan_quotients(table);
  else if (o.suite == "zero")
    r = scan_zero_condition(table);
  else if (o.suite == "transforms")
    r = scan_transforms(table);
  else if (o.suite == "alternating")
    r = scan_alternating(table);
  else
    throw std::invalid_argument("unknown suite " + o.suite);
  print_report(r, o);
  return r.verdict == Verdict::Fail ? kMismatch : kOk;
}

int run_conjecture(const Options& o) {
  ScanReport r;
  if (o.which == "mixed-shift") {
    if (o.n < 1)
      throw std::invalid_argument("conjecture --which mixed-shift needs --n");
    r = check_mixed_shift_conjecture(build_table(o));
  } else if (o.which == "unimodality") {
    r = check_unimodality(o.n_max, o.cap);
  } else {
    throw std::invalid_argument("unknown conjecture " + o.which);
  }
  print_report(r, o);
  return r.verdict == Verdict::Fail ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Signed generating functions of the odd inversion statistic over "
      "descent classes of the symmetric group"};
  app.require_subcommand(1);

  Options o;
  const std::map<std::string, Population> pop_map{
      {"sn", Population::FullSn},
      {"cn", Population::ChessAll},
      {"cn+", Population::ChessEven},
      {"cn-", Population::ChessOdd}};

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "ambient size n")->required();
    cmd->add_option("--ascents", o.ascents, "forced ascent positions")
        ->delimiter(',');
    cmd->add_option("--descents", o.descents, "forced descent positions")
        ->delimiter(',');
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap", o.cap, "enumeration cap override");
  };
  auto add_population = [&](CLI::App* cmd) {
    cmd->add_option("--population,--pop", o.population,
                    "population: sn, cn, cn+ or cn-")
        ->transform(CLI::CheckedTransformer(pop_map));
  };

  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate a class by closed form, oracle, or both");
  add_spec(eval);
  add_population(eval);
  add_common(eval);
  eval->add_option("--method", o.method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "evaluate a class by enumeration");
  add_spec(oracle_cmd);
  add_population(oracle_cmd);
  add_common(oracle_cmd);

  CLI::App* dist = app.add_subcommand(
      "distribution", "odd-length distribution over the whole S_n");
  dist->add_option("--n", o.n, "ambient size n")->required();
  add_common(dist);

  CLI::App* transform =
      app.add_subcommand("transform", "rewrite a class and show the relation");
  add_spec(transform);
  add_common(transform);
  transform
      ->add_option("--which", o.which,
                   "shift-right-ascent, shift-left-ascent, shift-right-descent, "
                   "shift-left-descent, reverse, complement or mixed-shift")
      ->required()
      ->check(CLI::IsMember({"shift-right-ascent", "shift-left-ascent",
                             "shift-right-descent", "shift-left-descent",
                             "reverse", "complement", "mixed-shift"}));
  transform->add_option("--i", o.i, "left end of the run");
  transform->add_option("--k", o.k, "half-length parameter of the run");
  transform->add_option("--comp", o.comp, "component lo,hi for reverse")
      ->delimiter(',');
  transform->add_flag("--verify", o.verify, "check the relation by enumeration");

  CLI::App* scan = app.add_subcommand("scan", "run one verification sweep");
  scan->add_option("--n", o.n, "ambient size n")->required();
  add_common(scan);
  scan->add_option("--suite", o.suite,
                   "main, chessboard, quotients, zero, transforms or alternating")
      ->required()
      ->check(CLI::IsMember({"main", "chessboard", "quotients", "zero",
                             "transforms", "alternating"}));

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "check a conjecture for counterexamples");
  conjecture->add_option("--n", o.n, "ambient size n (mixed-shift)");
  conjecture->add_option("--n-max", o.n_max, "largest n to check (unimodality)");
  add_common(conjecture);
  conjecture->add_option("--which", o.which, "mixed-shift or unimodality")
      ->required()
      ->check(CLI::IsMember({"mixed-shift", "unimodality"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(o, false);
    if (app.got_subcommand(oracle_cmd)) return run_eval(o, true);
    if (app.got_subcommand(dist)) return run_distribution(o);
    if (app.got_subcommand(transform)) return run_transform(o);
    if (app.got_subcommand(scan)) return run_scan(o);
    if (app.got_subcommand(conjecture)) return run_conjecture(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

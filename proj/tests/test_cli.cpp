// End-to-end tests that spawn the command-line binary and check its output
// and exit codes. The binary path is injected by the build as ODDLEN_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include "oddlen/laurent.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ODDLEN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = out;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Parses {"terms": [[e,c],...], "text": "..."} and re-renders the term list,
// which must reproduce the text byte for byte.
void check_poly_roundtrip(const json& poly) {
  REQUIRE(poly.contains("terms"));
  REQUIRE(poly.contains("text"));
  std::vector<std::pair<int, long long>> terms;
  int prev_exponent = 0;
  bool first = true;
  for (const auto& term : poly["terms"]) {
    REQUIRE(term.size() == 2);
    const int e = term[0].get<int>();
    if (!first) CHECK(e > prev_exponent);  // ascending exponents
    prev_exponent = e;
    first = false;
    terms.emplace_back(e, term[1].get<long long>());
  }
  CHECK(oddlen::SignedPoly::from_terms(terms).to_string() ==
        poly["text"].get<std::string>());
}

}  // namespace

TEST_CASE("eval compares closed form with the oracle") {
  const RunResult r =
      run_cli("eval --n 6 --ascents 1 --descents 3,5 --method both");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "closed: x^3 + x^4 + 2x^5 + x^6 + x^7"));
  CHECK(contains(r.output, "oracle: x^3 + x^4 + 2x^5 + x^6 + x^7"));
  CHECK(contains(r.output, "verdict: MATCH"));
}

TEST_CASE("oracle reproduces the published n=8 values") {
  const RunResult nonzero =
      run_cli("oracle --n 8 --ascents 1,2,4 --descents 3,5,6,7");
  CHECK(nonzero.exit_code == 0);
  CHECK(nonzero.output == "-x^6 - x^8 - x^10\n");

  const RunResult zero = run_cli("oracle --n 8 --ascents 1,2,4 --descents 3,5,6");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output == "0\n");
}

TEST_CASE("distribution output") {
  const RunResult r = run_cli("distribution --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 + 4x + x^2\n");
}

TEST_CASE("population selection") {
  CHECK(run_cli("eval --n 2 --method closed").output == "1 - x\n");
  CHECK(run_cli("eval --n 2 --pop cn+ --method closed").output == "1\n");
  CHECK(run_cli("eval --n 2 --pop cn- --method closed").output == "-x\n");
  CHECK(run_cli("eval --n 2 --pop cn --method closed").output == "1 - x\n");
  for (const char* pop : {"sn", "cn", "cn+", "cn-"}) {
    const RunResult r = run_cli(std::string("eval --n 4 --descents 2 --pop ") +
                                pop + " --method both");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "verdict: MATCH"));
  }
}

TEST_CASE("oracle accepts classes the closed form rejects") {
  const RunResult r = run_cli("eval --n 6 --ascents 1 --descents 2 --method oracle");
  CHECK(r.exit_code == 0);
}

TEST_CASE("json outputs round-trip") {
  const RunResult eval_json = run_cli(
      "eval --n 6 --ascents 1 --descents 3,5 --method both --output json");
  CHECK(eval_json.exit_code == 0);
  const json e = json::parse(eval_json.output);
  CHECK(e["match"] == true);
  CHECK(e["spec"]["n"] == 6);
  CHECK(e["spec"]["ascents"] == json::array({1}));
  CHECK(e["spec"]["descents"] == json::array({3, 5}));
  check_poly_roundtrip(e["closed"]);
  check_poly_roundtrip(e["oracle"]);

  const RunResult dist_json = run_cli("distribution --n 4 --output json");
  CHECK(dist_json.exit_code == 0);
  const json d = json::parse(dist_json.output);
  CHECK(d["n"] == 4);
  check_poly_roundtrip(d["value"]);
  CHECK(d["value"]["text"] == "1 + 8x + 6x^2 + 8x^3 + x^4");

  const RunResult neg = run_cli(
      "oracle --n 8 --ascents 1,2,4 --descents 3,5,6,7 --output json");
  const json o = json::parse(neg.output)["oracle"];
  check_poly_roundtrip(o);
  CHECK(o["text"] == "-x^6 - x^8 - x^10");
}

TEST_CASE("scan command") {
  const RunResult text = run_cli("scan --n 6 --suite main");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "verdict: pass"));

  const RunResult js = run_cli("scan --n 5 --suite quotients --output json");
  CHECK(js.exit_code == 0);
  const json r = json::parse(js.output);
  CHECK(r["suite"] == "quotients");
  CHECK(r["n"] == 5);
  CHECK(r["verdict"] == "pass");
  CHECK(r["failures"].empty());
  CHECK(r["cases_checked"].get<long long>() > 0);

  const RunResult zero = run_cli("scan --n 8 --suite zero --output json");
  const json z = json::parse(zero.output);
  CHECK(z["verdict"] == "pass");
  bool found = false;
  for (const auto& obs : z["observations"])
    if (obs.get<std::string>() ==
        "zero without condition: n=8 ascents={1,2,4} descents={3,5,6}")
      found = true;
  CHECK(found);
}

TEST_CASE("transform command") {
  const RunResult r = run_cli(
      "transform --n 6 --ascents 1 --descents 3,4 --which reverse --comp 3,4 "
      "--verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "factor: -x^2"));
  CHECK(contains(r.output, "verified: MATCH"));

  const RunResult js = run_cli(
      "transform --n 6 --ascents 1 --descents 3,4 --which reverse --comp 3,4 "
      "--verify --output json");
  const json t = json::parse(js.output);
  CHECK(t["new_spec"]["ascents"] == json::array({1, 3, 4}));
  CHECK(t["new_spec"]["descents"] == json::array());
  CHECK(t["factor"]["text"] == "-x^2");
  CHECK(t["reciprocal"] == false);
  CHECK(t["verified"] == true);
  check_poly_roundtrip(t["lhs"]);
  check_poly_roundtrip(t["rhs"]);

  const RunResult comp = run_cli("transform --n 4 --which complement");
  CHECK(comp.exit_code == 0);
  CHECK(contains(comp.output, "factor: x^4"));
  CHECK(contains(comp.output, "reciprocal: yes"));
  CHECK(contains(comp.output, "population map: swap-even-odd"));

  const RunResult shift = run_cli(
      "transform --n 5 --ascents 1 --which shift-right-ascent --i 1 --k 0 "
      "--verify");
  CHECK(shift.exit_code == 0);
  CHECK(contains(shift.output, "new spec: n=5 ascents={2} descents={}"));
}

TEST_CASE("conjecture command") {
  const RunResult uni = run_cli("conjecture --which unimodality --n-max 6");
  CHECK(uni.exit_code == 0);
  CHECK(contains(uni.output, "verdict: conjecture-consistent"));
  CHECK(contains(uni.output, "non-unimodal: n=4"));

  const RunResult mixed = run_cli("conjecture --which mixed-shift --n 6");
  CHECK(mixed.exit_code == 0);
  CHECK(contains(mixed.output, "verdict: conjecture-consistent"));

  const RunResult js =
      run_cli("conjecture --which unimodality --n-max 5 --output json");
  const json r = json::parse(js.output);
  CHECK(r["verdict"] == "conjecture-consistent");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("eval --n 6 --bogus-flag 1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("eval").exit_code == 2);  // missing --n
  CHECK(run_cli("eval --n 2 --pop xx").exit_code == 2);
  CHECK(run_cli("scan --n 5 --suite nonsense").exit_code == 2);
  CHECK(run_cli("conjecture --which mixed-shift").exit_code == 2);  // no --n

  const RunResult mixed_closed =
      run_cli("eval --n 6 --ascents 1 --descents 2 --method closed");
  CHECK(mixed_closed.exit_code == 2);
  CHECK(contains(mixed_closed.output, "meets descents at {2}"));

  const RunResult over_cap = run_cli("distribution --n 12");
  CHECK(over_cap.exit_code == 2);
  CHECK(contains(over_cap.output, "exceeds the enumeration cap"));

  const RunResult bad_spec = run_cli("eval --n 4 --ascents 7 --method oracle");
  CHECK(bad_spec.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  const RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "eval"));
  CHECK(contains(r.output, "distribution"));
}

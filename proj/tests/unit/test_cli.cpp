#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "inertia/cli/command.hpp"
#include "inertia/cli/run.hpp"

using namespace inertia::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& argv) {
  std::ostringstream out, err;
  int code = main_entry(argv, out, err);
  return {code, out.str(), err.str()};
}

UsageErrc usage_code(const std::vector<std::string>& argv) {
  try {
    parse_command(argv);
  } catch (const UsageError& e) {
    return e.code();
  }
  FAIL("no usage error");
  return UsageErrc::BadOption;
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("inertia_lab_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kFrob21 =
    R"({"kind":"semidirect","normal":{"kind":"abelian","factors":[7]},"acting":{"kind":"abelian","factors":[3]},"action":{"0":[[2,3,4,5,6,0,1]]}})";
// The C7 generator written as an element of that product.
const char* kFrob21Inertia = R"([{"normal":[1,2,3,4,5,6,0],"acting":[0,1,2]}])";

}  // namespace

TEST_CASE("parse examples") {
  auto c = parse_command({"realize-abelian", "--p", "5", "--g", "4,4", "--i", "4"});
  CHECK(c.verb == Verb::RealizeAbelian);
  CHECK(c.p == 5u);
  CHECK(c.g_factors == std::vector<std::uint64_t>{4, 4});
  CHECK(c.i_factors == std::vector<std::uint64_t>{4});
  auto a = parse_command({"curve-analyze", "--p", "3", "--a", "1,1,1,-1,0"});
  CHECK(a.verb == Verb::CurveAnalyze);
  CHECK(a.a_invariants == std::vector<std::string>{"1", "1", "1", "-1", "0"});
  CHECK(usage_code({"gl2-candidates", "--p", "15"}) == UsageErrc::InvalidPrime);
}

TEST_CASE("usage errors") {
  CHECK(usage_code({"frobnicate"}) == UsageErrc::UnknownVerb);
  CHECK(usage_code({}) == UsageErrc::UnknownVerb);
  CHECK(usage_code({"realize-abelian", "--g", "4"}) == UsageErrc::MissingOption);
  CHECK(usage_code({"gl2-candidates", "--p", "2"}) == UsageErrc::InvalidPrime);
  CHECK(usage_code({"gl2-candidates", "--p", "5", "--bogus"}) == UsageErrc::BadOption);
  CHECK(usage_code({"curve-analyze", "--p", "3"}) == UsageErrc::MissingOption);
  CHECK(invoke({"gl2-candidates", "--p", "15"}).code == 2);
  CHECK(!usage().empty());
}

TEST_CASE("bounds from the environment, flags win") {
  setenv("INERTIA_LAB_BOUNDS", R"({"closure":1234,"ell":77})", 1);
  auto c = parse_command({"gl2-candidates", "--p", "5"});
  CHECK(c.bounds.closure == 1234);
  CHECK(c.bounds.ell == 77);
  auto d = parse_command({"gl2-candidates", "--p", "5", "--ell-bound", "99"});
  CHECK(d.bounds.ell == 99);
  unsetenv("INERTIA_LAB_BOUNDS");
  CHECK(parse_command({"gl2-candidates", "--p", "5"}).bounds.ell == 500);
}

TEST_CASE("run examples") {
  auto v = invoke({"verify-example-6-2", "--format", "json"});
  CHECK(v.code == 0);
  auto vj = json::parse(v.out);
  CHECK(vj["intermediate_ranks"].back() == 3);

  auto c = invoke({"curve-analyze", "--label", "11.a2", "--p", "3", "--format", "json"});
  CHECK(c.code == 0);
  auto cj = json::parse(c.out);
  CHECK(cj["reduction"] == "ordinary");
  CHECK(cj["j_mod_p2"] == 7);
  CHECK(cj["j_lift_mod_p2"] == 1);
  CHECK(cj["gross_diagonal"] == false);
  CHECK(cj["inertia_candidate"] == json::parse(R"({"kind":"wild","a":0,"b":1})"));
  CHECK(cj["j"]["num"] == "-122023936");
  CHECK(cj["j"]["den"] == "161051");

  auto n = invoke({"realize-abelian", "--p", "7", "--g", "2,2", "--i", "2,2", "--format", "json"});
  CHECK(n.code == 1);
  CHECK(json::parse(n.out)["reason"] == "I is not a quotient of Z_p^×");
}

TEST_CASE("negative a-invariants and json errors") {
  auto r = invoke({"curve-analyze", "--p", "5", "--a", "0,-1,1,-10,-20", "--format", "json"});
  CHECK(r.code == 1);  // 11.a2 at 5 is not certified surjective
  auto at11 = invoke({"curve-analyze", "--p", "11", "--label", "11.a2", "--format", "json"});
  CHECK(at11.code == 1);
  CHECK(json::parse(at11.out)["good"] == false);
  auto bad = invoke({"curve-analyze", "--p", "5", "--a", "0,0,0,0,0", "--format", "json"});
  CHECK(bad.code == 3);
  CHECK(json::parse(bad.out).contains("error"));
}

TEST_CASE("gl2 verbs") {
  auto r = invoke({"gl2-candidates", "--p", "3", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["candidates"].size() == 9);
  auto q = invoke({"gl2-requirement", "--p", "5", "--candidate", R"({"kind":"nonsplit","index":1})", "--format", "json"});
  CHECK(q.code == 0);
  auto qj = json::parse(q.out);
  CHECK(qj["requirement"]["weight"] == 2);
  CHECK(qj["requirement"]["reduction"] == "supersingular");
}

TEST_CASE("group-info") {
  auto r = invoke({"group-info", "--group", kFrob21, "--p", "7", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["order"] == 21);
  CHECK(j["sylow"]["order"] == 7);
}

TEST_CASE("determinism") {
  std::vector<std::string> argv{"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "2",
                                "--format", "json"};
  auto a = invoke(argv), b = invoke(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("local witness round trip") {
  auto r = invoke({"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto report = json::parse(r.out);
  CHECK(report["status"] == "realizable");
  CHECK(report["witness"]["tame"]["e"] == 7);
  auto whole = write_temp("odd_report.json", r.out);
  auto v = invoke({"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "2", "--verify-witness", whole});
  CHECK(v.code == 0);
  auto block = write_temp("odd_witness.json", report["witness"].dump());
  CHECK(invoke({"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "2", "--verify-witness", block})
            .code == 0);
  auto tampered = report["witness"];
  tampered["tame"]["e"] = 3;
  auto bad = write_temp("odd_bad.json", tampered.dump());
  CHECK(invoke({"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "2", "--verify-witness", bad})
            .code == 1);
}

TEST_CASE("global mode") {
  auto r = invoke({"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "3", "--global"});
  CHECK(r.code == 1);
  auto ok = invoke({"realize-odd", "--group", kFrob21, "--inertia", kFrob21Inertia, "--p", "2", "--global",
                    "--format", "json"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["mode"] == "global");
}

TEST_CASE("abelian witness round trip") {
  auto r = invoke({"realize-abelian", "--p", "5", "--g", "4,4", "--i", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  auto path = write_temp("abelian.json", r.out);
  CHECK(invoke({"realize-abelian", "--p", "5", "--g", "4,4", "--i", "4", "--verify-witness", path}).code == 0);
  auto j = json::parse(r.out);
  j["witness"]["primes"][0] = 7;
  auto bad = write_temp("abelian_bad.json", j.dump());
  CHECK(invoke({"realize-abelian", "--p", "5", "--g", "4,4", "--i", "4", "--verify-witness", bad}).code == 1);
}

TEST_CASE("curve-construct") {
  auto r = invoke({"curve-construct", "--p", "17", "--kind", "supersingular", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["validated"] == true);
  CHECK(invoke({"curve-construct", "--p", "13"}).code != 0);
}

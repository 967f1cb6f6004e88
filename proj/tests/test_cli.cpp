#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
using namespace reflift::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "reflift");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check-element") {
  const auto r = run_cli({"check-element", "--group", "G(3,3,2)", "--element", "perm=[1,2];exp=[1,2]"});
  CHECK(r.code == kLifts);
  CHECK(r.out.find("oracle: lifts") != std::string::npos);
  CHECK(r.out.find("fast: lifts") != std::string::npos);

  const auto j = run_cli(
      {"check-element", "--group", "S(4)", "--element", "perm=[2,1,3,4];exp=[0,0,0,0]", "--json"});
  CHECK(j.code == kDoesNotLift);
  const auto doc = json::parse(j.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  for (const auto& rep : doc) {
    CHECK(rep.at("lifts") == false);
    CHECK(rep.at("witness").at("hyperplane") == "H[1,2;0]");
    CHECK(rep.at("witness").at("power") == 1);
  }

  const auto fast =
      run_cli({"check-element", "--group", "G(4,4,2)", "--element", "perm=[1,2];exp=[1,3]", "--method", "fast", "--json"});
  CHECK(fast.code == kDoesNotLift);
  CHECK(json::parse(fast.out).at("method") == "fast");
}

TEST_CASE("parse errors exit 2") {
  CHECK(run_cli({"check-element", "--group", "G(6,4,2)", "--element", "perm=[1,2];exp=[0,0]"}).code == kParseError);
  CHECK(run_cli({"check-element", "--group", "G(3,3,2)", "--element", "perm=[1,2];exp=[1,1]"}).code == kParseError);
  CHECK(run_cli({"check-element", "--group", "G(3,3,2)", "--element", "nonsense"}).code == kParseError);
  CHECK(run_cli({"check-element", "--group", "G(3,3,2)"}).code == kParseError);
  CHECK(run_cli({"check-element", "--group", "S(3)", "--element", "perm=[1,2,3];exp=[0,0,0]", "--method", "x"}).code ==
        kParseError);
  CHECK(run_cli({"no-such-command"}).code == kParseError);
  CHECK(run_cli({}).code == kParseError);
  CHECK(run_cli({"survey", "--grid", "d<=2,e<=2"}).code == kParseError);
  CHECK(run_cli({"frobenius", "--p", "9", "--q", "3"}).code == kParseError);
}

TEST_CASE("check-subgroup") {
  const auto ok = run_cli({"check-subgroup", "--group", "S(3)", "--generators", "perm=[2,3,1];exp=[0,0,0]", "--json"});
  CHECK(ok.code == kLifts);
  const auto doc = json::parse(ok.out);
  CHECK(doc.at("order") == 3);
  CHECK(doc.at("orbits") == 1);
  CHECK(doc.at("faithful") == true);

  const auto bad = run_cli({"check-subgroup", "--group", "S(4)", "--generators",
                            "perm=[2,1,3,4];exp=[0,0,0,0];perm=[1,2,4,3];exp=[0,0,0,0]"});
  CHECK(bad.code == kDoesNotLift);
  CHECK(bad.out.find("subgroup of order 4") != std::string::npos);
}

TEST_CASE("classify and survey") {
  const auto c = run_cli({"classify", "--group", "G(4,4,2)", "--json"});
  CHECK(c.code == kLifts);
  const auto doc = json::parse(c.out);
  CHECK(doc.at("bieberbach_formula") == true);
  CHECK(doc.at("bieberbach_bruteforce") == true);

  const auto s = run_cli({"survey", "--grid", "d<=2,e<=3,r<=3", "--json"});
  CHECK(s.code == kLifts);
  CHECK(json::parse(s.out).size() == 18);
  const auto t = run_cli({"survey", "--grid", "d=1,e≤2,r≤2"});
  CHECK(t.code == kLifts);
  CHECK(t.out.find("G(2,2,2)") != std::string::npos);
  CHECK(run_cli({"survey", "--grid", "d<=1,e<=1,r<=8", "--guard", "100"}).code == kLifts);
}

TEST_CASE("frobenius and cocycle") {
  const auto f = run_cli({"frobenius", "--p", "7", "--q", "3", "--json"});
  CHECK(f.code == kLifts);
  const auto doc = json::parse(f.out);
  CHECK(doc.at("order") == 21);
  CHECK(doc.at("cycle_structure_ok") == true);
  CHECK(doc.at("in_F_p") == true);

  const auto c = run_cli({"cocycle", "--group", "S(5)", "--generators", "perm=[2,3,4,5,1];exp=[0,0,0,0,0]", "--random",
                          "25", "--json"});
  CHECK(c.code == kLifts);
  const auto cd = json::parse(c.out);
  CHECK(cd.at("solved") == 25);
  CHECK(cd.at("fixed_lattice_rank") == 2);
}

TEST_CASE("guard exceeded exits 4") {
  const auto r = run_cli({"check-subgroup", "--group", "G(1000,1,2)", "--generators",
                          "perm=[1,2];exp=[1,0] perm=[2,1];exp=[0,0]"});
  CHECK(r.code == kGuardExceeded);
  CHECK(r.err.find("guard exceeded") != std::string::npos);
}

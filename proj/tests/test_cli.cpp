#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "shakekit/cli.hpp"
#include "shakekit/io.hpp"

using shakekit::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json payload() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = shakekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SHAKEKIT_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("alexander command") {
  auto r = run({"alexander", fixture("a1.json")});
  REQUIRE(r.code == 0);
  CHECK(r.payload()["alexander"] == "t^-2 - 3*t^-1 + 5 - 3*t + t^2");
  CHECK(r.payload()["coefficients"][0] == json::array({-2, 1}));
  CHECK(run({"alexander", fixture("zero.json")}).payload()["alexander"] == "1");
  r = run({"alexander", fixture("odd_dim.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("OddDimension") != std::string::npos);
  CHECK(run({"alexander", fixture("malformed.json")}).code == 2);
  CHECK(run({"alexander", fixture("does_not_exist.json")}).code == 2);
  CHECK(run({"alexander", fixture("not_json.txt")}).code == 2);
}

TEST_CASE("signature command") {
  CHECK(run({"signature", "--goeritz", fixture("torus_n3.json")}).payload()["signature"] == -6);
  CHECK(run({"signature", "--seifert", fixture("a1.json")}).payload()["signature"] == 0);
  CHECK(run({"signature", "--seifert", fixture("oddcase_6x6.json")}).payload()["signature"] == 2);
  CHECK(run({"signature"}).code == 2);
  CHECK(run({"signature", "--goeritz", fixture("torus_n3.json"), "--seifert", fixture("a1.json")}).code == 2);
}

TEST_CASE("lt command") {
  CHECK(run({"lt", fixture("oddcase_6x6.json"), "--root", "1/2"}).payload()["signature"] == 2);
  CHECK(run({"lt", fixture("a1.json"), "--root", "1/2"}).payload()["signature"] == 0);
  auto r = run({"lt", fixture("trefoil.json"), "--root", "1/6"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NearSingular") != std::string::npos);
  CHECK(r.err.find("--theta") != std::string::npos);
  CHECK(run({"lt", fixture("trefoil.json"), "--theta", "3.0"}).payload()["signature"] == -2);
  CHECK(run({"lt", fixture("trefoil.json"), "--root", "0/1"}).code == 1);
  CHECK(run({"lt", fixture("trefoil.json"), "--root", "x/2"}).code == 2);
  CHECK(run({"lt", fixture("trefoil.json")}).code == 2);
}

TEST_CASE("goeritz command") {
  auto r = run({"goeritz", fixture("orientable.json"), "--two-twists", "1,-2"});
  REQUIRE(r.code == 0);
  CHECK(r.payload()["two_twists"]["stable"] == true);
  CHECK(r.payload()["two_twists"]["form"]["eta"] == 1);
  CHECK(r.payload()["two_twists"]["signature"] == r.payload()["signature"]);
  CHECK(run({"goeritz", fixture("orientable.json"), "--two-twists", "1"}).code == 2);
  CHECK(run({"goeritz", fixture("orientable.json"), "--two-twists", "1,z"}).code == 2);
  CHECK(run({"goeritz", fixture("torus_n3.json"), "--two-twists", "1"}).code == 1);
}

TEST_CASE("pattern commands") {
  CHECK(run({"pattern", "normalize", "((P*)*)"}).payload()["normal_form"] == "P");
  CHECK(run({"pattern", "normalize", "(PoQ)*"}).payload()["normal_form"] == "Q* o P*");
  CHECK(run({"pattern", "normalize", "K_3*", "--wrapping-one", "K"}).payload()["normal_form"] == "K");
  CHECK(run({"pattern", "normalize", "P^0"}).code == 2);
  CHECK(run({"pattern", "normalize", "(P"}).code == 2);

  auto r = run({"pattern", "eval", "(bar(P_1*)_3)^2 o (P_1)^2", "--assign", fixture("assignment.json")});
  REQUIRE(r.code == 0);
  CHECK(r.payload()["value"] == -2);
  r = run({"pattern", "eval", "P_2 o K o P*_1", "--assign", fixture("table_assignment.json")});
  CHECK(r.payload()["value"] == 7 + 0 - 1);
  CHECK(run({"pattern", "eval", "Q", "--assign", fixture("table_assignment.json")}).code == 1);
  CHECK(run({"pattern", "eval", "P_9", "--assign", fixture("table_assignment.json")}).code == 1);

  r = run({"pattern", "retrace", "--framing", "-2", "--complexity", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.payload()["term"] == "bar(P_1*)_-2^2 o P_1^2");
  CHECK(run({"pattern", "retrace", "--framing", "1", "--complexity", "0"}).code == 1);
}

TEST_CASE("certify command") {
  auto r = run({"certify", "--framing", "1", "--complexity", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.payload()["bound"] == 3);
  CHECK(r.payload()["witness"] == json{{"k", 1}, {"m", 2}});
  r = run({"certify", "--framing", "2", "--complexity", "2"});
  CHECK(r.payload()["bound"].get<int>() >= 2);
  CHECK(r.payload()["witness"]["m"] == 3);
  r = run({"certify", "--framing", "0", "--complexity", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("DomainError") != std::string::npos);
  CHECK(run({"certify", "--framing", "6", "--complexity", "1", "--max-order", "5"}).code == 1);
  CHECK(run({"certify", "--framing", "two", "--complexity", "1"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"certify", "--framing", "5", "--complexity", "4"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify command") {
  auto r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--json"});
  CHECK(r.code == 0);
  CHECK(r.payload()["passed"] == true);
  CHECK(r.payload()["checks"].size() == 10);
  r = run({"verify", "--json", "--a1-fixture", fixture("a1_corrupted.json")});
  CHECK(r.code == 1);
  CHECK(r.payload()["checks"][1]["passed"] == false);
}

TEST_CASE("usage errors and tolerance override") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  setenv("SHAKEKIT_TOL", "nonsense", 1);
  CHECK(run({"lt", fixture("a1.json"), "--root", "1/2"}).code == 2);
  setenv("SHAKEKIT_TOL", "1e-6", 1);
  CHECK(run({"lt", fixture("a1.json"), "--root", "1/2"}).payload()["tolerance"] == 1e-6);
  unsetenv("SHAKEKIT_TOL");
}

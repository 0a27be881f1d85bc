#include <doctest.h>

#include "shakekit/errors.hpp"
#include "shakekit/io.hpp"

using namespace shakekit;
using io::json;

TEST_CASE("matrices from JSON") {
  CHECK(io::int_matrix_from_json(json::parse(R"([[1, 2], [3, 4]])")) == IntMatrix::from_rows({{1, 2}, {3, 4}}));
  CHECK(io::int_matrix_from_json(json::parse(R"({"dim": 0, "entries": []})")).dim() == 0);
  CHECK_THROWS_AS(io::int_matrix_from_json(json::parse(R"({"dim": 3, "entries": [[1]]})")), InputError);
  CHECK_THROWS_AS(io::int_matrix_from_json(json::parse(R"([[1, 2.5], [3, 4]])")), InputError);
  CHECK_THROWS_AS(io::int_matrix_from_json(json::parse(R"({"rows": []})")), InputError);
  const auto lm = io::laurent_matrix_from_json(json::parse(R"([["t - 1", 2], [0, "t^-1"]])"));
  CHECK(det_laurent(lm) == LaurentPoly::parse("1 - t^-1"));
  CHECK_THROWS_AS(io::laurent_matrix_from_json(json::parse(R"([["t +"]])")), InputError);
  CHECK(io::to_json(IntMatrix::from_rows({{1}})).dump() == R"({"dim":1,"entries":[[1]]})");
}

TEST_CASE("Goeritz data from JSON") {
  const auto gd = io::goeritz_from_json(json::parse(R"({"G": [[3]], "nonorientable": [0]})"));
  CHECK(classical_signature_goeritz(gd) == -2);
  const auto bands = io::goeritz_from_json(json::parse(R"({"bands": [{"orientable": false, "half_twists": 3}]})"));
  CHECK(bands.g == gd.g);
  CHECK(io::to_json(gd)["eta"] == 3);
  CHECK_THROWS_AS(io::goeritz_from_json(json::parse(R"({"G": [[1, 2], [3, 1]]})")), InputError);
  CHECK_THROWS_AS(io::goeritz_from_json(json::parse(R"({"G": [[1]], "nonorientable": [-1]})")), InputError);
  CHECK_THROWS_AS(io::goeritz_from_json(json::parse(R"({"bands": [{"half_twists": 3}]})")), InputError);
}

TEST_CASE("certificate round trip") {
  const auto cert = certify_complexity(-3, 2);
  const json j = io::to_json(cert);
  CHECK(j["mirror"] == true);
  CHECK(j["assumptions"].size() == 3);
  CHECK(io::certificate_from_json(j) == cert);
}

TEST_CASE("assignments from JSON") {
  const auto spec = io::assignment_from_json(json::parse(
      R"({"atoms": {"P": {"values": {"1": 4, "-2": 1}}, "R": {"family": "A_n", "root": "1/2"}},
          "wrapping_one": ["K"]})"));
  CHECK(spec.wrapping_one == std::set<std::string>{"K"});
  CHECK(spec.assignment.at("P")(-2) == 1);
  CHECK(spec.assignment.at("R")(2) == 1);
  CHECK_THROWS_AS(io::assignment_from_json(json::parse(R"({"atoms": {"P": {"values": {"x": 1}}}})")), InputError);
  CHECK_THROWS_AS(io::assignment_from_json(json::parse(R"({"atoms": {"P": {"family": "B_n"}}})")), InputError);
  CHECK_THROWS_AS(io::assignment_from_json(json::parse(R"({"atoms": {"P": {}}})")), InputError);
}

TEST_CASE("loading files") {
  CHECK_THROWS_AS(io::load_json("/nonexistent/file.json"), InputError);
}

#include "veesys/builders.hpp"
#include "veesys/restriction.hpp"
#include "veesys/serialization.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>

using namespace veesys;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    from_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("export, import, export is byte identical") {
  for (const CovectorSystem& s : {root_system_a(4), root_system_f4(std::sqrt(2.0)), root_system_h4(),
                                  theorem4(1.0 / std::sqrt(2.0)), deformed_a({2, 1, 1})}) {
    CAPTURE(s.name);
    const std::string first = to_json(s);
    const CovectorSystem back = from_json(first);
    CHECK(to_json(back) == first);
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(back.covectors[i] == s.covectors[i]);
    CHECK(back.embedding == s.embedding);
  }
}

TEST_CASE("system file layout") {
  const std::string text = to_json(root_system_b(2, 1.0));
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["dim"] == 2);
  CHECK(doc["covectors"].size() == 4);
  CHECK(doc["name"] == "B:n=2,lambda=1");
  CHECK(doc["params"]["lambda"] == 1.0);
  CHECK(text.find("\"covectors\"") < text.find("\"dim\""));
  CHECK(text.find("\"dim\"") < text.find("\"name\""));
  CHECK(text.find("-0.0") == std::string::npos);
}

TEST_CASE("import normalizes covectors") {
  const CovectorSystem s = from_json(R"({"dim": 2, "covectors": [[-1, 0], [0, 0], [2, 0], [0, 1]]})");
  REQUIRE(s.size() == 2);
  CHECK(s.covectors[0][0] == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("malformed documents") {
  CHECK(code_of("not json") == ErrorCode::ParseError);
  CHECK(code_of("[1, 2]") == ErrorCode::ParseError);
  CHECK(code_of(R"({"covectors": [[1]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"dim": 2, "covectors": [[1, 0, 0]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"dim": 2, "covectors": [[1, "x"]]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"dim": 2, "covectors": [[1, 0]], "params": {"a": "b"}})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"dim": 0, "covectors": []})") == ErrorCode::ParseError);
  CHECK_THROWS_AS(load_system("/nonexistent/system.json"), Error);
}

TEST_CASE("covector literals") {
  const CovectorSystem e8 = root_system_e(8);
  const Covector c = parse_covector_literal("e7-e8", e8);
  CHECK(c[6] == 1.0);
  CHECK(c[7] == -1.0);
  const Covector d = parse_covector_literal(" -0.5*e3 + 2e4 ", e8);
  CHECK(d[2] == -0.5);
  CHECK(d[3] == 2.0);
  CHECK_THROWS_AS(parse_covector_literal("e9", e8), Error);
  CHECK_THROWS_AS(parse_covector_literal("e1 e2", e8), Error);
  CHECK_THROWS_AS(parse_covector_literal("", e8), Error);
  CHECK_THROWS_AS(parse_covector_literal("x1", e8), Error);

  // A_3 lives in the sum-zero hyperplane; literals use the four outer coordinates.
  const CovectorSystem a3 = root_system_a(3);
  const Covector r = parse_covector_literal("e1-e2", a3);
  CHECK(r.size() == 3);
  CHECK(collinear(r, a3.covectors[0], 1e-12));
}

TEST_CASE("along lists mix literals and indices") {
  const CovectorSystem e8 = root_system_e(8);
  const auto u = parse_along("e7-e8, e7+e8", e8);
  REQUIRE(u.size() == 2);
  CHECK(restrict_along(e8, u).system.size() == 68);
  const auto v = parse_along("0,e1-e2", e8);
  CHECK(v[0] == e8.covectors[0]);
  CHECK_THROWS_AS(parse_along("999", e8), Error);
  CHECK_THROWS_AS(parse_along("e1-e2,,e3", e8), Error);
}

TEST_CASE("restricted systems keep their embedding through files") {
  const CovectorSystem a3 = root_system_a(3);
  const auto r = restrict_along(a3, parse_along("e1-e2", a3));
  const CovectorSystem back = from_json(to_json(r.system));
  CHECK(back.ambient_dim() == 4);
  // e3-e4 is a member of the restriction; the literal finds it.
  const Covector c = parse_covector_literal("e3-e4", back);
  bool found = false;
  for (const auto& m : back.covectors) found = found || collinear(m, c, 1e-9);
  CHECK(found);
}

#include <doctest.h>

#include "oracles.hpp"
#include "tlc/error.hpp"
#include "tlc/json_io.hpp"

using namespace tlc;

TEST_CASE("GaussDiagram json") {
  const Json j = to_json(parse_gauss_code("a b b a"));
  CHECK(j.dump() == R"j({"k":2,"word":[1,2,2,1]})j");
  CHECK(to_json(GaussDiagram()).dump() == R"j({"k":0,"word":[]})j");
}

TEST_CASE("PlaneTree json") {
  CHECK(to_json(make_path(3)).dump() == R"j({"n":3,"rotation":[[1],[0,2],[1]]})j");
  CHECK(to_json(PlaneTree()).dump() == R"j({"n":1,"rotation":[[]]})j");
}

TEST_CASE("NcpdTree json mirrors the text form") {
  const Json j = to_json(parse_tree("(>()-())"));
  CHECK(j["code"] == "(>()-())");
  CHECK(j["root"].dump() == R"j({"children":[{"edge":">","children":[]},{"edge":"-","children":[]}]})j");
}

TEST_CASE("tree json round trip, n <= 6") {
  for (const auto& t : oracle::all_ncpd_trees(6)) {
    const NcpdTree back = tree_from_json(to_json(t));
    REQUIRE(format_tree(back) == format_tree(t));
    REQUIRE(canonical_code(back) == canonical_code(t));
  }
}

TEST_CASE("tree_from_json rejects bad structure") {
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"j({"code":"()"})j")), ParseError);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"j({"root":{"children":[{"edge":"?","children":[]}]}})j")), ParseError);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"j({"root":{"children":[{"children":[]}]}})j")), ParseError);
  CHECK_THROWS_AS(tree_from_json(Json::parse(R"j({"root":[]})j")), ParseError);
  // colliding directions are a domain error, not a parse error
  try {
    tree_from_json(Json::parse(
        R"j({"root":{"children":[{"edge":">","children":[{"edge":"<","children":[]}]}]}})j"));
    FAIL("expected Colliding");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Colliding);
  }
}

TEST_CASE("BoundReport json") {
  const Json path = to_json(min_inflections(parse_tree("(-()-())")));
  CHECK(path["lower"] == 0);
  CHECK(path["exact"] == 2);
  CHECK(path["upper"] == 4);
  CHECK(path["jt"] == 1);
  CHECK(path["bl"] == 1);
  CHECK(path["witness"].size() == 4);

  CHECK(to_json(min_inflections(parse_tree("()"))).dump() ==
        R"j({"lower":0,"exact":0,"upper":0,"jt":0,"bl":0,"witness":[]})j");

  const Json cut = to_json(min_inflections(parse_tree("(-(-()))"), 2));
  CHECK(cut["exact"].is_null());
  CHECK(cut["witness"].is_null());
}

TEST_CASE("CensusRow json and csv") {
  const CensusRow p4 = orbit_count(make_path(4));
  const Json j = to_json(p4);
  CHECK(j["center"] == "edge");
  CHECK(j["orbits"] == 11);
  CHECK(j["formula"] == 11);
  CHECK(j["agree"] == true);
  CHECK_FALSE(j.contains("stabilizers"));

  const Json star = to_json(orbit_count(make_star(7)));
  REQUIRE(star.contains("stabilizers"));
  CHECK(star["stabilizers"]["direct"]["2"] == 6);
  CHECK(star["stabilizers"]["literal"]["2"] == 2);
  CHECK(star["stabilizers"]["literal_agrees"] == false);

  const std::string csv = census_csv(census_table(4, 3));
  CHECK(csv.rfind("n,tree_code,p,center,total,orbits,formula,agree\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find(",edge,20,11,11,true\n") != std::string::npos);
}

#include <doctest.h>

#include "fod/error.hpp"
#include "fod/serialize.hpp"
#include "support.hpp"

using namespace fod;

namespace {

Json remark_doc() { return *bundled_dataset("remark-A2"); }

std::string load_error(const Json& doc) {
  try {
    load_endo_structure(doc);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("rationals and matrices") {
  CHECK(to_json(parse_rational("-4/6")) == "-2/3");
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));
  CHECK_THROWS_WITH_AS(rational_from_json(Json(0.5), "$.x"), doctest::Contains("$.x"), ValidationError);
  CHECK_THROWS_AS(qmatrix_from_json(Json::parse(R"([["1","2"],["3"]])")), ValidationError);
  const QMatrix m = qmatrix_from_json(Json::parse(R"([["1","2"],["3","4/3"]])"));
  CHECK(to_json(m) == Json::parse(R"([["1","2"],["3","4/3"]])"));
}

TEST_CASE("subspaces are canonicalized on input") {
  auto qi = test::gaussian();
  const auto v = subspace_from_json(Json::parse(R"([[["0","1"],["1","0"]]])"), qi, 2);
  CHECK(to_json(v) == Json::parse(R"([[["1","0"],["0","-1"]]])"));
  CHECK_THROWS_AS(subspace_from_json(Json::parse(R"([[["0","1"]]])"), qi, 2), ValidationError);
}

TEST_CASE("documents load with JSON-path diagnostics") {
  CHECK(load_error(remark_doc()).empty());

  auto doc = remark_doc();
  doc["blocks"][1]["factor"]["multiplicity"] = 3;
  CHECK(load_error(doc).find("$.blocks[1].factor.multiplicity") == 0);

  doc = remark_doc();
  doc["blocks"][0]["algebra"]["poly"] = Json::array({-1, 0, 1});
  CHECK(load_error(doc).find("$.blocks[0].algebra") == 0);

  doc = remark_doc();
  doc["group"]["elements"][1]["maps"][0]["sigma"] = "frob";
  CHECK(load_error(doc) == "$.group.elements[1].maps[0].sigma: unknown lift \"frob\"");

  doc = remark_doc();
  doc["blocks"][0]["lifts"][0]["matrix"] = Json::parse(R"([["1","0"],["0","2"]])");
  CHECK(load_error(doc).find("$.blocks[0].lifts[0]") == 0);

  doc = remark_doc();
  doc["group"]["elements"].erase(0);
  CHECK(load_error(doc).find("identity") != std::string::npos);

  doc = remark_doc();
  doc["fields"]["table"]["id"] = "Q";
  CHECK(load_error(doc).find("$.fields") == 0);

  doc = remark_doc();
  doc["group"]["elements"][1]["tau"] = Json::array({2, 1});
  CHECK(load_error(doc).find("$.group.elements[1]") == 0);

  doc = remark_doc();
  doc.erase("fields");
  CHECK(load_error(doc) == "$: missing required key \"fields\"");
}

TEST_CASE("linear-map block maps are decomposed") {
  auto doc = remark_doc();
  const auto loaded = load_endo_structure(doc);
  const auto& conj = loaded.structure.galois.element("conj");
  doc["group"]["elements"][1]["maps"][0] = {{"linear_map", to_json(conj.linear_maps[0])}};
  const auto reloaded = load_endo_structure(doc);
  CHECK(reloaded.from_linear_map[1][0]);
  CHECK_FALSE(reloaded.from_linear_map[1][1]);
  CHECK(reloaded.structure.galois.element("conj").same_action(conj));
  CHECK(reloaded.structure.galois.element("conj").maps[0].sigma_name == "conj");
}

TEST_CASE("sigma given as a matrix is normalized into the lift table") {
  auto doc = remark_doc();
  doc["group"]["elements"][1]["maps"][0]["sigma"] = Json::parse(R"([["1","0"],["0","-1"]])");
  const auto loaded = load_endo_structure(doc);
  CHECK(loaded.structure.galois.element("conj").maps[0].sigma_name == "conj");
}

TEST_CASE("ideal documents") {
  const auto e = test::dataset("remark-A2").structure;
  const Json bare = Json::parse(R"([[[["1","0"],["0","1"]]], [[["1"],["0"]]]])");
  const auto ideal = ideal_from_json(bare, e.algebra());
  CHECK(ideal_from_json(Json{{"ideal", bare}}, e.algebra()) == ideal);
  CHECK(to_json(ideal) == bare);
  CHECK_THROWS_AS(ideal_from_json(Json::array({bare[0]}), e.algebra()), ValidationError);
}

TEST_CASE("property: survey output round-trips") {
  const auto e = test::dataset("remark-A2").structure;
  const auto report = subvariety_survey(e, {1, 1}, 10, 42);
  const Json j = to_json(report, e);
  const std::string text = j.dump();
  const Json back = Json::parse(text);
  CHECK(back.dump() == text);
  for (const auto& w : back["witnesses"]) {
    const auto ideal = ideal_from_json(w["ideal"], e.algebra());
    CHECK(to_json(ideal) == w["ideal"]);
    CHECK(stabilizer_names(ideal, e.galois) == std::vector<std::string>{"id"});
  }
}

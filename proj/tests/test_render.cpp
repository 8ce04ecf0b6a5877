#include <doctest.h>

#include "dmu/render.hpp"

using namespace dmu;

TEST_CASE("CSV quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_row({"ℕ_{2,3}", "x"}) == "\"ℕ_{2,3}\",x\r\n");
}

TEST_CASE("text tables align by code points") {
  const auto t = text_table({"a", "bb"}, {{"ℕ_1", "x"}});
  CHECK(t == "a    bb\n---  --\nℕ_1  x\n");
}

TEST_CASE("catalog JSON") {
  const auto c = load_catalog();
  const Json j = to_json(c);
  REQUIRE(j.size() == 85);
  const auto& e02 = j[32];
  CHECK(e02["row_id"] == "E02");
  CHECK(e02["weights"][0] == "1/3");
  CHECK(e02["s_indices"].size() == 10);
  CHECK(e02["recomputed_t"] == false);
  CHECK(e02["witness"]["t1"] == Json::array({2, 3, 4, 5, 6, 7}));
  CHECK(j[0]["printed_extremal"] == "Max");
  CHECK(j[2]["printed_extremal"].is_null());
  CHECK(j[77]["printed_scaled_weights"] == "43322");
  CHECK(dump(j, true).find('\n') == std::string::npos);
  CHECK(dump(j, false).find('\n') != std::string::npos);
}

TEST_CASE("chart and transversality JSON") {
  const Json j = to_json(transversality(3));
  CHECK(j["verdict"] == "non_transversal");
  CHECK(j["charts"][0]["restriction"] == "-27 * (c2^2)");
  CHECK(j["charts"][1]["verdict"] == "empty_intersection");
}

TEST_CASE("verification JSON carries the interpretation and both class counts") {
  const Json j = to_json(verify(load_catalog()));
  CHECK(j["mode"] == "strict");
  CHECK(j["clean"] == false);
  CHECK(j["equivalence_classes"]["gaussian"] == 12);
  CHECK(j["equivalence_classes"]["printed_gaussian"] == 10);
  CHECK(j["equivalence_classes"].contains("interpretation"));
  CHECK(j["route_agreement"]["checked"] == 85);
}

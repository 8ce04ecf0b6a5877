#include <doctest.h>

#include "dmu/audit.hpp"

using namespace dmu;

TEST_CASE("(T) audit lists exactly the pinned rows") {
  const auto r = audit(load_catalog());
  CHECK(r.rows_in("t") == std::vector<std::string>{"E19", "E22", "E33", "E34", "E45"});
  CHECK(r.rows_in("field").empty());
  CHECK(r.rows_in("sigma_int").empty());
  CHECK(r.rows_in("completeness").empty());
  CHECK(r.rows_in("singleton_row").empty());
  CHECK(r.rows_in("weights") == std::vector<std::string>{"E47"});
  // Both hand-flagged candidates are confirmed.
  for (const auto& d : r.items)
    if (d.column == "t" && (d.row_id == "E33" || d.row_id == "E34")) {
      CHECK(d.printed == "T");
      CHECK(d.recomputed == "NT T1={1,2,3} T2={}");
    }
}

TEST_CASE("extremal audit against the recomputed labels") {
  const auto r = audit(load_catalog());
  CHECK(r.rows_in("extremal") == std::vector<std::string>{"G09", "G15", "G17", "G18", "G21", "G23", "G27", "G30",
                                                          "E19", "E22", "E28", "E35", "E40", "E44", "E45", "E48",
                                                          "E50"});
  CHECK(r.counts().at("extremal") == 17);
}

TEST_CASE("verification report") {
  const auto v = verify(load_catalog());
  CHECK_FALSE(v.clean());
  CHECK(v.route_checked == 85);
  CHECK(v.route_disagreements.empty());
  CHECK(v.t_violations.size() == 11);
  CHECK(v.cross_field.size() == 3);
  CHECK(v.discrepancies.rows_in("table1_polystable") == std::vector<std::string>{"G28"});
  CHECK(v.discrepancies.rows_in("table1_dim").empty());
  CHECK(v.discrepancies.rows_in("table1_stratification").empty());
  CHECK(v.discrepancies.rows_in("equivalence_classes") == std::vector<std::string>{"gaussian"});
  const auto d = verify(load_catalog(), PosetMode::DoranSingleton);
  CHECK(d.discrepancies.rows_in("equivalence_classes") == std::vector<std::string>{"eisenstein"});
  CHECK(d.cross_field.empty());
}

TEST_CASE("a corrupted printed column is reported") {
  auto c = load_catalog();
  c.front().printed_t = false;
  const auto r = audit(c);
  CHECK(r.rows_in("t").front() == "G01");
}

TEST_CASE("completeness audit catches a missing row") {
  auto c = load_catalog();
  std::erase_if(c, [](const CatalogEntry& e) { return e.row_id == "G03"; });
  const auto r = completeness_audit(c);
  CHECK(r.rows_in("completeness") == std::vector<std::string>{"G01"});
}

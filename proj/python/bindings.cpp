#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmu/audit.hpp"
#include "dmu/catalog.hpp"
#include "dmu/cli.hpp"
#include "dmu/conditions.hpp"
#include "dmu/poset.hpp"
#include "dmu/render.hpp"
#include "dmu/symbolic.hpp"

namespace py = pybind11;
using namespace dmu;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.

const std::vector<CatalogEntry>& embedded() {
  static const auto c = load_catalog();
  return c;
}

const CatalogEntry& entry(const std::string& row_id) {
  const CatalogEntry* e = find_entry(embedded(), row_id);
  if (!e) throw Error(ErrorCode::NotInCatalog, row_id);
  return *e;
}

FieldFilter field(const std::string& f) {
  if (f == "gaussian") return FieldFilter::Gaussian;
  if (f == "eisenstein") return FieldFilter::Eisenstein;
  if (f == "all") return FieldFilter::All;
  throw py::value_error("field must be all, gaussian or eisenstein");
}

PosetMode mode(const std::string& m) {
  if (m == "strict") return PosetMode::Strict;
  if (m == "doran") return PosetMode::DoranSingleton;
  throw py::value_error("mode must be strict or doran");
}

DMPair make_pair(const std::vector<std::string>& weights, const std::vector<std::size_t>& s) {
  std::vector<Rational> raw;
  for (const auto& w : weights) raw.push_back(Rational::parse(w));
  std::vector<std::size_t> zero_based;
  for (auto i : s) {
    if (i == 0) throw py::value_error("marked indices are 1-based");
    zero_based.push_back(i - 1);
  }
  return DMPair::from_raw(raw, zero_based);
}

std::string conditions_json(const std::vector<std::string>& weights, const std::vector<std::size_t>& s) {
  const DMPair p = make_pair(weights, s);
  const ConditionReport r = evaluate_conditions(p);
  Json j{{"int", r.int_holds}, {"sigma_int", r.sigma_int_holds}, {"t", r.t_holds}};
  j["witness"] = r.witness ? Json(format_witness(*r.witness)) : Json(nullptr);
  return j.dump();
}

std::string hasse_json(const std::string& m, const std::string& f, bool int_only) {
  auto entries = filter_entries(embedded(), field(f));
  if (int_only)
    std::erase_if(entries, [](const CatalogEntry& e) { return e.pair.s_size() != 1 || !check_int(e.pair.weights()).holds; });
  return to_json(hasse(entries, mode(m)), entries, t_column_values(entries, TColumn::Printed)).dump();
}

std::tuple<int, std::string, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_dmu, m) {
  m.doc() = "Deligne-Mostow pair verification engine";

  py::register_exception<Error>(m, "DmuError", PyExc_ValueError);

  m.def("catalog_json", [](const std::string& f) { return to_json(filter_entries(embedded(), field(f))).dump(); },
        py::arg("field") = "all");
  m.def("verify_json", [](const std::string& md) { return to_json(verify(embedded(), mode(md))).dump(); },
        py::arg("mode") = "strict");
  m.def("conditions_json", &conditions_json, py::arg("weights"), py::arg("s"));
  m.def("polystable_json", [](const std::string& id) { return polystable_json(entry(id).pair).dump(); },
        py::arg("row_id"));
  m.def("transversality_json", [](unsigned deg) { return to_json(transversality(deg)).dump(); }, py::arg("m"));
  m.def("certify_json", [](const std::string& id) { return to_json(certify_pair(entry(id).pair)).dump(); },
        py::arg("row_id"));
  m.def("hasse_json", &hasse_json, py::arg("mode") = "strict", py::arg("field") = "all", py::arg("int_only") = false);
  m.def("reduce_json",
        [](const std::string& id, const std::string& md) { return to_json(reduction_targets(embedded(), id, mode(md))).dump(); },
        py::arg("row_id"), py::arg("mode") = "strict");
  m.def("discriminant", [](unsigned deg) { return deflated_discriminant(deg).to_string(); }, py::arg("m"));
  m.def("run_cli", &cli, py::arg("args"));
}

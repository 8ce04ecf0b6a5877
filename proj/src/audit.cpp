#include "dmu/audit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dmu/conditions.hpp"
#include "dmu/symbolic.hpp"

namespace dmu {

namespace {

std::string tf(bool t) { return t ? "T" : "NT"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string format_specs(const std::vector<std::pair<std::size_t, Rational>>& specs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < specs.size(); ++i)
    os << (i ? "," : "") << '(' << specs[i].first << ',' << specs[i].second << ')';
  os << '}';
  return os.str();
}

}  // namespace

std::map<std::string, std::size_t> DiscrepancyReport::counts() const {
  std::map<std::string, std::size_t> out;
  for (const auto& d : items) ++out[d.column];
  return out;
}

std::vector<std::string> DiscrepancyReport::rows_in(const std::string& column) const {
  std::vector<std::string> out;
  for (const auto& d : items)
    if (d.column == column) out.push_back(d.row_id);
  return out;
}

DiscrepancyReport completeness_audit(const std::vector<CatalogEntry>& entries) {
  DiscrepancyReport report;
  std::vector<std::pair<SourceTable, WeightVector>> seen;
  for (const auto& e : entries) {
    const auto key = std::make_pair(e.source_table, e.pair.weights());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    std::vector<std::pair<std::size_t, Rational>> listed, admissible;
    bool singleton = false;
    for (const auto& f : entries) {
      if (f.source_table != e.source_table || !(f.pair.weights() == e.pair.weights())) continue;
      if (f.pair.s_size() == 1)
        singleton = true;
      else
        listed.emplace_back(f.pair.s_size(), f.pair.s_weight());
    }
    for (const auto& spec : completeness_scan(e.pair.weights()))
      if (spec.first >= 2) admissible.push_back(spec);
    std::sort(listed.begin(), listed.end());
    std::sort(admissible.begin(), admissible.end());
    if (listed != admissible)
      report.items.push_back({e.row_id, "completeness", format_specs(listed), format_specs(admissible)});
    const bool int_holds = check_int(e.pair.weights()).holds;
    if (singleton != int_holds)
      report.items.push_back({e.row_id, "singleton_row", yes_no(singleton), yes_no(int_holds)});
  }
  return report;
}

DiscrepancyReport audit(const std::vector<CatalogEntry>& entries, PosetMode mode) {
  DiscrepancyReport report;
  const auto extremal = recomputed_extremal(entries, mode);
  // Column-major so each column's mismatches stay together in row order.
  for (const auto& e : entries)
    if (e.printed_scaled) report.items.push_back({e.row_id, "weights", *e.printed_scaled, e.scaled()});
  for (const auto& e : entries) {
    const NumberField f = classify_field(e.pair.weights());
    if (f != e.field()) report.items.push_back({e.row_id, "field", std::string(to_string(e.field())), std::string(to_string(f))});
  }
  for (const auto& e : entries)
    if (!check_sigma_int(e.pair).holds) report.items.push_back({e.row_id, "sigma_int", "true", "false"});
  for (const auto& e : entries) {
    const TResult t = check_t(e.pair);
    if (t.holds != e.printed_t) {
      std::string recomputed = tf(t.holds);
      if (t.witness) recomputed += " " + format_witness(*t.witness);
      report.items.push_back({e.row_id, "t", tf(e.printed_t), recomputed});
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (extremal[i] != entries[i].printed_extremal)
      report.items.push_back({entries[i].row_id, "extremal", std::string(to_string(entries[i].printed_extremal)),
                              std::string(to_string(extremal[i]))});
  for (auto& d : completeness_audit(entries).items) report.items.push_back(std::move(d));
  return report;
}

VerificationReport verify(const std::vector<CatalogEntry>& entries, PosetMode mode) {
  VerificationReport r;
  r.mode = mode;
  r.discrepancies = audit(entries, mode);
  r.tallies = printed_tallies(entries);
  r.table1 = table1(entries);
  for (const auto& row : r.table1) {
    auto add = [&](const char* column, const std::string& printed, const std::string& recomputed) {
      if (printed != recomputed) r.discrepancies.items.push_back({row.row_id, column, printed, recomputed});
    };
    add("table1_stratification", row.printed_stratification, row.stratification);
    add("table1_dim", std::to_string(row.printed_dim), std::to_string(row.dim));
    add("table1_polystable", std::to_string(row.printed_polystable), std::to_string(row.polystable));
  }
  r.t_violations = t_invariance_check(entries, mode);
  r.cross_field = cross_field_relations(entries, mode);
  r.classes = equivalence_classes(entries, mode);
  if (r.classes.gaussian.size() != kPrintedGaussianClasses)
    r.discrepancies.items.push_back({"gaussian", "equivalence_classes", std::to_string(kPrintedGaussianClasses),
                                     std::to_string(r.classes.gaussian.size())});
  if (r.classes.eisenstein.size() != kPrintedEisensteinClasses)
    r.discrepancies.items.push_back({"eisenstein", "equivalence_classes", std::to_string(kPrintedEisensteinClasses),
                                     std::to_string(r.classes.eisenstein.size())});
  TransversalityCertifier certifier;
  for (const auto& e : entries) {
    const bool symbolic = certifier.certify(e.pair).verdict == Transversality::Transversal;
    ++r.route_checked;
    if (symbolic != check_t(e.pair).holds) r.route_disagreements.push_back(e.row_id);
  }
  return r;
}

}  // namespace dmu

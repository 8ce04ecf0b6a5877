#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dmu/catalog.hpp"
#include "dmu/git_stability.hpp"
#include "dmu/poset.hpp"

namespace dmu {

/// One printed value that recomputation does not reproduce.
struct Discrepancy {
  std::string row_id;
  std::string column;
  std::string printed;
  std::string recomputed;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct DiscrepancyReport {
  std::vector<Discrepancy> items;

  bool empty() const { return items.empty(); }
  std::map<std::string, std::size_t> counts() const;
  /// Row ids flagged in one column, in report order.
  std::vector<std::string> rows_in(const std::string& column) const;
};

/// Per-entry audit of the printed columns: weights (misprints corrected in
/// the data), field, Sigma-INT, (T), extremal and completeness of the listed S.
/// Printed data is never modified.
DiscrepancyReport audit(const std::vector<CatalogEntry>& entries, PosetMode mode = PosetMode::Strict);

/// Entries for one weight vector must list every admissible S with |S| >= 2,
/// and a singleton row exactly when INT holds.
DiscrepancyReport completeness_audit(const std::vector<CatalogEntry>& entries);

/// Everything `verify` checks, in one place.
struct VerificationReport {
  PosetMode mode = PosetMode::Strict;
  DiscrepancyReport discrepancies;
  PrintedTallies tallies;
  std::vector<Table1Row> table1;
  std::vector<TViolation> t_violations;
  std::vector<std::pair<std::string, std::string>> cross_field;
  EquivalenceClasses classes;
  std::size_t route_checked = 0;
  std::vector<std::string> route_disagreements;  // internal inconsistency

  bool clean() const {
    return discrepancies.empty() && t_violations.empty() && cross_field.empty() && route_disagreements.empty();
  }
};

VerificationReport verify(const std::vector<CatalogEntry>& entries, PosetMode mode = PosetMode::Strict);

}  // namespace dmu

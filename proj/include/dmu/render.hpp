#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dmu/audit.hpp"
#include "dmu/catalog.hpp"
#include "dmu/git_stability.hpp"
#include "dmu/poset.hpp"
#include "dmu/symbolic.hpp"

namespace dmu {

using Json = nlohmann::ordered_json;

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(std::string_view s);
/// Fields joined by commas, terminated by CRLF.
std::string csv_row(const std::vector<std::string>& fields);
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// Left-aligned columns separated by two spaces, with a dashed rule under the header.
std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

std::vector<std::string> catalog_header();
std::vector<std::string> catalog_row(const CatalogEntry& e);

Json to_json(const Rational& r);
Json to_json(const CatalogEntry& e);
Json to_json(const std::vector<CatalogEntry>& entries);
Json to_json(const DiscrepancyReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const HasseDiagram& h, const std::vector<CatalogEntry>& entries, const std::vector<bool>& t_values);
Json to_json(const ExtremalSummary& s);
Json to_json(const ReductionTargets& r);
Json to_json(const Table1Row& r);
Json to_json(const DMPair& p, const PolystablePartition& q);
Json to_json(const LocalModel& m);
Json to_json(const ChartReport& c);
Json to_json(const TransversalityReport& r);
Json to_json(const PairCertificate& c);

/// Points of a pair with their stabilizers and local models.
Json polystable_json(const DMPair& p);

std::string dump(const Json& j, bool compact);

}  // namespace dmu

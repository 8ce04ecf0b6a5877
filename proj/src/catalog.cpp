#include "dmu/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dmu/conditions.hpp"

namespace dmu {

std::string_view to_string(SourceTable t) {
  return t == SourceTable::Gaussian ? "G" : "E";
}

std::string_view to_string(Extremal e) {
  switch (e) {
    case Extremal::Max: return "Max";
    case Extremal::Min: return "Min";
    case Extremal::None: break;
  }
  return "";
}

NumberField field_of(SourceTable t) {
  return t == SourceTable::Gaussian ? NumberField::Gaussian : NumberField::Eisenstein;
}

std::string CatalogEntry::s_label() const {
  if (s_lo == 1) return "ℕ_" + std::to_string(s_hi);
  return "ℕ_{" + std::to_string(s_lo) + "," + std::to_string(s_hi) + "}";
}

namespace {

[[noreturn]] void malformed(std::size_t row, const std::string& what) {
  throw Error(ErrorCode::MalformedData, "row " + std::to_string(row) + ": " + what);
}

CatalogEntry parse_row(const nlohmann::json& row, std::size_t index, std::size_t& g_count,
                       std::size_t& e_count) {
  if (!row.is_object()) malformed(index, "not an object");
  for (const char* field : {"scaled_weights", "scale", "s_range", "printed_t", "printed_extremal", "table"})
    if (!row.contains(field)) malformed(index, std::string("missing field '") + field + "'");

  const auto& table = row["table"];
  if (!table.is_string() || (table != "G" && table != "E")) malformed(index, "table must be \"G\" or \"E\"");
  const SourceTable source = table == "G" ? SourceTable::Gaussian : SourceTable::Eisenstein;

  const auto& scale = row["scale"];
  if (!scale.is_number_integer() || (scale != 4 && scale != 6)) malformed(index, "scale must be 4 or 6");

  const auto& scaled = row["scaled_weights"];
  if (!scaled.is_array() || scaled.empty()) malformed(index, "scaled_weights must be a nonempty array");
  std::vector<Rational> raw;
  for (const auto& x : scaled) {
    if (!x.is_number_integer()) malformed(index, "scaled weight is not an integer");
    raw.emplace_back(x.get<long>(), scale.get<long>());
  }

  const auto& range = row["s_range"];
  if (!range.is_array() || range.size() != 2 || !range[0].is_number_integer() || !range[1].is_number_integer())
    malformed(index, "s_range must be [lo, hi]");
  const auto lo = range[0].get<long>();
  const auto hi = range[1].get<long>();
  if (lo < 1 || hi < lo || static_cast<std::size_t>(hi) > raw.size()) malformed(index, "s_range out of bounds");

  const auto& t = row["printed_t"];
  if (!t.is_string() || (t != "T" && t != "NT")) malformed(index, "printed_t must be \"T\" or \"NT\"");
  const auto& x = row["printed_extremal"];
  Extremal extremal = Extremal::None;
  if (x.is_string() && x == "Max")
    extremal = Extremal::Max;
  else if (x.is_string() && x == "Min")
    extremal = Extremal::Min;
  else if (!x.is_null())
    malformed(index, "printed_extremal must be \"Max\", \"Min\" or null");

  // A row whose printed weights are corrected in the data keeps the printed
  // string for the audit.
  std::optional<std::string> printed_scaled;
  if (row.contains("printed_scaled_weights")) {
    const auto& ps = row["printed_scaled_weights"];
    if (!ps.is_array()) malformed(index, "printed_scaled_weights must be an array");
    std::string digits;
    for (const auto& x : ps) {
      if (!x.is_number_integer()) malformed(index, "printed scaled weight is not an integer");
      digits += std::to_string(x.get<long>());
    }
    printed_scaled = digits;
  }

  std::vector<std::size_t> s;
  for (auto i = lo; i <= hi; ++i) s.push_back(static_cast<std::size_t>(i - 1));
  DMPair pair = [&] {
    try {
      return DMPair::from_raw(std::move(raw), s, Context::Catalog);
    } catch (const Error& e) {
      malformed(index, e.what());
    }
  }();

  std::ostringstream id;
  const std::size_t number = source == SourceTable::Gaussian ? ++g_count : ++e_count;
  id << to_string(source) << (number < 10 ? "0" : "") << number;

  return CatalogEntry{id.str(), std::move(pair), source, t == "T", extremal,
                      static_cast<std::size_t>(lo), static_cast<std::size_t>(hi), std::move(printed_scaled)};
}

}  // namespace

std::vector<CatalogEntry> load_catalog_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedData, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::MalformedData, "catalog document must be an array");

  std::vector<CatalogEntry> entries;
  std::set<PairKey> seen;
  std::size_t g_count = 0, e_count = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CatalogEntry entry = parse_row(doc[i], i, g_count, e_count);
    if (const auto sigma = check_sigma_int(entry.pair); !sigma.holds) {
      const auto& f = *sigma.failing_pair;
      throw Error(ErrorCode::SigmaIntViolation,
                  entry.row_id + " fails at (" + std::to_string(f.i + 1) + "," + std::to_string(f.j + 1) +
                      ") with value " + f.reciprocal.to_string());
    }
    if (!seen.insert(entry.pair.key()).second)
      throw Error(ErrorCode::DuplicateEntry, entry.row_id + " repeats an earlier canonical form");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CatalogEntry> load_catalog() { return load_catalog_json(embedded_catalog_json()); }

std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedData, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog_json(buf.str());
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view row_id) {
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.row_id == row_id; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<CatalogEntry> filter_entries(const std::vector<CatalogEntry>& entries, FieldFilter filter) {
  std::vector<CatalogEntry> out;
  for (const auto& e : entries) {
    if (filter == FieldFilter::All || (filter == FieldFilter::Gaussian && e.source_table == SourceTable::Gaussian) ||
        (filter == FieldFilter::Eisenstein && e.source_table == SourceTable::Eisenstein))
      out.push_back(e);
  }
  return out;
}

PrintedTallies printed_tallies(const std::vector<CatalogEntry>& entries) {
  PrintedTallies t;
  for (const auto& e : entries) {
    const bool g = e.source_table == SourceTable::Gaussian;
    (e.printed_t ? (g ? t.gaussian_t : t.eisenstein_t) : (g ? t.gaussian_nt : t.eisenstein_nt))++;
    if (e.printed_extremal == Extremal::Max) (g ? t.gaussian_max : t.eisenstein_max)++;
    if (e.printed_extremal == Extremal::Min) (g ? t.gaussian_min : t.eisenstein_min)++;
  }
  return t;
}

std::vector<std::pair<std::size_t, Rational>> completeness_scan(const WeightVector& w) {
  std::vector<std::pair<std::size_t, Rational>> out;
  for (const auto& [value, mult] : w.multiplicities()) {
    // Sigma-INT-S only sees (|S|, w(S)), so the first `size` copies stand in for any choice.
    std::size_t first = 0;
    while (w[first] != value) ++first;
    for (std::size_t size = 1; size <= mult; ++size) {
      std::vector<std::size_t> s;
      for (std::size_t k = 0; k < size; ++k) s.push_back(first + k);
      if (check_sigma_int(DMPair::make(w, s)).holds) out.emplace_back(size, value);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  return out;
}

}  // namespace dmu

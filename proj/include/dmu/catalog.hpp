#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmu/core.hpp"

namespace dmu {

enum class SourceTable { Gaussian, Eisenstein };
enum class Extremal { None, Max, Min };

std::string_view to_string(SourceTable t);
std::string_view to_string(Extremal e);
NumberField field_of(SourceTable t);

struct CatalogEntry {
  std::string row_id;  // "G01".."G31", "E01".."E54"
  DMPair pair;
  SourceTable source_table;
  bool printed_t;
  Extremal printed_extremal;
  std::size_t s_lo;  // printed 1-based range of S
  std::size_t s_hi;
  /// Set when the printed weight string is a misprint corrected in the data.
  std::optional<std::string> printed_scaled;

  NumberField field() const { return field_of(source_table); }
  /// "ℕ_k" when the range starts at 1, "ℕ_{i,j}" otherwise.
  std::string s_label() const;
  std::string scaled() const { return scaled_string(pair.weights()); }
};

/// The 85 rows embedded at build time.
std::vector<CatalogEntry> load_catalog();
std::vector<CatalogEntry> load_catalog_json(std::string_view text);
std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path);

/// The raw embedded JSON document.
std::string_view embedded_catalog_json();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, std::string_view row_id);

enum class FieldFilter { All, Gaussian, Eisenstein };
std::vector<CatalogEntry> filter_entries(const std::vector<CatalogEntry>& entries, FieldFilter filter);

/// Counts read off the printed (T)? and extremal? columns.
struct PrintedTallies {
  std::size_t gaussian_t = 0, gaussian_nt = 0, eisenstein_t = 0, eisenstein_nt = 0;
  std::size_t gaussian_max = 0, gaussian_min = 0, eisenstein_max = 0, eisenstein_min = 0;
};

PrintedTallies printed_tallies(const std::vector<CatalogEntry>& entries);

/// Every (|S|, w(S)) for which some S with those invariants satisfies Sigma-INT-S.
std::vector<std::pair<std::size_t, Rational>> completeness_scan(const WeightVector& w);

}  // namespace dmu

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmu/catalog.hpp"
#include "dmu/conditions.hpp"

namespace dmu {

/// Strict: the four-condition order on ascending-sorted weights (prefix test).
/// DoranSingleton: the collision order, where the smaller pair's unmarked
/// weights arise by merging the larger pair's unmarked weights into blocks and
/// the marked block is carried over unchanged; for |S| = 1 the marked weight may
/// be re-chosen among the values common to both vectors.
enum class PosetMode { Strict, DoranSingleton };

std::string_view to_string(PosetMode mode);

/// a ≼ b (reflexive). Cross-field pairs are evaluated like any other.
bool leq(const DMPair& a, const DMPair& b, PosetMode mode = PosetMode::Strict);

/// True iff the multiset `fine` can be partitioned into |coarse| nonempty
/// blocks whose sums are the entries of `coarse`.
bool is_coarsening(std::vector<Rational> coarse, std::vector<Rational> fine);

/// Which (T) column drives the extremal and invariance computations.
enum class TColumn { Printed, Recomputed };

std::string_view to_string(TColumn column);

/// Reflexive comparability relation over a fixed entry list, built once.
class OrderMatrix {
 public:
  OrderMatrix(const std::vector<CatalogEntry>& entries, PosetMode mode);

  std::size_t size() const { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return rel_[a * n_ + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && rel_[a * n_ + b]; }
  PosetMode mode() const { return mode_; }

 private:
  std::size_t n_;
  PosetMode mode_;
  std::vector<bool> rel_;
};

struct HasseDiagram {
  PosetMode mode = PosetMode::Strict;
  std::vector<std::string> nodes;                         // row ids, input order
  std::vector<std::pair<std::string, std::string>> edges;  // (smaller, larger)
};

/// Transitive reduction of the comparability relation on `entries`.
HasseDiagram hasse(const std::vector<CatalogEntry>& entries, PosetMode mode = PosetMode::Strict);

/// (T) status per entry under the chosen column.
std::vector<bool> t_column_values(const std::vector<CatalogEntry>& entries, TColumn column);

struct ExtremalSummary {
  TColumn column = TColumn::Printed;
  PosetMode mode = PosetMode::Strict;
  std::vector<std::string> maximal_t;    // maximal among (T)-true entries
  std::vector<std::string> minimal_nt;   // minimal among (T)-false entries
  std::size_t gaussian_max = 0, gaussian_min = 0, eisenstein_max = 0, eisenstein_min = 0;
};

/// Maximality and minimality are tested against every entry of `entries`;
/// counts are split by source table.
ExtremalSummary extremal(const std::vector<CatalogEntry>& entries, TColumn column,
                         PosetMode mode = PosetMode::Strict);

/// Recomputed extremal label per entry (Max, Min or None), in entry order.
std::vector<Extremal> recomputed_extremal(const std::vector<CatalogEntry>& entries,
                                          PosetMode mode = PosetMode::Strict);

struct TViolation {
  std::string lower;  // lower ≺ upper
  std::string upper;
  bool lower_t;
  bool upper_t;
  std::optional<TWitness> lower_witness;
  std::optional<TWitness> upper_witness;
};

/// Comparable pairs whose recomputed (T) statuses differ.
std::vector<TViolation> t_invariance_check(const std::vector<CatalogEntry>& entries,
                                           PosetMode mode = PosetMode::Strict);

struct ReductionTargets {
  std::string row_id;
  std::vector<std::string> minimal_below;  // minimal q with q ≼ p
  std::vector<std::string> maximal_above;  // maximal q with p ≼ q
};

/// Throws NotInCatalog for an unknown row id.
ReductionTargets reduction_targets(const std::vector<CatalogEntry>& entries, std::string_view row_id,
                                   PosetMode mode = PosetMode::Strict);

/// Connected components of the undirected comparability graph, restricted to
/// edges inside one source table. Components are sorted by their first row id.
struct EquivalenceClasses {
  PosetMode mode = PosetMode::Strict;
  std::vector<std::vector<std::string>> gaussian;
  std::vector<std::vector<std::string>> eisenstein;
};

EquivalenceClasses equivalence_classes(const std::vector<CatalogEntry>& entries,
                                       PosetMode mode = PosetMode::Strict);

inline constexpr std::size_t kPrintedGaussianClasses = 10;
inline constexpr std::size_t kPrintedEisensteinClasses = 23;

/// Comparable (a ≺ b) pairs whose source tables differ.
std::vector<std::pair<std::string, std::string>> cross_field_relations(const std::vector<CatalogEntry>& entries,
                                                                       PosetMode mode = PosetMode::Strict);

/// Graphviz rendering; node labels are "scaled-weights|S-range|T/NT".
std::string to_dot(const HasseDiagram& diagram, const std::vector<CatalogEntry>& entries,
                   const std::vector<bool>& t_values);

}  // namespace dmu

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dmu/catalog.hpp"
#include "dmu/core.hpp"

namespace dmu {

/// S[w]-orbit invariant of one side A of a split: the unmarked indices in A and
/// how many marked indices A holds.
struct OrbitKey {
  std::vector<std::size_t> unmarked;
  std::size_t marked = 0;

  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
  friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
};

/// Unordered split {A, A^c} with weight exactly 1 on each side, up to S[w].
/// part_a is the side with the smaller key; its marked indices are the first
/// `key.marked` members of S.
struct PolystablePartition {
  std::vector<std::size_t> part_a;
  std::vector<std::size_t> part_b;
  OrbitKey key;
};

OrbitKey orbit_key_of(const DMPair& p, const std::vector<std::size_t>& side);

/// Normalized key of the split with one side `side`.
OrbitKey normalized_key(const DMPair& p, const std::vector<std::size_t>& side);

/// All polystable points of M_{w,S}, ordered by orbit key.
std::vector<PolystablePartition> polystable_points(const DMPair& p);

std::size_t cusp_count(const DMPair& p);

/// Raw census: index subsets of weight 1, and their complement pairs
/// (no quotient by S[w]).
struct SubsetCensus {
  std::size_t weight_one_subsets = 0;
  std::size_t complement_pairs = 0;
};

SubsetCensus weight_one_census(const WeightVector& w);

enum class StabilizerType { Torus, TorusWithSwap };

std::string_view to_string(StabilizerType t);

/// TorusWithSwap iff S = {1..n} and the two sides have the same size.
StabilizerType stabilizer_type(const DMPair& p, const PolystablePartition& q);

/// Local equation of the discriminant on the Luna slice at a polystable point:
/// a product of linear coordinates and deflated discriminants.
struct LocalModel {
  std::size_t ambient_dim = 0;
  std::size_t linear_factors = 0;
  std::vector<std::size_t> disc_factors;  // degrees m >= 2, non-increasing
  bool swap_identified = false;

  /// All factors have degree <= 2, so the divisor is normal crossing.
  bool normal_crossing() const;
  std::string describe() const;
};

LocalModel luna_local_model(const DMPair& p, const PolystablePartition& q);

/// dim of the ball quotient, n - 3.
std::size_t dimension(const DMPair& p);

/// One row of the ordered Gaussian summary table, with printed reference data.
struct Table1Row {
  std::string name;
  std::string row_id;
  std::string stratification;
  std::size_t dim = 0;
  std::size_t polystable = 0;
  std::size_t printed_dim = 0;
  std::size_t printed_polystable = 0;
  std::string printed_stratification;
  SubsetCensus census;
};

/// Rows w_G, w_1 .. w_5 in printed order, recomputed from the catalog's
/// Gaussian singleton entries.
std::vector<Table1Row> table1(const std::vector<CatalogEntry>& entries);

}  // namespace dmu

#include "dmu/git_stability.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace dmu {

OrbitKey orbit_key_of(const DMPair& p, const std::vector<std::size_t>& side) {
  OrbitKey k;
  for (auto i : side) {
    if (p.in_s(i))
      ++k.marked;
    else
      k.unmarked.push_back(i);
  }
  std::sort(k.unmarked.begin(), k.unmarked.end());
  return k;
}

namespace {

std::vector<std::size_t> complement_of(std::size_t n, const std::vector<std::size_t>& side) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(side.begin(), side.end(), i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> representative(const DMPair& p, const OrbitKey& key) {
  std::vector<std::size_t> side = key.unmarked;
  const auto s = p.s_indices();
  side.insert(side.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(key.marked));
  std::sort(side.begin(), side.end());
  return side;
}

}  // namespace

OrbitKey normalized_key(const DMPair& p, const std::vector<std::size_t>& side) {
  std::vector<std::size_t> sorted = side;
  std::sort(sorted.begin(), sorted.end());
  return std::min(orbit_key_of(p, sorted), orbit_key_of(p, complement_of(p.n(), sorted)));
}

std::vector<PolystablePartition> polystable_points(const DMPair& p) {
  const auto w = p.weights().weights();
  const std::size_t n = w.size();
  const Rational one(1);
  std::set<OrbitKey> keys;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Rational sum;
    std::vector<std::size_t> side;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        sum += w[i];
        side.push_back(i);
      }
    if (sum == one) keys.insert(normalized_key(p, side));
  }
  std::vector<PolystablePartition> out;
  for (const auto& key : keys) {
    auto a = representative(p, key);
    auto b = complement_of(n, a);
    out.push_back({std::move(a), std::move(b), key});
  }
  return out;
}

std::size_t cusp_count(const DMPair& p) { return polystable_points(p).size(); }

SubsetCensus weight_one_census(const WeightVector& w) {
  SubsetCensus c;
  const Rational one(1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
    Rational sum;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask >> i & 1) sum += w[i];
    if (sum == one) ++c.weight_one_subsets;
  }
  c.complement_pairs = c.weight_one_subsets / 2;
  return c;
}

std::string_view to_string(StabilizerType t) {
  return t == StabilizerType::Torus ? "C*" : "C* x| Sigma_2";
}

StabilizerType stabilizer_type(const DMPair& p, const PolystablePartition& q) {
  // S[w] fixes the complement of S pointwise, so a swap of the two supports
  // exists only when everything is marked and the sides are the same size.
  if (p.s_size() == p.n() && q.part_a.size() == q.part_b.size()) return StabilizerType::TorusWithSwap;
  return StabilizerType::Torus;
}

bool LocalModel::normal_crossing() const {
  return std::all_of(disc_factors.begin(), disc_factors.end(), [](std::size_t m) { return m <= 2; });
}

std::string LocalModel::describe() const {
  std::ostringstream os;
  os << "C^" << ambient_dim << ": ";
  bool first = true;
  if (linear_factors > 0) {
    os << "linear x" << linear_factors;
    first = false;
  }
  for (auto m : disc_factors) {
    os << (first ? "" : " * ") << "disc" << m;
    first = false;
  }
  if (first) os << "1";
  if (swap_identified) os << " (Sigma_2 swaps factors)";
  return os.str();
}

LocalModel luna_local_model(const DMPair& p, const PolystablePartition& q) {
  LocalModel m;
  m.ambient_dim = p.n() - 2;
  for (const auto* side : {&q.part_a, &q.part_b}) {
    std::size_t marked = 0;
    for (auto i : *side)
      if (p.in_s(i)) ++marked;
    const std::size_t unmarked = side->size() - marked;
    // A cluster of k points has k - 1 slice coordinates: marked points with
    // multiplicity >= 2 spend m - 1 of them on a deflated polynomial.
    if (marked >= 2) {
      m.disc_factors.push_back(marked);
      m.linear_factors += unmarked;
    } else {
      m.linear_factors += side->size() - 1;
    }
  }
  std::sort(m.disc_factors.begin(), m.disc_factors.end(), std::greater<>{});
  m.swap_identified = stabilizer_type(p, q) == StabilizerType::TorusWithSwap;
  return m;
}

std::size_t dimension(const DMPair& p) { return p.n() - 3; }

std::vector<Table1Row> table1(const std::vector<CatalogEntry>& entries) {
  struct Printed {
    const char* name;
    const char* stratification;
    std::size_t dim;
    std::size_t polystable;
  };
  static constexpr std::array<Printed, 6> printed{{
      {"w_G", "11111111", 5, 35},
      {"w_1", "2111111", 4, 15},
      {"w_2", "311111", 3, 5},
      {"w_3", "221111", 3, 7},
      {"w_4", "32111", 2, 3},
      {"w_5", "22211", 2, 6},
  }};
  std::vector<Table1Row> rows;
  for (const auto& ref : printed) {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) {
      return e.source_table == SourceTable::Gaussian && e.pair.s_size() == 1 && e.scaled() == ref.stratification;
    });
    if (it == entries.end()) throw Error(ErrorCode::NotInCatalog, std::string("Table 1 row ") + ref.name);
    Table1Row row;
    row.name = ref.name;
    row.row_id = it->row_id;
    row.stratification = it->scaled();
    row.dim = dimension(it->pair);
    row.polystable = cusp_count(it->pair);
    row.printed_dim = ref.dim;
    row.printed_polystable = ref.polystable;
    row.printed_stratification = ref.stratification;
    row.census = weight_one_census(it->pair.weights());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dmu

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmu/error.hpp"
#include "dmu/rational.hpp"

namespace dmu {

/// Whether the n >= 5 length bound applies (catalog membership) or not.
enum class Context { General, Catalog };

/// Weights in (0,1) summing to exactly 2, stored in non-increasing order.
class WeightVector {
 public:
  static WeightVector make(std::vector<Rational> raw, Context context = Context::General);

  std::span<const Rational> weights() const { return weights_; }
  std::vector<Rational> ascending() const;
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  /// Distinct weight values in descending order with their multiplicities.
  std::vector<std::pair<Rational, std::size_t>> multiplicities() const;
  std::size_t multiplicity(const Rational& value) const;

  /// lcm of all weight denominators.
  mpz_class denominator_lcm() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  explicit WeightVector(std::vector<Rational> w) : weights_(std::move(w)) {}
  std::vector<Rational> weights_;
};

/// Sigma_n-invariant identity of a pair: sorted weights, |S| and w(S).
struct PairKey {
  std::vector<Rational> weights;  // non-increasing
  std::size_t s_size = 0;
  Rational s_weight;

  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// A weight vector with a marked subset S of equal-weight indices.
///
/// Indices are 0-based positions in the canonical non-increasing order.
class DMPair {
 public:
  /// `s_indices` refer to positions in `w` (already canonical).
  static DMPair make(WeightVector w, std::vector<std::size_t> s_indices);

  /// Sorts the raw weights and carries the marked indices along with them.
  static DMPair from_raw(std::vector<Rational> raw, const std::vector<std::size_t>& s_indices,
                         Context context = Context::General);

  /// Marks the contiguous 1-based range {lo, ..., hi}.
  static DMPair from_range(WeightVector w, std::size_t lo, std::size_t hi);

  const WeightVector& weights() const { return w_; }
  std::size_t n() const { return w_.size(); }
  std::size_t s_size() const { return s_.size(); }
  const Rational& s_weight() const { return w_[s_.front()]; }
  std::span<const std::size_t> s_indices() const { return s_; }
  bool in_s(std::size_t index) const;
  std::vector<bool> s_mask() const;
  std::vector<std::size_t> complement() const;

  /// Order of the symmetry group S[w] = Sigma_{|S|}, as a decimal string.
  std::string symmetry_order() const;

  PairKey key() const;

 private:
  DMPair(WeightVector w, std::vector<std::size_t> s) : w_(std::move(w)), s_(std::move(s)) {}
  WeightVector w_;
  std::vector<std::size_t> s_;
};

PairKey canonical_form(const DMPair& p);

enum class NumberField { Gaussian, Eisenstein, Ambiguous };

std::string_view to_string(NumberField field);

/// Gaussian iff the denominator lcm is 4, Eisenstein iff it is 3 or 6.
NumberField classify_field(const WeightVector& w);

/// Weights times 4 (Gaussian) or 6 (Eisenstein) as a digit string, e.g. "2111111".
/// Throws AmbiguousField otherwise.
std::string scaled_string(const WeightVector& w);

/// Scale factor used by scaled_string.
long field_scale(NumberField field);

/// Renders a 1-based index set, e.g. "{2,3,4}".
std::string format_index_set(std::span<const std::size_t> zero_based);

}  // namespace dmu

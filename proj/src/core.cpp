#include "dmu/core.hpp"

#include <algorithm>
#include <numeric>

namespace dmu {

WeightVector WeightVector::make(std::vector<Rational> raw, Context context) {
  if (raw.empty()) throw Error(ErrorCode::LengthTooSmall, "weight vector is empty");
  Rational total;
  for (const auto& w : raw) {
    if (w <= Rational(0) || w >= Rational(1))
      throw Error(ErrorCode::WeightOutOfRange, "weight " + w.to_string() + " not in (0,1)");
    total += w;
  }
  if (total != Rational(2))
    throw Error(ErrorCode::SumNotTwo, "weights sum to " + total.to_string());
  if (context == Context::Catalog && raw.size() < 5)
    throw Error(ErrorCode::LengthTooSmall, "catalog vectors need n >= 5, got " + std::to_string(raw.size()));
  std::stable_sort(raw.begin(), raw.end(), std::greater<>{});
  return WeightVector(std::move(raw));
}

std::vector<Rational> WeightVector::ascending() const {
  return {weights_.rbegin(), weights_.rend()};
}

std::vector<std::pair<Rational, std::size_t>> WeightVector::multiplicities() const {
  std::vector<std::pair<Rational, std::size_t>> out;
  for (const auto& w : weights_) {
    if (!out.empty() && out.back().first == w)
      ++out.back().second;
    else
      out.emplace_back(w, 1);
  }
  return out;
}

std::size_t WeightVector::multiplicity(const Rational& value) const {
  return static_cast<std::size_t>(std::count(weights_.begin(), weights_.end(), value));
}

mpz_class WeightVector::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& w : weights_) l = lcm(l, w.denominator());
  return l;
}

DMPair DMPair::make(WeightVector w, std::vector<std::size_t> s_indices) {
  if (s_indices.empty()) throw Error(ErrorCode::IndexOutOfRange, "marked set S is empty");
  std::sort(s_indices.begin(), s_indices.end());
  if (std::adjacent_find(s_indices.begin(), s_indices.end()) != s_indices.end())
    throw Error(ErrorCode::IndexOutOfRange, "marked set S has repeated indices");
  if (s_indices.back() >= w.size())
    throw Error(ErrorCode::IndexOutOfRange, "marked index " + std::to_string(s_indices.back() + 1) +
                                                " exceeds n=" + std::to_string(w.size()));
  const Rational& value = w[s_indices.front()];
  for (auto i : s_indices)
    if (w[i] != value)
      throw Error(ErrorCode::UnequalMarkedWeights,
                  "marked weights differ: " + value.to_string() + " vs " + w[i].to_string());
  return DMPair(std::move(w), std::move(s_indices));
}

DMPair DMPair::from_raw(std::vector<Rational> raw, const std::vector<std::size_t>& s_indices,
                        Context context) {
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return raw[a] > raw[b]; });
  std::vector<std::size_t> position(raw.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  std::vector<std::size_t> mapped;
  mapped.reserve(s_indices.size());
  for (auto i : s_indices) {
    if (i >= raw.size())
      throw Error(ErrorCode::IndexOutOfRange, "marked index " + std::to_string(i + 1) + " out of range");
    mapped.push_back(position[i]);
  }
  return make(WeightVector::make(std::move(raw), context), std::move(mapped));
}

DMPair DMPair::from_range(WeightVector w, std::size_t lo, std::size_t hi) {
  if (lo < 1 || hi < lo || hi > w.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "range [" + std::to_string(lo) + "," + std::to_string(hi) + "] invalid for n=" + std::to_string(w.size()));
  std::vector<std::size_t> s;
  for (auto i = lo; i <= hi; ++i) s.push_back(i - 1);
  return make(std::move(w), std::move(s));
}

bool DMPair::in_s(std::size_t index) const {
  return std::binary_search(s_.begin(), s_.end(), index);
}

std::vector<bool> DMPair::s_mask() const {
  std::vector<bool> mask(n(), false);
  for (auto i : s_) mask[i] = true;
  return mask;
}

std::vector<std::size_t> DMPair::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n(); ++i)
    if (!in_s(i)) out.push_back(i);
  return out;
}

std::string DMPair::symmetry_order() const {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), s_.size());
  return f.get_str();
}

PairKey DMPair::key() const {
  return PairKey{{w_.weights().begin(), w_.weights().end()}, s_.size(), s_weight()};
}

PairKey canonical_form(const DMPair& p) { return p.key(); }

std::string_view to_string(NumberField field) {
  switch (field) {
    case NumberField::Gaussian: return "Gaussian";
    case NumberField::Eisenstein: return "Eisenstein";
    case NumberField::Ambiguous: return "Ambiguous";
  }
  return "Ambiguous";
}

NumberField classify_field(const WeightVector& w) {
  const mpz_class l = w.denominator_lcm();
  if (l == 4) return NumberField::Gaussian;
  if (l == 3 || l == 6) return NumberField::Eisenstein;
  return NumberField::Ambiguous;
}

long field_scale(NumberField field) {
  switch (field) {
    case NumberField::Gaussian: return 4;
    case NumberField::Eisenstein: return 6;
    case NumberField::Ambiguous: break;
  }
  throw Error(ErrorCode::AmbiguousField, "no integer scale for an ambiguous field");
}

std::string scaled_string(const WeightVector& w) {
  const NumberField field = classify_field(w);
  if (field == NumberField::Ambiguous)
    throw Error(ErrorCode::AmbiguousField, "denominator lcm " + w.denominator_lcm().get_str());
  const Rational scale(field_scale(field));
  std::string out;
  for (const auto& x : w.weights()) out += (x * scale).numerator().get_str();
  return out;
}

std::string format_index_set(std::span<const std::size_t> zero_based) {
  std::string out = "{";
  for (std::size_t k = 0; k < zero_based.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(zero_based[k] + 1);
  }
  return out + "}";
}

}  // namespace dmu

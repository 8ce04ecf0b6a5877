#include "dmu/conditions.hpp"

#include <algorithm>
#include <tuple>

namespace dmu {
namespace {

// Shared pair scan; `half_ok(i, j)` decides whether (1/2)Z suffices.
template <class HalfOk>
IntegralityResult scan_pairs(std::span<const Rational> w, HalfOk half_ok) {
  const Rational one(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const Rational gap = one - w[i] - w[j];
      if (gap.sign() <= 0) continue;
      const Rational r = gap.inverse();
      const bool ok = half_ok(i, j) ? (r * Rational(2)).is_integer() : r.is_integer();
      if (!ok) return {false, FailingPair{i, j, r}};
    }
  }
  return {};
}

}  // namespace

IntegralityResult check_int(const WeightVector& w) {
  return scan_pairs(w.weights(), [](std::size_t, std::size_t) { return false; });
}

IntegralityResult check_sigma_int(const DMPair& p) {
  return scan_pairs(p.weights().weights(),
                    [&](std::size_t i, std::size_t j) { return p.in_s(i) && p.in_s(j); });
}

TResult find_t_witness(std::span<const Rational> weights, const std::vector<bool>& in_s) {
  std::vector<std::size_t> s, rest;
  for (std::size_t i = 0; i < weights.size(); ++i) (in_s[i] ? s : rest).push_back(i);
  if (s.size() < 3) return {};
  const Rational& ws = weights[s.front()];
  const Rational one(1);

  std::optional<TWitness> best;
  const std::size_t subsets = std::size_t{1} << rest.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Rational sum;
    std::vector<std::size_t> t2;
    for (std::size_t b = 0; b < rest.size(); ++b)
      if (mask >> b & 1) {
        sum += weights[rest[b]];
        t2.push_back(rest[b]);
      }
    // k * w(S) must make up the remaining weight exactly, with 3 <= k <= |S|.
    const Rational k = (one - sum) / ws;
    if (!k.is_integer() || k < Rational(3) || k > Rational(static_cast<long>(s.size()))) continue;
    const auto count = static_cast<std::size_t>(k.numerator().get_ui());
    TWitness candidate{{s.begin(), s.begin() + static_cast<std::ptrdiff_t>(count)}, std::move(t2)};
    if (!best || std::tie(candidate.t2, candidate.t1) < std::tie(best->t2, best->t1))
      best = std::move(candidate);
  }
  if (!best) return {};
  return {false, std::move(best)};
}

TResult check_t(const DMPair& p) { return find_t_witness(p.weights().weights(), p.s_mask()); }

ConditionReport evaluate_conditions(const DMPair& p) {
  ConditionReport r;
  r.int_holds = check_int(p.weights()).holds;
  const auto sigma = check_sigma_int(p);
  r.sigma_int_holds = sigma.holds;
  r.failing_pair = sigma.failing_pair;
  auto t = check_t(p);
  r.t_holds = t.holds;
  r.witness = std::move(t.witness);
  return r;
}

std::string format_witness(const TWitness& w) {
  return "T1=" + format_index_set(w.t1) + " T2=" + format_index_set(w.t2);
}

}  // namespace dmu

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dmu/core.hpp"

namespace dmu {

/// An index pair whose value (1 - w_i - w_j)^{-1} fails the integrality test.
struct FailingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational reciprocal;
};

struct IntegralityResult {
  bool holds = true;
  std::optional<FailingPair> failing_pair;
};

/// (1 - w_i - w_j)^{-1} in Z for every i != j with w_i + w_j < 1.
IntegralityResult check_int(const WeightVector& w);

/// As check_int, but pairs with both indices in S only need a value in (1/2)Z.
IntegralityResult check_sigma_int(const DMPair& p);

/// T1 subset of S with |T1| >= 3 and T2 subset of the complement, total weight 1.
struct TWitness {
  std::vector<std::size_t> t1;
  std::vector<std::size_t> t2;
};

struct TResult {
  bool holds = true;
  std::optional<TWitness> witness;
};

/// Condition (T): no witness exists. The reported witness is the least one in
/// the order (t2, t1), each compared as sorted index sequences, so T2 = {} wins
/// whenever it is possible.
TResult check_t(const DMPair& p);

/// Same search on an arbitrary index layout; `in_s` marks the members of S,
/// which must all carry the same weight.
TResult find_t_witness(std::span<const Rational> weights, const std::vector<bool>& in_s);

struct ConditionReport {
  bool int_holds = true;
  bool sigma_int_holds = true;
  bool t_holds = true;
  std::optional<TWitness> witness;
  std::optional<FailingPair> failing_pair;  // from the Sigma-INT check
};

ConditionReport evaluate_conditions(const DMPair& p);

/// "T1={...} T2={...}" with 1-based indices.
std::string format_witness(const TWitness& w);

}  // namespace dmu

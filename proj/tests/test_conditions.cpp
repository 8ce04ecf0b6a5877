#include <doctest.h>

#include "dmu/catalog.hpp"
#include "dmu/conditions.hpp"
#include "oracles.hpp"

using namespace dmu;

namespace {

std::vector<Rational> repeat(Rational r, int n) { return std::vector<Rational>(static_cast<std::size_t>(n), r); }

DMPair ex24() {
  auto raw = repeat(Rational(1, 6), 10);
  raw.insert(raw.begin(), Rational(1, 3));
  return DMPair::from_range(WeightVector::make(raw), 2, 11);
}

}  // namespace

TEST_CASE("INT") {
  CHECK(check_int(WeightVector::make(repeat(Rational(1, 4), 8))).holds);
  const auto we = check_int(WeightVector::make(repeat(Rational(1, 6), 12)));
  CHECK_FALSE(we.holds);
  REQUIRE(we.failing_pair);
  CHECK(we.failing_pair->reciprocal == Rational(3, 2));
  CHECK(check_int(WeightVector::make(repeat(Rational(1, 2), 4))).holds);
}

TEST_CASE("Sigma-INT") {
  const auto we = WeightVector::make(repeat(Rational(1, 6), 12));
  CHECK(check_sigma_int(DMPair::from_range(we, 1, 12)).holds);
  CHECK_FALSE(check_sigma_int(DMPair::from_range(we, 1, 1)).holds);
  CHECK(check_sigma_int(ex24()).holds);
}

TEST_CASE("(T) on the worked examples") {
  const auto wg = WeightVector::make(repeat(Rational(1, 4), 8));
  const auto two = check_t(DMPair::from_range(wg, 1, 2));
  CHECK(two.holds);
  CHECK_FALSE(two.witness);

  const auto t = check_t(ex24());
  CHECK_FALSE(t.holds);
  REQUIRE(t.witness);
  CHECK(t.witness->t1 == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
  CHECK(t.witness->t2.empty());
  CHECK(format_witness(*t.witness) == "T1={2,3,4,5,6,7} T2={}");

  const auto third = check_t(DMPair::from_range(WeightVector::make(repeat(Rational(1, 3), 6)), 1, 3));
  CHECK_FALSE(third.holds);
  CHECK(third.witness->t1 == std::vector<std::size_t>{0, 1, 2});
  CHECK(third.witness->t2.empty());
}

TEST_CASE("(T) witness uses the complement when it must") {
  // (1/2, 1/6 x 9): three marked sixths plus the half reach 1.
  auto raw = repeat(Rational(1, 6), 9);
  raw.insert(raw.begin(), Rational(1, 2));
  const auto t = check_t(DMPair::from_range(WeightVector::make(raw), 2, 4));
  CHECK_FALSE(t.holds);
  REQUIRE(t.witness);
  CHECK(t.witness->t1.size() == 3);
  Rational sum;
  const auto w = WeightVector::make(raw);
  for (auto i : t.witness->t1) sum += w[i];
  for (auto i : t.witness->t2) sum += w[i];
  CHECK(sum == Rational(1));
}

TEST_CASE("pairs with |S| <= 2 satisfy (T)") {
  for (const auto& e : load_catalog())
    if (e.pair.s_size() <= 2) CHECK(check_t(e.pair).holds);
}

TEST_CASE("(T) agrees with the subset oracle on every catalog row") {
  for (const auto& e : load_catalog()) {
    INFO(e.row_id);
    const auto t = check_t(e.pair);
    CHECK(t.holds == oracle::t_holds(e.pair));
    if (!t.holds) {
      REQUIRE(t.witness);
      Rational sum;
      for (auto i : t.witness->t1) {
        CHECK(e.pair.in_s(i));
        sum += e.pair.weights()[i];
      }
      for (auto i : t.witness->t2) {
        CHECK_FALSE(e.pair.in_s(i));
        sum += e.pair.weights()[i];
      }
      CHECK(t.witness->t1.size() >= 3);
      CHECK(sum == Rational(1));
    }
  }
}

TEST_CASE("integrality agrees with the integer oracle") {
  for (const auto& e : load_catalog()) {
    INFO(e.row_id);
    CHECK(check_int(e.pair.weights()).holds == oracle::integrality(e.pair, false));
    CHECK(check_sigma_int(e.pair).holds == oracle::integrality(e.pair, true));
  }
}

TEST_CASE("(T) is invariant under relabeling") {
  const auto t = check_t(ex24());
  // Same pair entered in reverse: the third weight is now first.
  auto raw = repeat(Rational(1, 6), 10);
  raw.push_back(Rational(1, 3));
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < 10; ++i) s.push_back(i);
  const auto p = DMPair::from_raw(raw, s);
  CHECK(check_t(p).holds == t.holds);
  CHECK(format_witness(*check_t(p).witness) == format_witness(*t.witness));
}

TEST_CASE("evaluate_conditions bundles the three checks") {
  const auto r = evaluate_conditions(ex24());
  CHECK_FALSE(r.int_holds);
  CHECK(r.sigma_int_holds);
  CHECK_FALSE(r.t_holds);
  CHECK(r.witness);
}

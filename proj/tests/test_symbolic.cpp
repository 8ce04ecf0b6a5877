#include <doctest.h>

#include <random>

#include "dmu/catalog.hpp"
#include "dmu/conditions.hpp"
#include "dmu/error.hpp"
#include "dmu/symbolic.hpp"

using namespace dmu;

namespace {

const MultiPoly X = MultiPoly::variable("X");
const MultiPoly b1 = MultiPoly::variable("b1");
const MultiPoly b2 = MultiPoly::variable("b2");

Rational leibniz(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Rational sum;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Rational term = inversions % 2 ? Rational(-1) : Rational(1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace

TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
      PolyMatrix m(n, std::vector<MultiPoly>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // Sparse entries force pivoting.
          q[i][j] = trial % 3 == 0 && (i + j) % 2 ? Rational(0) : Rational(d(rng));
          m[i][j] = MultiPoly(q[i][j]);
        }
      CHECK(determinant(m) == MultiPoly(leibniz(q)));
    }
  CHECK(determinant({}) == MultiPoly(1));
}

TEST_CASE("polynomial determinant") {
  const PolyMatrix m{{b1, b2}, {b2, b1}};
  CHECK(determinant(m) == b1.pow(2) - b2.pow(2));
}

TEST_CASE("resultants") {
  // 3x3 Sylvester matrix [[1,0,b1],[2,0,0],[0,2,0]] expands to 4*b1.
  CHECK(resultant(X.pow(2) + b1, MultiPoly(2) * X, "X") == MultiPoly(4) * b1);
  const MultiPoly a = MultiPoly::variable("a"), b = MultiPoly::variable("b");
  CHECK(resultant(X - a, X - b, "X") == a - b);
  const MultiPoly f = X.pow(3) + b1 * X + b2;
  CHECK(resultant(f, f, "X").is_zero());
  CHECK_THROWS_AS(resultant(MultiPoly(0), f, "X"), Error);
  const auto s = sylvester_matrix(X.pow(2) + b1, MultiPoly(2) * X, "X");
  REQUIRE(s.size() == 3);
  CHECK(s[0][2] == b1);
  CHECK(s[2][1] == MultiPoly(2));
}

TEST_CASE("deflated discriminants") {
  CHECK(deflated_discriminant(2) == MultiPoly(-4) * b1);
  CHECK(deflated_discriminant(3) == MultiPoly(-4) * b1.pow(3) - MultiPoly(27) * b2.pow(2));
  for (unsigned m = 2; m <= 6; ++m) {
    INFO(m);
    CHECK(weighted_degrees(deflated_discriminant(m)) == std::set<unsigned>{m * (m - 1)});
  }
  CHECK(weighted_degrees(deflated_discriminant(6)) == std::set<unsigned>{30});
  for (unsigned bad : {0u, 1u, 7u}) {
    try {
      deflated_discriminant(bad);
      FAIL("expected UnsupportedDegree");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedDegree);
    }
  }
}

TEST_CASE("discriminant matches the root product on random specializations") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (unsigned m = 2; m <= 6; ++m) {
    const MultiPoly d = deflated_discriminant(m);
    for (int trial = 0; trial < 25; ++trial) {
      // Rational roots summing to zero give a deflated polynomial.
      std::vector<Rational> r;
      Rational sum;
      for (unsigned i = 0; i + 1 < m; ++i) {
        r.emplace_back(num(rng), den(rng));
        sum += r.back();
      }
      r.push_back(-sum);
      std::vector<Rational> e(m + 1);  // elementary symmetric polynomials
      e[0] = Rational(1);
      for (const auto& root : r)
        for (std::size_t k = m; k >= 1; --k) e[k] += e[k - 1] * root;
      CHECK(e[1] == Rational(0));
      std::map<std::string, Rational> values;
      for (unsigned k = 1; k + 1 <= m; ++k) values["b" + std::to_string(k)] = (k % 2 ? Rational(1) : Rational(-1)) * e[k + 1];
      Rational product(1);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) product *= (r[i] - r[j]) * (r[i] - r[j]);
      CHECK(d.evaluate(values) == product);
    }
  }
}

TEST_CASE("blow-up charts") {
  const auto d3 = deflated_discriminant(3);
  const auto c1 = blowup_chart(d3, 1);
  CHECK(c1.exceptional_multiplicity == 2);
  CHECK(c1.restriction == MultiPoly(-27) * MultiPoly::variable("c2").pow(2));
  CHECK_FALSE(c1.squarefree);
  CHECK(c1.verdict == ChartVerdict::Tangential);
  const auto c2 = blowup_chart(d3, 2);
  CHECK(c2.restriction == MultiPoly(-27));
  CHECK(c2.verdict == ChartVerdict::EmptyIntersection);
  const auto q = blowup_chart(deflated_discriminant(2), 1);
  CHECK(q.exceptional_multiplicity == 1);
  CHECK(q.restriction == MultiPoly(-4));
  CHECK(q.verdict == ChartVerdict::EmptyIntersection);
  CHECK_THROWS_AS(blowup_chart(d3, 3), std::invalid_argument);
  CHECK_THROWS_AS(blowup_chart(d3, 0), std::invalid_argument);
}

TEST_CASE("chart verdict rules on hand-made inputs") {
  // D = b1*b2 + b2^2: chart b2 = t leaves g = c1 + 1, reduced and nonconstant.
  const auto r = blowup_chart(b1 * b2 + b2.pow(2), 2);
  CHECK(r.exceptional_multiplicity == 2);
  CHECK(r.verdict == ChartVerdict::Transversal);
  // D = b1 * (b1 - b2)^2 in chart b1 = t: g = (1 - c2)^2 is tangential.
  CHECK(blowup_chart(b1 * (b1 - b2).pow(2), 1).verdict == ChartVerdict::Tangential);
}

TEST_CASE("exceptional multiplicity is the order of D at the origin") {
  for (unsigned m = 2; m <= 6; ++m) {
    const auto d = deflated_discriminant(m);
    for (std::size_t j = 1; j + 1 <= m; ++j) {
      const auto c = blowup_chart(d, j);
      CHECK(c.exceptional_multiplicity == d.min_total_degree());
      CHECK(c.restriction.degree_in("t") == 0);
    }
  }
}

TEST_CASE("squarefree test") {
  const MultiPoly c1 = MultiPoly::variable("c1"), c2 = MultiPoly::variable("c2");
  CHECK(is_squarefree(c1 * c2));
  CHECK(is_squarefree(c1 * c2 + MultiPoly(1)));
  CHECK_FALSE(is_squarefree(c1.pow(2)));
  CHECK_FALSE(is_squarefree((c1 + c2).pow(2) * c1));
  CHECK(is_squarefree(MultiPoly(5)));
  CHECK_FALSE(is_squarefree(MultiPoly(0)));
}

TEST_CASE("transversality by degree") {
  CHECK(transversality(2).verdict == Transversality::Transversal);
  for (unsigned m = 3; m <= 6; ++m) {
    const auto r = transversality(m);
    CHECK(r.verdict == Transversality::NonTransversal);
    CHECK(r.charts.size() == m - 1);
    // The last chart misses the divisor; every other one is tangent along c_(m-1) = 0.
    CHECK(r.charts.back().verdict == ChartVerdict::EmptyIntersection);
    for (std::size_t j = 0; j + 1 < r.charts.size(); ++j) {
      CHECK(r.charts[j].verdict == ChartVerdict::Tangential);
      CHECK(r.charts[j].restriction.support() == std::vector<std::string>{"c" + std::to_string(m - 1)});
      CHECK(r.charts[j].restriction.degree_in("c" + std::to_string(m - 1)) == m - 1);
    }
  }
}

TEST_CASE("pair certificates") {
  const auto c = load_catalog();
  const CatalogEntry* g02 = find_entry(c, "G02");
  const CatalogEntry* e02 = find_entry(c, "E02");
  REQUIRE(g02);
  REQUIRE(e02);
  const auto a = certify_pair(g02->pair);
  CHECK(a.verdict == Transversality::Transversal);
  CHECK(a.degrees == std::vector<unsigned>{2});
  const auto b = certify_pair(e02->pair);
  CHECK(b.verdict == Transversality::NonTransversal);
  CHECK(b.degrees == std::vector<unsigned>{4, 6});
  CHECK(b.tangential_degrees == std::vector<unsigned>{4, 6});
  // ((1/3)^6, N_5): the symbolic route sides with the recomputed column.
  const CatalogEntry* e33 = find_entry(c, "E33");
  REQUIRE(e33);
  CHECK(e33->scaled() == "222222");
  CHECK(e33->s_label() == "ℕ_5");
  CHECK(certify_pair(e33->pair).verdict == Transversality::NonTransversal);
  CHECK(e33->printed_t);
  CHECK_FALSE(check_t(e33->pair).holds);
}

TEST_CASE("symbolic and combinatorial routes agree on every row") {
  TransversalityCertifier certifier;
  for (const auto& e : load_catalog()) {
    INFO(e.row_id);
    CHECK((certifier.certify(e.pair).verdict == Transversality::Transversal) == check_t(e.pair).holds);
  }
}

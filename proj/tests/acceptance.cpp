// Acceptance suite: one PASS/FAIL line per criterion, with elapsed time
// checked against each criterion's budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmu/audit.hpp"
#include "dmu/catalog.hpp"
#include "dmu/conditions.hpp"
#include "dmu/git_stability.hpp"
#include "dmu/poset.hpp"
#include "dmu/symbolic.hpp"
#include "oracles.hpp"

using namespace dmu;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const auto c = load_catalog();
  return c;
}

const CatalogEntry& entry(const char* id) { return *find_entry(catalog(), id); }

Outcome cardinality() {
  const auto& c = catalog();
  const auto g = filter_entries(c, FieldFilter::Gaussian).size();
  const auto e = filter_entries(c, FieldFilter::Eisenstein).size();
  std::ostringstream os;
  os << "entries=" << c.size() << " gaussian=" << g << " eisenstein=" << e;
  return {c.size() == 85 && g == 31 && e == 54, os.str()};
}

Outcome sigma_int() {
  std::vector<std::string> failures;
  for (const auto& e : catalog())
    if (!check_sigma_int(e.pair).holds) failures.push_back(e.row_id);
  return {failures.empty(), "failures=" + std::to_string(failures.size()) + (failures.empty() ? "" : " " + join(failures))};
}

Outcome printed_tallies_match() {
  const auto t = printed_tallies(catalog());
  std::ostringstream os;
  os << "T/NT " << t.gaussian_t << "/" << t.gaussian_nt << " " << t.eisenstein_t << "/" << t.eisenstein_nt
     << ", Max/Min " << t.gaussian_max << "/" << t.gaussian_min << " " << t.eisenstein_max << "/" << t.eisenstein_min;
  const bool ok = t.gaussian_t == 16 && t.gaussian_nt == 15 && t.eisenstein_t == 24 && t.eisenstein_nt == 30 &&
                  t.gaussian_max == 2 && t.gaussian_min == 5 && t.eisenstein_max == 6 && t.eisenstein_min == 21;
  return {ok, os.str()};
}

Outcome t_audit() {
  const std::vector<std::string> pinned{"E19", "E22", "E33", "E34", "E45"};
  std::vector<std::string> mismatched;
  bool oracle_agrees = true;
  for (const auto& e : catalog()) {
    const bool t = check_t(e.pair).holds;
    oracle_agrees &= t == oracle::t_holds(e.pair);
    if (t != e.printed_t) mismatched.push_back(e.row_id);
  }
  const auto reported = audit(catalog()).rows_in("t");
  const std::size_t matches = catalog().size() - mismatched.size();
  // Hand-flagged candidates: ((1/3)^6, N_5) and ((1/3)^6, N_6), printed T.
  const bool candidates_confirmed = entry("E33").printed_t && !oracle::t_holds(entry("E33").pair) &&
                                    entry("E34").printed_t && !oracle::t_holds(entry("E34").pair);
  std::ostringstream os;
  os << "matches=" << matches << "/85 (need >= 83) mismatches=" << join(mismatched)
     << " report_exact=" << (reported == mismatched ? "yes" : "no")
     << " candidates E33,E34 " << (candidates_confirmed ? "confirmed" : "refuted")
     << " baseline=" << (mismatched == pinned ? "unchanged" : "drifted")
     << " oracle_agrees=" << (oracle_agrees ? "yes" : "no");
  return {matches >= 83 && reported == mismatched && oracle_agrees && mismatched == pinned, os.str()};
}

Outcome table1_reproduction() {
  const auto rows = table1(catalog());
  const std::vector<std::size_t> dims{5, 4, 3, 3, 2, 2};
  const std::vector<std::string> strat{"11111111", "2111111", "311111", "221111", "32111", "22211"};
  const std::vector<std::size_t> printed{35, 15, 5, 7, 3};
  bool ok = rows.size() == 6;
  std::ostringstream os;
  for (std::size_t i = 0; ok && i < 6; ++i) {
    ok &= rows[i].dim == dims[i] && rows[i].stratification == strat[i];
    if (i < 5) ok &= rows[i].polystable == printed[i];
    os << rows[i].name << "=" << rows[i].dim << "/" << rows[i].polystable << " ";
  }
  // Last row: recount by the explicit orbit oracle; 3 is the pinned baseline.
  const auto& w5 = rows.back();
  const std::size_t recount = oracle::polystable_orbits(entry(w5.row_id.c_str()).pair);
  ok &= w5.polystable == recount && recount == 3;
  const bool reported =
      verify(catalog()).discrepancies.rows_in("table1_polystable") == std::vector<std::string>{"G28"};
  ok &= reported;
  os << "| w_5 printed " << w5.printed_polystable << ", recounted " << recount << " splits (" << w5.census.weight_one_subsets
     << " subsets), mismatch " << (reported ? "reported" : "missing");
  return {ok, os.str()};
}

Outcome figure2() {
  std::vector<CatalogEntry> six;
  for (const auto& e : catalog())
    if (e.source_table == SourceTable::Gaussian && e.pair.s_size() == 1 && check_int(e.pair.weights()).holds)
      six.push_back(e);
  const auto h = hasse(six, PosetMode::DoranSingleton);
  const std::set<std::pair<std::string, std::string>> expected{{"G25", "G15"}, {"G15", "G09"}, {"G20", "G09"},
                                                               {"G28", "G20"}, {"G25", "G20"}, {"G09", "G01"}};
  const std::set<std::pair<std::string, std::string>> got(h.edges.begin(), h.edges.end());
  std::string edges;
  for (const auto& [a, b] : h.edges) edges += (edges.empty() ? "" : " ") + a + "->" + b;
  return {six.size() == 6 && got == expected && h.edges.size() == 6,
          "nodes=" + std::to_string(six.size()) + " edges=" + std::to_string(h.edges.size()) + " [" + edges + "]"};
}

Outcome swap_stabilizers() {
  std::set<std::string> rows;
  for (const auto& e : catalog())
    for (const auto& q : polystable_points(e.pair))
      if (stabilizer_type(e.pair, q) == StabilizerType::TorusWithSwap) rows.insert(e.row_id);
  const bool shapes = entry("G08").scaled() == "11111111" && entry("G08").pair.s_size() == 8 &&
                      entry("E34").scaled() == "222222" && entry("E34").pair.s_size() == 6 &&
                      entry("E01").scaled() == "111111111111" && entry("E01").pair.s_size() == 12;
  std::vector<std::string> v(rows.begin(), rows.end());
  return {rows == std::set<std::string>{"G08", "E01", "E34"} && shapes, "swap rows=" + join(v)};
}

Outcome symbolic_transversality() {
  bool ok = true;
  std::ostringstream os;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (unsigned m = 2; m <= 6; ++m) {
    const auto r = transversality(m);
    const auto expected = m == 2 ? Transversality::Transversal : Transversality::NonTransversal;
    const bool homogeneous = weighted_degrees(r.discriminant) == std::set<unsigned>{m * (m - 1)};
    int agree = 0;
    const int trials = 25;
    for (int k = 0; k < trials; ++k) {
      std::vector<Rational> roots;
      Rational sum;
      for (unsigned i = 0; i + 1 < m; ++i) {
        roots.emplace_back(num(rng), den(rng));
        sum += roots.back();
      }
      roots.push_back(-sum);
      std::vector<Rational> e(m + 1);
      e[0] = Rational(1);
      for (const auto& x : roots)
        for (std::size_t j = m; j >= 1; --j) e[j] += e[j - 1] * x;
      std::map<std::string, Rational> values;
      for (unsigned j = 1; j + 1 <= m; ++j) values["b" + std::to_string(j)] = (j % 2 ? Rational(1) : Rational(-1)) * e[j + 1];
      Rational product(1);
      for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b) product *= (roots[a] - roots[b]) * (roots[a] - roots[b]);
      agree += r.discriminant.evaluate(values) == product;
    }
    ok &= r.verdict == expected && homogeneous && agree == trials && trials >= 20;
    os << "m=" << m << ":" << to_string(r.verdict) << (homogeneous ? ",wdeg ok" : ",wdeg BAD") << "," << agree << "/"
       << trials << " ";
  }
  return {ok, os.str()};
}

Outcome route_agreement() {
  TransversalityCertifier certifier;
  std::vector<std::string> disagree;
  for (const auto& e : catalog())
    if ((certifier.certify(e.pair).verdict == Transversality::Transversal) != check_t(e.pair).holds)
      disagree.push_back(e.row_id);
  return {disagree.empty(), "checked=85 disagreements=" + std::to_string(disagree.size()) +
                                (disagree.empty() ? "" : " " + join(disagree))};
}

Outcome poset_axioms() {
  const auto& c = catalog();
  const OrderMatrix m(c, PosetMode::Strict);
  std::size_t failures = 0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    failures += !m.leq(a, a);
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (!m.leq(a, b)) continue;
      failures += a != b && m.leq(b, a);
      for (std::size_t d = 0; d < c.size(); ++d) failures += m.leq(b, d) && !m.leq(a, d);
    }
  }
  const auto v = t_invariance_check(c, PosetMode::Strict);
  std::vector<std::string> listed;
  for (const auto& x : v)
    listed.push_back(x.lower + "(" + (x.lower_t ? "T" : "NT") + ")<" + x.upper + "(" + (x.upper_t ? "T" : "NT") + ")");
  std::ostringstream os;
  os << "axiom failures=" << failures << " (T) violations=" << v.size();
  if (!v.empty()) os << ": " << join(listed);
  return {failures == 0 && v.empty(), os.str()};
}

Outcome equivalence_class_counts() {
  const auto strict = equivalence_classes(catalog(), PosetMode::Strict);
  const auto doran = equivalence_classes(catalog(), PosetMode::DoranSingleton);
  std::ostringstream os;
  os << "comparability components within each table: strict " << strict.gaussian.size() << "/"
     << strict.eisenstein.size() << ", doran " << doran.gaussian.size() << "/" << doran.eisenstein.size()
     << " vs printed " << kPrintedGaussianClasses << "/" << kPrintedEisensteinClasses;
  return {strict.gaussian.size() == kPrintedGaussianClasses && strict.eisenstein.size() == kPrintedEisensteinClasses,
          os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "catalog cardinality", 1, cardinality},
      {2, "Sigma-INT validation", 1, sigma_int},
      {3, "printed tallies", 1, printed_tallies_match},
      {4, "(T) audit", 5, t_audit},
      {5, "Gaussian INT summary", 1, table1_reproduction},
      {6, "inclusion diagram", 1, figure2},
      {7, "swap stabilizers", 10, swap_stabilizers},
      {8, "symbolic transversality", 300, symbolic_transversality},
      {9, "route agreement", 300, route_agreement},
      {10, "poset axioms and (T) invariance", 5, poset_axioms},
      {11, "equivalence classes", 1, equivalence_class_counts},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = s <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("[%s] %2d %s: %s (%.3fs, budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s,
                c.budget_s, in_time ? "" : ", over budget");
  }
  return failed == 0 ? 0 : 1;
}

#include "dmu/render.hpp"

#include <algorithm>

#include "dmu/conditions.hpp"

namespace dmu {

namespace {

Json indices_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json extremal_json(Extremal e) { return e == Extremal::None ? Json(nullptr) : Json(std::string(to_string(e))); }

Json witness_json(const std::optional<TWitness>& w) {
  if (!w) return nullptr;
  return Json{{"t1", indices_json(w->t1)}, {"t2", indices_json(w->t2)}};
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\r\n";
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::string out = csv_row(header);
  for (const auto& r : rows) out += csv_row(r);
  return out;
}

namespace {

// Display width in code points, so "ℕ" counts once.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = width(header[i]);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(r[i]));
  auto line = [&](const std::vector<std::string>& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i];
      if (i + 1 < r.size()) out += std::string(w[i] - width(r[i]) + 2, ' ');
    }
    return out + '\n';
  };
  std::string out = line(header);
  std::vector<std::string> rule;
  for (auto x : w) rule.emplace_back(x, '-');
  out += line(rule);
  for (const auto& r : rows) out += line(r);
  return out;
}

std::vector<std::string> catalog_header() {
  return {"row_id", "table", "n", "weights", "S", "printed_T", "recomputed_T", "printed_extremal"};
}

std::vector<std::string> catalog_row(const CatalogEntry& e) {
  const std::string ext = e.printed_extremal == Extremal::None ? "" : std::string(to_string(e.printed_extremal));
  return {e.row_id,
          std::string(to_string(e.source_table)),
          std::to_string(e.pair.n()),
          e.scaled(),
          e.s_label(),
          e.printed_t ? "T" : "NT",
          check_t(e.pair).holds ? "T" : "NT",
          ext};
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const CatalogEntry& e) {
  Json weights = Json::array();
  for (const auto& w : e.pair.weights().weights()) weights.push_back(w.to_string());
  const TResult t = check_t(e.pair);
  std::vector<std::size_t> s(e.pair.s_indices().begin(), e.pair.s_indices().end());
  Json j{{"row_id", e.row_id},
         {"table", std::string(to_string(e.source_table))},
         {"field", std::string(to_string(e.field()))},
         {"n", e.pair.n()},
         {"scaled_weights", e.scaled()},
         {"weights", weights},
         {"s_label", e.s_label()},
         {"s_indices", indices_json(s)},
         {"s_size", e.pair.s_size()},
         {"s_weight", e.pair.s_weight().to_string()},
         {"int", check_int(e.pair.weights()).holds},
         {"printed_t", e.printed_t},
         {"recomputed_t", t.holds},
         {"witness", witness_json(t.witness)},
         {"printed_extremal", extremal_json(e.printed_extremal)}};
  if (e.printed_scaled) j["printed_scaled_weights"] = *e.printed_scaled;
  return j;
}

Json to_json(const std::vector<CatalogEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(to_json(e));
  return out;
}

Json to_json(const DiscrepancyReport& r) {
  Json items = Json::array();
  for (const auto& d : r.items)
    items.push_back({{"row_id", d.row_id}, {"column", d.column}, {"printed", d.printed}, {"recomputed", d.recomputed}});
  Json counts = Json::object();
  for (const auto& [column, n] : r.counts()) counts[column] = n;
  return Json{{"count", r.items.size()}, {"by_column", counts}, {"items", items}};
}

Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.t_violations)
    violations.push_back({{"lower", v.lower},
                          {"upper", v.upper},
                          {"lower_t", v.lower_t},
                          {"upper_t", v.upper_t},
                          {"lower_witness", witness_json(v.lower_witness)},
                          {"upper_witness", witness_json(v.upper_witness)}});
  Json cross = Json::array();
  for (const auto& [a, b] : r.cross_field) cross.push_back({{"lower", a}, {"upper", b}});
  Json t1 = Json::array();
  for (const auto& row : r.table1) t1.push_back(to_json(row));
  const auto& t = r.tallies;
  return Json{
      {"mode", std::string(to_string(r.mode))},
      {"clean", r.clean()},
      {"printed_tallies",
       {{"gaussian", {{"t", t.gaussian_t}, {"nt", t.gaussian_nt}, {"max", t.gaussian_max}, {"min", t.gaussian_min}}},
        {"eisenstein",
         {{"t", t.eisenstein_t}, {"nt", t.eisenstein_nt}, {"max", t.eisenstein_max}, {"min", t.eisenstein_min}}}}},
      {"table1", t1},
      {"discrepancies", to_json(r.discrepancies)},
      {"t_invariance_violations", violations},
      {"cross_field_relations", cross},
      {"equivalence_classes",
       {{"interpretation", "connected components of the comparability graph within each table"},
        {"gaussian", r.classes.gaussian.size()},
        {"eisenstein", r.classes.eisenstein.size()},
        {"printed_gaussian", kPrintedGaussianClasses},
        {"printed_eisenstein", kPrintedEisensteinClasses}}},
      {"route_agreement", {{"checked", r.route_checked}, {"disagreements", string_list(r.route_disagreements)}}}};
}

Json to_json(const HasseDiagram& h, const std::vector<CatalogEntry>& entries, const std::vector<bool>& t_values) {
  Json nodes = Json::array();
  for (const auto& id : h.nodes) {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.row_id == id; });
    Json node{{"id", id}};
    if (it != entries.end()) {
      node["weights"] = it->scaled();
      node["s_label"] = it->s_label();
      node["t"] = static_cast<bool>(t_values[static_cast<std::size_t>(it - entries.begin())]);
    }
    nodes.push_back(node);
  }
  Json adjacency = Json::object();
  for (const auto& id : h.nodes) adjacency[id] = Json::array();
  for (const auto& [a, b] : h.edges) adjacency[a].push_back(b);
  Json edges = Json::array();
  for (const auto& [a, b] : h.edges) edges.push_back(Json::array({a, b}));
  return Json{{"mode", std::string(to_string(h.mode))}, {"nodes", nodes}, {"edges", edges}, {"adjacency", adjacency}};
}

Json to_json(const ExtremalSummary& s) {
  return Json{{"column", std::string(to_string(s.column))},
              {"mode", std::string(to_string(s.mode))},
              {"gaussian", {{"max", s.gaussian_max}, {"min", s.gaussian_min}}},
              {"eisenstein", {{"max", s.eisenstein_max}, {"min", s.eisenstein_min}}},
              {"maximal_t", string_list(s.maximal_t)},
              {"minimal_nt", string_list(s.minimal_nt)}};
}

Json to_json(const ReductionTargets& r) {
  return Json{{"row_id", r.row_id},
              {"minimal_below", string_list(r.minimal_below)},
              {"maximal_above", string_list(r.maximal_above)}};
}

Json to_json(const Table1Row& r) {
  return Json{{"name", r.name},
              {"row_id", r.row_id},
              {"stratification", r.stratification},
              {"dim", r.dim},
              {"polystable", r.polystable},
              {"weight_one_subsets", r.census.weight_one_subsets},
              {"printed_dim", r.printed_dim},
              {"printed_polystable", r.printed_polystable}};
}

Json to_json(const DMPair& p, const PolystablePartition& q) {
  return Json{{"part_a", indices_json(q.part_a)},
              {"part_b", indices_json(q.part_b)},
              {"stabilizer", std::string(to_string(stabilizer_type(p, q)))},
              {"local_model", to_json(luna_local_model(p, q))}};
}

Json to_json(const LocalModel& m) {
  Json disc = Json::array();
  for (auto d : m.disc_factors) disc.push_back(d);
  return Json{{"ambient_dim", m.ambient_dim},
              {"linear_factors", m.linear_factors},
              {"disc_factors", disc},
              {"swap_identified", m.swap_identified},
              {"normal_crossing", m.normal_crossing()}};
}

Json to_json(const ChartReport& c) {
  return Json{{"chart_index", c.chart_index},
              {"exceptional_multiplicity", c.exceptional_multiplicity},
              {"restriction", c.restriction.to_cleared_string()},
              {"squarefree", c.squarefree},
              {"verdict", std::string(to_string(c.verdict))}};
}

Json to_json(const TransversalityReport& r) {
  Json charts = Json::array();
  for (const auto& c : r.charts) charts.push_back(to_json(c));
  return Json{{"m", r.m},
              {"discriminant", r.discriminant.to_string()},
              {"terms", r.discriminant.term_count()},
              {"charts", charts},
              {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const PairCertificate& c) {
  Json degrees = Json::array(), tangential = Json::array();
  for (auto m : c.degrees) degrees.push_back(m);
  for (auto m : c.tangential_degrees) tangential.push_back(m);
  return Json{{"verdict", std::string(to_string(c.verdict))},
              {"disc_degrees", degrees},
              {"tangential_degrees", tangential},
              {"swap_points", c.swap_points}};
}

Json polystable_json(const DMPair& p) {
  Json points = Json::array();
  for (const auto& q : polystable_points(p)) points.push_back(to_json(p, q));
  return Json{{"dim", dimension(p)}, {"count", points.size()}, {"points", points}};
}

std::string dump(const Json& j, bool compact) { return compact ? j.dump() : j.dump(2); }

}  // namespace dmu

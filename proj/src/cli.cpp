#include "dmu/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dmu/audit.hpp"
#include "dmu/catalog.hpp"
#include "dmu/conditions.hpp"
#include "dmu/git_stability.hpp"
#include "dmu/poset.hpp"
#include "dmu/render.hpp"
#include "dmu/symbolic.hpp"

namespace dmu {

namespace {

struct RunConfig {
  std::string command;
  std::string field = "all";
  std::string t_column = "printed";
  std::string mode = "strict";
  std::string format = "table";
  bool compact = false;
  bool int_only = false;
  std::string output;
  std::string data;
  std::string pair;
  std::optional<unsigned> degree;
  std::string row_id;
};

/// Raised for bad flag combinations noticed after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldFilter field_filter(const RunConfig& c) {
  if (c.field == "gaussian") return FieldFilter::Gaussian;
  if (c.field == "eisenstein") return FieldFilter::Eisenstein;
  return FieldFilter::All;
}

PosetMode poset_mode(const RunConfig& c) { return c.mode == "doran" ? PosetMode::DoranSingleton : PosetMode::Strict; }

TColumn t_column(const RunConfig& c) { return c.t_column == "recomputed" ? TColumn::Recomputed : TColumn::Printed; }

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + c.format + " is not available for " + c.command + " (use " + list + ")");
}

bool row_in_field(const std::string& row_id, FieldFilter f) {
  if (f == FieldFilter::All) return true;
  const char want = f == FieldFilter::Gaussian ? 'G' : 'E';
  if (!row_id.empty() && (row_id[0] == 'G' || row_id[0] == 'E') && row_id.size() == 3) return row_id[0] == want;
  return row_id == (f == FieldFilter::Gaussian ? "gaussian" : "eisenstein");
}

const CatalogEntry& require_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
  const CatalogEntry* e = find_entry(entries, id);
  if (!e) throw Error(ErrorCode::NotInCatalog, id);
  return *e;
}

std::string tf(bool t) { return t ? "T" : "NT"; }

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> s = v;
  return format_index_set(s);
}

// catalog

std::string cmd_catalog(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  require_format(c, {"table", "csv", "json"});
  const auto entries = filter_entries(all, field_filter(c));
  if (c.format == "json") return dump(to_json(entries), c.compact) + "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : entries) rows.push_back(catalog_row(e));
  if (c.format == "csv") return csv_table(catalog_header(), rows);
  return text_table(catalog_header(), rows);
}

// verify

std::string verify_text(const VerificationReport& r, FieldFilter f) {
  std::ostringstream os;
  const auto& t = r.tallies;
  os << "mode: " << to_string(r.mode) << "\n";
  os << "printed tallies: Gaussian " << t.gaussian_t << " T / " << t.gaussian_nt << " NT, " << t.gaussian_max
     << " Max / " << t.gaussian_min << " Min; Eisenstein " << t.eisenstein_t << " T / " << t.eisenstein_nt << " NT, "
     << t.eisenstein_max << " Max / " << t.eisenstein_min << " Min\n\n";

  std::vector<std::vector<std::string>> rows;
  for (const auto& d : r.discrepancies.items)
    if (row_in_field(d.row_id, f)) rows.push_back({d.row_id, d.column, d.printed, d.recomputed});
  os << "discrepancies (" << rows.size() << "):\n";
  if (!rows.empty()) os << text_table({"row_id", "column", "printed", "recomputed"}, rows);

  std::vector<std::string> violations;
  for (const auto& v : r.t_violations)
    if (row_in_field(v.lower, f))
      violations.push_back(v.lower + " (" + tf(v.lower_t) + ") < " + v.upper + " (" + tf(v.upper_t) + ")");
  os << "\n(T)-invariance violations (" << violations.size() << "):\n";
  for (const auto& v : violations) os << "  " << v << "\n";

  os << "\ncross-field relations (" << r.cross_field.size() << "):\n";
  for (const auto& [a, b] : r.cross_field) os << "  " << a << " < " << b << "\n";

  os << "\nequivalence classes (comparability components within each table): Gaussian "
     << r.classes.gaussian.size() << " (printed " << kPrintedGaussianClasses << "), Eisenstein "
     << r.classes.eisenstein.size() << " (printed " << kPrintedEisensteinClasses << ")\n";
  os << "route agreement: " << r.route_checked << " checked, " << r.route_disagreements.size() << " disagreements";
  if (!r.route_disagreements.empty()) os << ": " << join(r.route_disagreements);
  os << "\nresult: " << (r.clean() ? "clean" : "discrepancies found") << "\n";
  return os.str();
}

std::string cmd_verify(const RunConfig& c, const std::vector<CatalogEntry>& all, int& code) {
  require_format(c, {"table", "csv", "json"});
  const VerificationReport r = verify(all, poset_mode(c));
  code = !r.route_disagreements.empty() ? kExitError : (r.clean() ? kExitClean : kExitDiscrepancies);
  const FieldFilter f = field_filter(c);
  if (c.format == "json") return dump(to_json(r), c.compact) + "\n";
  if (c.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : r.discrepancies.items)
      if (row_in_field(d.row_id, f)) rows.push_back({d.row_id, d.column, d.printed, d.recomputed});
    for (const auto& v : r.t_violations)
      if (row_in_field(v.lower, f)) rows.push_back({v.lower + "<" + v.upper, "t_invariance", tf(v.lower_t), tf(v.upper_t)});
    for (const auto& [a, b] : r.cross_field) rows.push_back({a + "<" + b, "cross_field", "incomparable", "comparable"});
    for (const auto& id : r.route_disagreements) rows.push_back({id, "route_agreement", "agree", "disagree"});
    return csv_table({"row_id", "column", "printed", "recomputed"}, rows);
  }
  return verify_text(r, f);
}

// poset

std::vector<CatalogEntry> poset_entries(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  auto entries = filter_entries(all, field_filter(c));
  if (c.int_only)
    std::erase_if(entries, [](const CatalogEntry& e) { return e.pair.s_size() != 1 || !check_int(e.pair.weights()).holds; });
  return entries;
}

std::string cmd_poset(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  const auto entries = poset_entries(c, all);
  const HasseDiagram h = hasse(entries, poset_mode(c));
  const auto t = t_column_values(entries, t_column(c));
  if (c.format == "dot") return to_dot(h, entries, t);
  if (c.format == "json") {
    Json j = to_json(h, entries, t);
    j["t_column"] = std::string(to_string(t_column(c)));
    j["extremal"] = entries.empty() ? Json(nullptr) : to_json(extremal(entries, t_column(c), poset_mode(c)));
    return dump(j, c.compact) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [a, b] : h.edges) rows.push_back({a, b});
  if (c.format == "csv") return csv_table({"lower", "upper"}, rows);
  return "mode: " + std::string(to_string(h.mode)) + "\nnodes: " + std::to_string(h.nodes.size()) +
         "\nedges: " + std::to_string(h.edges.size()) + "\n" + text_table({"lower", "upper"}, rows);
}

// polystable

std::string cmd_polystable(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  require_format(c, {"table", "csv", "json"});
  if (c.pair.empty()) {
    const auto rows = table1(all);
    if (c.format == "json") {
      Json j = Json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      return dump(j, c.compact) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
      cells.push_back({r.name, r.row_id, r.stratification, std::to_string(r.dim), std::to_string(r.polystable),
                       std::to_string(r.printed_polystable), std::to_string(r.census.weight_one_subsets)});
    const std::vector<std::string> header{"name", "row_id", "weights", "dim", "polystable", "printed", "subsets"};
    return c.format == "csv" ? csv_table(header, cells) : text_table(header, cells);
  }
  const CatalogEntry& e = require_entry(all, c.pair);
  if (c.format == "json") {
    Json j = polystable_json(e.pair);
    j["row_id"] = e.row_id;
    return dump(j, c.compact) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& q : polystable_points(e.pair))
    cells.push_back({one_based(q.part_a), one_based(q.part_b), std::string(to_string(stabilizer_type(e.pair, q))),
                     luna_local_model(e.pair, q).describe()});
  const std::vector<std::string> header{"A", "A^c", "stabilizer", "local_model"};
  if (c.format == "csv") return csv_table(header, cells);
  return e.row_id + " " + e.scaled() + " " + e.s_label() + ": dim " + std::to_string(dimension(e.pair)) + ", " +
         std::to_string(cells.size()) + " polystable points\n" + text_table(header, cells);
}

// transversality

std::string degree_text(const TransversalityReport& r) {
  std::ostringstream os;
  os << "m = " << r.m << "\ndisc = " << r.discriminant.to_cleared_string() << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& ch : r.charts)
    rows.push_back({std::to_string(ch.chart_index), std::to_string(ch.exceptional_multiplicity),
                    ch.restriction.to_cleared_string(), ch.squarefree ? "yes" : "no", std::string(to_string(ch.verdict))});
  os << text_table({"chart", "mu", "restriction", "squarefree", "verdict"}, rows);
  os << "verdict: " << to_string(r.verdict) << "\n";
  return os.str();
}

std::string cmd_transversality(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  require_format(c, {"table", "json"});
  if (c.degree.has_value() == !c.pair.empty()) throw UsageError("transversality needs exactly one of --m or --pair");
  if (c.degree) {
    if (*c.degree < kMinDeflatedDegree || *c.degree > kMaxDeflatedDegree)
      throw UsageError("--m must lie in [2, 6]");
    const auto r = transversality(*c.degree);
    return c.format == "json" ? dump(to_json(r), c.compact) + "\n" : degree_text(r);
  }
  const CatalogEntry& e = require_entry(all, c.pair);
  TransversalityCertifier certifier;
  const PairCertificate cert = certifier.certify(e.pair);
  const TResult t = check_t(e.pair);
  if (c.format == "json") {
    Json degrees = Json::array();
    for (auto m : cert.degrees) degrees.push_back(to_json(certifier.report(m)));
    Json j{{"row_id", e.row_id},
           {"polystable", polystable_json(e.pair)},
           {"degrees", degrees},
           {"certificate", to_json(cert)},
           {"check_t", t.holds},
           {"agrees", (cert.verdict == Transversality::Transversal) == t.holds}};
    return dump(j, c.compact) + "\n";
  }
  std::ostringstream os;
  os << e.row_id << " " << e.scaled() << " " << e.s_label() << "\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& q : polystable_points(e.pair))
    rows.push_back({one_based(q.part_a), one_based(q.part_b), luna_local_model(e.pair, q).describe()});
  os << text_table({"A", "A^c", "local_model"}, rows);
  for (auto m : cert.degrees) os << "disc" << m << ": " << to_string(certifier.report(m).verdict) << "\n";
  os << "verdict: " << to_string(cert.verdict) << "\n";
  os << "(T): " << (t.holds ? "holds" : "fails " + format_witness(*t.witness)) << "\n";
  os << "routes agree: " << ((cert.verdict == Transversality::Transversal) == t.holds ? "yes" : "no") << "\n";
  if (cert.swap_points > 0) os << "note: " << cert.swap_points << " point(s) with a swap stabilizer; verdict is pre-quotient\n";
  return os.str();
}

// reduce

std::string cmd_reduce(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  require_format(c, {"table", "json"});
  const auto r = reduction_targets(all, c.row_id, poset_mode(c));
  if (c.format == "json") {
    Json j = to_json(r);
    j["mode"] = std::string(to_string(poset_mode(c)));
    return dump(j, c.compact) + "\n";
  }
  return "mode: " + std::string(to_string(poset_mode(c))) + "\n" + r.row_id + "\nminimal below: " +
         join(r.minimal_below) + "\nmaximal above: " + join(r.maximal_above) + "\n";
}

// report

struct Table2Counts {
  std::size_t t = 0, nt = 0, max = 0, min = 0;
};

Table2Counts table2_counts(const std::vector<CatalogEntry>& all, SourceTable table, TColumn column) {
  Table2Counts out;
  const auto t = t_column_values(all, column);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].source_table == table) ++(t[i] ? out.t : out.nt);
  if (column == TColumn::Printed) {
    const auto p = printed_tallies(all);
    out.max = table == SourceTable::Gaussian ? p.gaussian_max : p.eisenstein_max;
    out.min = table == SourceTable::Gaussian ? p.gaussian_min : p.eisenstein_min;
  } else {
    const auto x = extremal(all, column);
    out.max = table == SourceTable::Gaussian ? x.gaussian_max : x.eisenstein_max;
    out.min = table == SourceTable::Gaussian ? x.gaussian_min : x.eisenstein_min;
  }
  return out;
}

std::string cmd_report(const RunConfig& c, const std::vector<CatalogEntry>& all) {
  require_format(c, {"table", "json"});
  RunConfig fig = c;
  fig.field = "gaussian";
  fig.int_only = true;
  fig.mode = "doran";
  const auto fig_entries = poset_entries(fig, all);
  const HasseDiagram figure2 = hasse(fig_entries, PosetMode::DoranSingleton);
  const auto fig_t = t_column_values(fig_entries, TColumn::Printed);
  const auto t1 = table1(all);

  if (c.format == "json") {
    Json table1_json = Json::array();
    for (const auto& r : t1) table1_json.push_back(to_json(r));
    Json table2 = Json::object();
    for (auto column : {TColumn::Printed, TColumn::Recomputed}) {
      Json col = Json::object();
      for (auto table : {SourceTable::Gaussian, SourceTable::Eisenstein}) {
        const auto k = table2_counts(all, table, column);
        col[std::string(to_string(field_of(table)))] = {{"t", k.t}, {"nt", k.nt}, {"max", k.max}, {"min", k.min}};
      }
      table2[std::string(to_string(column))] = col;
    }
    Json j{{"table1", table1_json},
           {"table2", table2},
           {"table3", to_json(filter_entries(all, FieldFilter::Gaussian))},
           {"table4", to_json(filter_entries(all, FieldFilter::Eisenstein))},
           {"figure2", to_json(figure2, fig_entries, fig_t)}};
    return dump(j, c.compact) + "\n";
  }

  std::ostringstream os;
  os << "Table 1: Gaussian INT weights\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : t1)
    rows.push_back({r.name, r.stratification, std::to_string(r.dim), std::to_string(r.polystable),
                    std::to_string(r.printed_polystable)});
  os << text_table({"name", "weights", "dim", "polystable", "printed"}, rows);

  os << "\nTable 2: tallies\n";
  rows.clear();
  for (auto column : {TColumn::Printed, TColumn::Recomputed})
    for (auto table : {SourceTable::Gaussian, SourceTable::Eisenstein}) {
      const auto k = table2_counts(all, table, column);
      rows.push_back({std::string(to_string(column)), std::string(to_string(field_of(table))), std::to_string(k.t),
                      std::to_string(k.nt), std::to_string(k.max), std::to_string(k.min)});
    }
  os << text_table({"column", "field", "T", "NT", "Max", "Min"}, rows);

  for (auto [title, filter] : {std::pair{"Table 3: Gaussian pairs", FieldFilter::Gaussian},
                               std::pair{"Table 4: Eisenstein pairs", FieldFilter::Eisenstein}}) {
    rows.clear();
    for (const auto& e : filter_entries(all, filter)) rows.push_back(catalog_row(e));
    os << "\n" << title << "\n" << text_table(catalog_header(), rows);
  }
  os << "\nFigure 2: inclusions of the Gaussian INT weights\n" << to_dot(figure2, fig_entries, fig_t);
  return os.str();
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.output);
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Verification and classification of Deligne-Mostow pairs", "dmu"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", c.field, "Source table filter")->check(CLI::IsMember({"all", "gaussian", "eisenstein"}));
  app.add_option("--t-column", c.t_column, "(T) column for labels and extremal elements")
      ->check(CLI::IsMember({"printed", "recomputed"}));
  app.add_option("--mode", c.mode, "Partial order")->check(CLI::IsMember({"strict", "doran"}));
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "csv", "json", "dot"}));
  app.add_flag("--compact", c.compact, "Single-line JSON");
  app.add_option("--output", c.output, "Write output to this file");
  app.add_option("--data", c.data, "Catalog JSON to use instead of the embedded one");

  app.add_subcommand("catalog", "Print the catalog rows");
  app.add_subcommand("verify", "Audit every printed column; exit 1 if anything differs");
  auto* poset = app.add_subcommand("poset", "Hasse diagram of the partial order");
  poset->add_flag("--int-only", c.int_only, "Keep only the singleton rows of INT weight vectors");
  auto* poly = app.add_subcommand("polystable", "Polystable points of a pair, or the Gaussian INT summary");
  poly->add_option("--pair", c.pair, "Row id");
  auto* trans = app.add_subcommand("transversality", "Blow-up transversality of a degree or a pair");
  unsigned degree = 0;
  auto* m_opt = trans->add_option("--m", degree, "Deflated degree");
  auto* pair_opt = trans->add_option("--pair", c.pair, "Row id");
  m_opt->excludes(pair_opt);
  auto* reduce = app.add_subcommand("reduce", "Minimal and maximal elements related to a row");
  reduce->add_option("row_id", c.row_id, "Row id")->required();
  app.add_subcommand("report", "Regenerate the summary tables and the inclusion diagram");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitError;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (m_opt->count() > 0) c.degree = degree;

  try {
    const auto catalog = c.data.empty() ? load_catalog() : load_catalog_file(c.data);
    int code = kExitClean;
    std::string text;
    if (c.command == "catalog")
      text = cmd_catalog(c, catalog);
    else if (c.command == "verify")
      text = cmd_verify(c, catalog, code);
    else if (c.command == "poset")
      text = cmd_poset(c, catalog);
    else if (c.command == "polystable")
      text = cmd_polystable(c, catalog);
    else if (c.command == "transversality")
      text = cmd_transversality(c, catalog);
    else if (c.command == "reduce")
      text = cmd_reduce(c, catalog);
    else
      text = cmd_report(c, catalog);
    emit(c, text, out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace dmu

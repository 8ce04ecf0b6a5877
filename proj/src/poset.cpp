#include "dmu/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace dmu {

std::string_view to_string(PosetMode mode) {
  return mode == PosetMode::Strict ? "strict" : "doran_singleton";
}

std::string_view to_string(TColumn column) {
  return column == TColumn::Printed ? "printed" : "recomputed";
}

bool is_coarsening(std::vector<Rational> coarse, std::vector<Rational> fine) {
  if (coarse.size() > fine.size()) return false;
  Rational a, b;
  for (const auto& x : coarse) a += x;
  for (const auto& x : fine) b += x;
  if (a != b) return false;
  if (coarse.empty()) return fine.empty();

  std::sort(coarse.begin(), coarse.end(), std::greater<>{});
  std::sort(fine.begin(), fine.end(), std::greater<>{});
  std::vector<Rational> room = coarse;
  std::vector<std::size_t> filled(coarse.size(), 0);

  // Place the fine weights largest first; bins with equal remaining room and
  // equal fill state are interchangeable, so only the first of them is tried.
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == fine.size())
      return std::all_of(room.begin(), room.end(), [](const Rational& r) { return r.is_zero(); }) &&
             std::all_of(filled.begin(), filled.end(), [](std::size_t f) { return f > 0; });
    const std::size_t empty_bins = static_cast<std::size_t>(std::count(filled.begin(), filled.end(), 0));
    if (fine.size() - k < empty_bins) return false;
    std::vector<std::pair<Rational, bool>> tried;
    for (std::size_t bin = 0; bin < room.size(); ++bin) {
      if (room[bin] < fine[k]) continue;
      const std::pair<Rational, bool> state{room[bin], filled[bin] > 0};
      if (std::find(tried.begin(), tried.end(), state) != tried.end()) continue;
      tried.push_back(state);
      room[bin] -= fine[k];
      ++filled[bin];
      const bool ok = place(k + 1);
      room[bin] += fine[k];
      --filled[bin];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

namespace {

bool strict_leq(const DMPair& a, const DMPair& b) {
  if (a.n() > b.n()) return false;
  if (a.s_size() != b.s_size() || a.s_weight() != b.s_weight()) return false;
  const auto wa = a.weights().ascending();
  const auto wb = b.weights().ascending();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wb[i] > wa[i]) return false;
  return true;
}

std::vector<Rational> without(std::span<const Rational> w, const Rational& value, std::size_t copies) {
  std::vector<Rational> out(w.begin(), w.end());
  for (std::size_t k = 0; k < copies; ++k) {
    const auto it = std::find(out.begin(), out.end(), value);
    if (it == out.end()) return {};
    out.erase(it);
  }
  return out;
}

bool collision_leq(const DMPair& a, const DMPair& b) {
  if (a.n() > b.n() || a.s_size() != b.s_size()) return false;
  const auto wa = a.weights().weights();
  const auto wb = b.weights().weights();
  if (a.s_size() == 1) {
    for (const auto& [value, mult] : a.weights().multiplicities()) {
      if (b.weights().multiplicity(value) == 0) continue;
      if (is_coarsening(without(wa, value, 1), without(wb, value, 1))) return true;
    }
    return false;
  }
  if (a.s_weight() != b.s_weight()) return false;
  return is_coarsening(without(wa, a.s_weight(), a.s_size()), without(wb, b.s_weight(), b.s_size()));
}

std::vector<std::string> ids_where(const std::vector<CatalogEntry>& entries, const std::vector<bool>& pick) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (pick[i]) out.push_back(entries[i].row_id);
  return out;
}

}  // namespace

bool leq(const DMPair& a, const DMPair& b, PosetMode mode) {
  return mode == PosetMode::Strict ? strict_leq(a, b) : collision_leq(a, b);
}

OrderMatrix::OrderMatrix(const std::vector<CatalogEntry>& entries, PosetMode mode)
    : n_(entries.size()), mode_(mode), rel_(n_ * n_, false) {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      rel_[a * n_ + b] = a == b || dmu::leq(entries[a].pair, entries[b].pair, mode);
}

HasseDiagram hasse(const std::vector<CatalogEntry>& entries, PosetMode mode) {
  const OrderMatrix order(entries, mode);
  HasseDiagram d;
  d.mode = mode;
  for (const auto& e : entries) d.nodes.push_back(e.row_id);
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = 0; b < entries.size(); ++b) {
      if (!order.less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < entries.size() && covered; ++c)
        if (order.less(a, c) && order.less(c, b)) covered = false;
      if (covered) d.edges.emplace_back(entries[a].row_id, entries[b].row_id);
    }
  }
  return d;
}

std::vector<bool> t_column_values(const std::vector<CatalogEntry>& entries, TColumn column) {
  std::vector<bool> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(column == TColumn::Printed ? e.printed_t : check_t(e.pair).holds);
  return out;
}

namespace {

struct ExtremalFlags {
  std::vector<bool> maximal_t;
  std::vector<bool> minimal_nt;
};

ExtremalFlags extremal_flags(const std::vector<CatalogEntry>& entries, const std::vector<bool>& t,
                             PosetMode mode) {
  const OrderMatrix order(entries, mode);
  const std::size_t n = entries.size();
  ExtremalFlags f{std::vector<bool>(n, false), std::vector<bool>(n, false)};
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i]) {
      bool top = true;
      for (std::size_t j = 0; j < n && top; ++j)
        if (t[j] && order.less(i, j)) top = false;
      f.maximal_t[i] = top;
    } else {
      bool bottom = true;
      for (std::size_t j = 0; j < n && bottom; ++j)
        if (!t[j] && order.less(j, i)) bottom = false;
      f.minimal_nt[i] = bottom;
    }
  }
  return f;
}

}  // namespace

ExtremalSummary extremal(const std::vector<CatalogEntry>& entries, TColumn column, PosetMode mode) {
  const auto flags = extremal_flags(entries, t_column_values(entries, column), mode);
  ExtremalSummary s;
  s.column = column;
  s.mode = mode;
  s.maximal_t = ids_where(entries, flags.maximal_t);
  s.minimal_nt = ids_where(entries, flags.minimal_nt);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool g = entries[i].source_table == SourceTable::Gaussian;
    if (flags.maximal_t[i]) (g ? s.gaussian_max : s.eisenstein_max)++;
    if (flags.minimal_nt[i]) (g ? s.gaussian_min : s.eisenstein_min)++;
  }
  return s;
}

std::vector<Extremal> recomputed_extremal(const std::vector<CatalogEntry>& entries, PosetMode mode) {
  const auto flags = extremal_flags(entries, t_column_values(entries, TColumn::Recomputed), mode);
  std::vector<Extremal> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.push_back(flags.maximal_t[i] ? Extremal::Max : (flags.minimal_nt[i] ? Extremal::Min : Extremal::None));
  return out;
}

std::vector<TViolation> t_invariance_check(const std::vector<CatalogEntry>& entries, PosetMode mode) {
  const OrderMatrix order(entries, mode);
  std::vector<TResult> t;
  for (const auto& e : entries) t.push_back(check_t(e.pair));
  std::vector<TViolation> out;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = 0; b < entries.size(); ++b)
      if (order.less(a, b) && t[a].holds != t[b].holds)
        out.push_back({entries[a].row_id, entries[b].row_id, t[a].holds, t[b].holds, t[a].witness, t[b].witness});
  return out;
}

ReductionTargets reduction_targets(const std::vector<CatalogEntry>& entries, std::string_view row_id,
                                   PosetMode mode) {
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.row_id == row_id; });
  if (it == entries.end()) throw Error(ErrorCode::NotInCatalog, std::string(row_id));
  const auto p = static_cast<std::size_t>(it - entries.begin());
  const OrderMatrix order(entries, mode);
  const std::size_t n = entries.size();
  std::vector<bool> is_min(n, true), is_max(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (order.less(j, i)) is_min[i] = false;
      if (order.less(i, j)) is_max[i] = false;
    }
  ReductionTargets r{std::string(row_id), {}, {}};
  for (std::size_t q = 0; q < n; ++q) {
    if (is_min[q] && order.leq(q, p)) r.minimal_below.push_back(entries[q].row_id);
    if (is_max[q] && order.leq(p, q)) r.maximal_above.push_back(entries[q].row_id);
  }
  // A finite poset always has extremal elements on both sides of p.
  if (r.minimal_below.empty() || r.maximal_above.empty())
    throw std::logic_error("reduction targets empty for " + std::string(row_id));
  return r;
}

EquivalenceClasses equivalence_classes(const std::vector<CatalogEntry>& entries, PosetMode mode) {
  const OrderMatrix order(entries, mode);
  const std::size_t n = entries.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (order.less(a, b) && entries[a].source_table == entries[b].source_table) parent[root(a)] = root(b);

  std::map<std::size_t, std::vector<std::string>> groups;
  std::vector<std::size_t> first_seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto& g = groups[root(i)];
    if (g.empty()) first_seen.push_back(root(i));
    g.push_back(entries[i].row_id);
  }
  EquivalenceClasses out;
  out.mode = mode;
  for (auto r : first_seen) {
    auto& g = groups[r];
    const auto& first = *std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.row_id == g.front(); });
    (first.source_table == SourceTable::Gaussian ? out.gaussian : out.eisenstein).push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> cross_field_relations(const std::vector<CatalogEntry>& entries,
                                                                       PosetMode mode) {
  const OrderMatrix order(entries, mode);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = 0; b < entries.size(); ++b)
      if (order.less(a, b) && entries[a].source_table != entries[b].source_table)
        out.emplace_back(entries[a].row_id, entries[b].row_id);
  return out;
}

std::string to_dot(const HasseDiagram& diagram, const std::vector<CatalogEntry>& entries,
                   const std::vector<bool>& t_values) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  // mode: " << to_string(diagram.mode) << "\n";
  os << "  rankdir=LR;\n";
  for (const auto& id : diagram.nodes) {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.row_id == id; });
    if (it == entries.end()) continue;
    const auto idx = static_cast<std::size_t>(it - entries.begin());
    os << "  \"" << id << "\" [label=\"" << it->scaled() << "|" << it->s_label() << "|"
       << (t_values[idx] ? "T" : "NT") << "\"];\n";
  }
  for (const auto& [from, to] : diagram.edges) os << "  \"" << from << "\" -> \"" << to << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dmu
